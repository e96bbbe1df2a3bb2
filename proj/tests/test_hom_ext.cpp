#include <doctest.h>

#include <random>

#include "canrep/hom_ext.hpp"
#include "canrep/small_rank.hpp"

using namespace canrep;

namespace {

CanonicalAlgebra alg237() {
  return CanonicalAlgebra(make_weights({2, 3, 7}), {Rat(0), Rat(1)});
}

// A deterministic relation-satisfying module: a sum of simples and
// projectives conjugated by a random invertible change of basis.
Rep scrambled_sum(const CanonicalAlgebra& alg, std::mt19937& rng, int pieces) {
  std::uniform_int_distribution<int> vertex(0, alg.vertex_count() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  Rep acc = zero_rep(alg);
  for (int k = 0; k < pieces; ++k) {
    const int v = vertex(rng);
    acc = direct_sum(acc, coin(rng) ? simple_rep(alg, v)
                                    : projective_rep(alg, v));
  }
  std::uniform_int_distribution<int> entry(-2, 2);
  std::vector<Mat> g;
  for (int v = 0; v < alg.vertex_count(); ++v) {
    const int d = acc.dims[v];
    Mat u = Mat::identity(d);
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) u.at(i, j) = entry(rng);
    g.push_back(std::move(u));
  }
  return base_change(acc, g);
}

}  // namespace

TEST_CASE("layout dimensions") {
  const CanonicalAlgebra alg = alg237();
  const Rep p = projective_rep(alg, alg.vertex_c());
  const PairLayout layout = pair_layout(p, p);
  long long c0 = 0;
  for (int v = 0; v < alg.vertex_count(); ++v)
    c0 += static_cast<long long>(p.dims[v]) * p.dims[v];
  CHECK(layout.c0_dim == c0);
  CHECK(layout.c1_dim > 0);
  CHECK(layout.c0_off.front() == 0);
}

TEST_CASE("hom against projectives reads off dimensions") {
  const CanonicalAlgebra alg = alg237();
  std::mt19937 rng(101);
  std::vector<Rep> probes;
  probes.push_back(projective_rep(alg, alg.vertex_c()));
  probes.push_back(simple_rep(alg, alg.vertex_zero()));
  probes.push_back(scrambled_sum(alg, rng, 3));
  probes.push_back(
      rank_one(alg, RankOneSpec{std::vector<int>{1, 1, 3}, 1}));

  for (const Rep& n : probes) {
    for (int v = 0; v < alg.vertex_count(); ++v) {
      const Rep p = projective_rep(alg, v);
      const auto [h, e] = hom_ext(p, n);
      CHECK(h == n.dims[v]);
      CHECK(e == 0);
    }
  }
}

TEST_CASE("simple extensions point against the arrows") {
  const CanonicalAlgebra alg = alg237();
  const Rep s0 = simple_rep(alg, alg.vertex_zero());
  const Rep sx = simple_rep(alg, alg.arm_vertex(1, 1));
  CHECK(ext_dim(sx, s0) == 1);
  CHECK(ext_dim(s0, sx) == 0);
  CHECK(hom_dim(s0, s0) == 1);
  CHECK(hom_dim(s0, sx) == 0);
}

TEST_CASE("hom basis vectors are morphisms") {
  const CanonicalAlgebra alg = alg237();
  std::mt19937 rng(103);
  const Rep x = scrambled_sum(alg, rng, 3);
  const Rep y = scrambled_sum(alg, rng, 3);
  const auto basis = hom_basis(x, y);
  CHECK(static_cast<long long>(basis.size()) == hom_dim(x, y));
  for (const auto& f : basis) {
    for (int id = 0; id < alg.arrow_count(); ++id) {
      const Arrow& ar = alg.arrow(id);
      CHECK(f[ar.src] * x.mats[id] == y.mats[id] * f[ar.tgt]);
    }
  }
}

TEST_CASE("euler form equals hom minus ext") {
  const CanonicalAlgebra alg = alg237();
  std::mt19937 rng(107);
  for (int trial = 0; trial < 8; ++trial) {
    const Rep x = scrambled_sum(alg, rng, 2);
    const Rep y = scrambled_sum(alg, rng, 2);
    const auto [h, e] = hom_ext(x, y);
    CHECK(h - e == euler_form(alg, x.dims, y.dims));
  }
}

TEST_CASE("image of the difference map lies inside the subspace") {
  const CanonicalAlgebra alg = alg237();
  std::mt19937 rng(109);
  for (int trial = 0; trial < 5; ++trial) {
    const Rep x = scrambled_sum(alg, rng, 2);
    const Rep y = scrambled_sum(alg, rng, 2);
    CHECK(image_delta_inside_u(x, y));
  }
}

TEST_CASE("ext refuses modules that break the relations") {
  const CanonicalAlgebra alg = alg237();
  Rep bad = projective_rep(alg, alg.vertex_c());
  bad.mats[alg.arrow_id(3, 1)].at(1, 0) = Rat(5);
  const Rep good = simple_rep(alg, alg.vertex_zero());
  CHECK_THROWS_AS(ext_dim(bad, good), std::invalid_argument);
  CHECK_THROWS_AS(ext_dim(good, bad), std::invalid_argument);
  // hom stays defined for arbitrary shape-consistent data.
  CHECK_NOTHROW(hom_dim(bad, good));
}

TEST_CASE("sparse and dense ranks agree on pair models") {
  const CanonicalAlgebra alg = alg237();
  std::mt19937 rng(113);
  for (int trial = 0; trial < 4; ++trial) {
    const Rep x = scrambled_sum(alg, rng, 2);
    const Rep y = scrambled_sum(alg, rng, 2);
    CHECK(sparse_rank(delta_sparse(x, y)) == rank(delta_matrix(x, y)));
    CHECK(sparse_rank(u_constraint_sparse(x, y)) ==
          rank(u_constraint_matrix(x, y)));
  }
}

TEST_CASE("u subspace basis satisfies the constraints") {
  const CanonicalAlgebra alg = alg237();
  const Rep x = rank_one(alg, RankOneSpec{std::vector<int>{0, 0, 0}, 1});
  const Rep y = rank_one(alg, RankOneSpec{std::vector<int>{1, 2, 6}, 0});
  const Mat u = u_subspace_basis(x, y);
  CHECK((u_constraint_matrix(x, y) * u).is_zero());
  const PairLayout layout = pair_layout(x, y);
  CHECK(u.cols() == layout.c1_dim - rank(u_constraint_matrix(x, y)));
}

TEST_CASE("tensor multiplicativity of ext") {
  const CanonicalAlgebra alg = alg237();
  const Rep x = simple_rep(alg, alg.arm_vertex(3, 1));
  const Rep y = simple_rep(alg, alg.vertex_zero());
  REQUIRE(ext_dim(x, y) == 1);
  for (int u = 1; u <= 3; ++u)
    for (int v = 1; v <= 2; ++v)
      CHECK(ext_dim(tensor_power(x, u), tensor_power(y, v)) == u * v);
}

TEST_CASE("ext cocycles and middle terms") {
  const CanonicalAlgebra alg = alg237();
  const Rep x = simple_rep(alg, alg.arm_vertex(3, 1));
  const Rep y = simple_rep(alg, alg.vertex_zero());
  const Mat reps = ext_cocycles(x, y);
  REQUIRE(reps.cols() == 1);

  std::vector<Rat> cocycle;
  for (int r = 0; r < reps.rows(); ++r) cocycle.push_back(reps.at(r, 0));
  const Rep mid = extension_middle_term(x, y, cocycle);
  CHECK(check_relations(mid).ok());
  CHECK(mid.dims[alg.vertex_zero()] == 1);
  CHECK(mid.dims[alg.arm_vertex(3, 1)] == 1);
  CHECK(total_dimension(mid) == total_dimension(x) + total_dimension(y));
  // Nonsplit: the sub Y no longer splits off and X no longer embeds.
  CHECK(hom_dim(x, mid) == 0);
  CHECK(hom_dim(mid, y) == 0);

  // The zero cocycle assembles the direct sum, where both do.
  const Rep split = extension_middle_term(
      x, y, std::vector<Rat>(cocycle.size(), Rat(0)));
  CHECK(check_relations(split).ok());
  CHECK(hom_dim(x, split) == 1);
  CHECK(hom_dim(split, y) == 1);
}

TEST_CASE("middle term rejects vectors outside the subspace") {
  const CanonicalAlgebra alg = alg237();
  // For the sink projective against itself the constraint block is nonzero,
  // so some level-one vector violates it.
  const Rep p = projective_rep(alg, alg.vertex_c());
  const Mat constraints = u_constraint_matrix(p, p);
  REQUIRE(rank(constraints) > 0);
  int witness = -1;
  for (int c = 0; c < constraints.cols() && witness < 0; ++c)
    for (int r = 0; r < constraints.rows(); ++r)
      if (constraints.at(r, c) != 0) {
        witness = c;
        break;
      }
  REQUIRE(witness >= 0);
  std::vector<Rat> cocycle(constraints.cols(), Rat(0));
  cocycle[witness] = 1;
  CHECK_THROWS_AS(extension_middle_term(p, p, cocycle),
                  std::invalid_argument);
  CHECK_THROWS_AS(extension_middle_term(p, p, std::vector<Rat>{Rat(1)}),
                  std::invalid_argument);
}

TEST_CASE("projectives and simples are exceptional") {
  const CanonicalAlgebra alg = alg237();
  for (int v = 0; v < alg.vertex_count(); ++v) {
    CHECK(is_exceptional(projective_rep(alg, v)));
    CHECK(is_exceptional(simple_rep(alg, v)));
  }
  const Rep two = tensor_power(simple_rep(alg, alg.vertex_zero()), 2);
  CHECK_FALSE(is_exceptional(two));
}

TEST_CASE("orthogonal pair report") {
  const CanonicalAlgebra alg = alg237();
  const Rep x = simple_rep(alg, alg.arm_vertex(1, 1));
  const Rep y = simple_rep(alg, alg.vertex_zero());
  const OrthogonalityReport report = orthogonal_pair_check(x, y);
  CHECK(report.ok());
  CHECK(report.n == 1);

  // Identical modules are never orthogonal: hom(X, X) = 1.
  CHECK_FALSE(orthogonal_pair_check(x, x).ok());
}
