#include <doctest.h>

#include <random>
#include <stdexcept>

#include "canrep/kronecker.hpp"

using namespace canrep;

namespace {

KroneckerRep simple_source(int n) { return {n, 1, 0, std::vector<Mat>(n, Mat(1, 0))}; }
KroneckerRep simple_sink(int n) { return {n, 0, 1, std::vector<Mat>(n, Mat(0, 1))}; }

}  // namespace

TEST_CASE("dimension recurrence") {
  CHECK(kronecker_dims(3, 6) == std::vector<long long>{0, 1, 3, 8, 21, 55});
  CHECK(kronecker_dims(4, 6) == std::vector<long long>{0, 1, 4, 15, 56, 209});
  CHECK(kronecker_dims(2, 6) == std::vector<long long>{0, 1, 2, 3, 4, 5});
  CHECK(kronecker_dims(1, 5) == std::vector<long long>{0, 1, 1, 0, -1});
  for (int n = 2; n <= 4; ++n) {
    const auto d = kronecker_dims(n, 8);
    for (size_t k = 0; k + 1 < d.size(); ++k)
      CHECK(d[k + 1] * d[k + 1] + d[k] * d[k] - n * d[k] * d[k + 1] == 1);
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate_kronecker({0, 1, 1, {}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_kronecker({2, 1, 1, {Mat(1, 1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_kronecker({1, 2, 1, {Mat(1, 1)}}),
                  std::invalid_argument);
  CHECK_NOTHROW(validate_kronecker(simple_source(3)));
}

TEST_CASE("simples extend one way") {
  for (int n = 1; n <= 4; ++n) {
    const KroneckerRep s1 = simple_source(n);
    const KroneckerRep s2 = simple_sink(n);
    CHECK(kronecker_hom_ext(s1, s1) == std::pair<long long, long long>{1, 0});
    CHECK(kronecker_hom_ext(s2, s2) == std::pair<long long, long long>{1, 0});
    CHECK(kronecker_hom_ext(s1, s2) == std::pair<long long, long long>{0, 0});
    CHECK(kronecker_hom_ext(s2, s1) ==
          std::pair<long long, long long>{0, static_cast<long long>(n)});
  }
}

TEST_CASE("first preprojectives are the unit columns") {
  const KroneckerRep p0 = exceptional_preprojective(3, 0);
  CHECK(p0.v == 1);
  CHECK(p0.u == 0);

  const KroneckerRep p1 = exceptional_preprojective(3, 1);
  CHECK(p1.v == 3);
  CHECK(p1.u == 1);
  CHECK(p1.mats[0] == Mat::from_rows({{1}, {0}, {0}}));
  CHECK(p1.mats[1] == Mat::from_rows({{0}, {1}, {0}}));
  CHECK(p1.mats[2] == Mat::from_rows({{0}, {0}, {1}}));
}

TEST_CASE("tame quotient step lands on the normalized form") {
  const KroneckerRep p2 = exceptional_preprojective(2, 2);
  CHECK(p2.v == 3);
  CHECK(p2.u == 2);
  CHECK(p2.mats[0] == Mat::from_rows({{1, 0}, {0, 1}, {0, 0}}));
  CHECK(p2.mats[1] == Mat::from_rows({{0, 1}, {0, 0}, {1, 0}}));
}

TEST_CASE("preprojective chain is certified and oriented") {
  for (int n = 2; n <= 4; ++n) {
    const int kmax = n == 4 ? 3 : 4;
    const auto d = kronecker_dims(n, kmax + 2);
    KroneckerRep last;
    for (int k = 0; k <= kmax; ++k) {
      const KroneckerRep p = exceptional_preprojective(n, k);
      CHECK(p.v == d[k + 1]);
      CHECK(p.u == d[k]);
      CHECK(binary_disjoint_support(p));
      if (k > 0) {
        CHECK(kronecker_hom_ext(last, p) ==
              std::pair<long long, long long>{n, 0});
        CHECK(kronecker_hom_ext(p, last) ==
              std::pair<long long, long long>{0, 0});
      }
      last = p;
    }
  }
}

TEST_CASE("preinjectives transpose the family") {
  const KroneckerRep i0 = exceptional_preinjective(3, 0);
  CHECK(i0.v == 0);
  CHECK(i0.u == 1);

  const KroneckerRep i2 = exceptional_preinjective(2, 2);
  CHECK(i2.v == 2);
  CHECK(i2.u == 3);
  CHECK(i2.mats[0] == Mat::from_rows({{1, 0, 0}, {0, 1, 0}}));
  CHECK(i2.mats[1] == Mat::from_rows({{0, 0, 1}, {1, 0, 0}}));
  certify_exceptional_kronecker(i2);

  const KroneckerRep i3 = exceptional_preinjective(3, 3);
  CHECK(i3.v == 8);
  CHECK(i3.u == 21);
  certify_exceptional_kronecker(i3);
  const KroneckerRep i2b = exceptional_preinjective(3, 2);
  CHECK(kronecker_hom_ext(i3, i2b) == std::pair<long long, long long>{3, 0});
  CHECK(kronecker_hom_ext(i2b, i3) == std::pair<long long, long long>{0, 0});
}

TEST_CASE("one arrow family is finite") {
  const KroneckerRep p1 = exceptional_preprojective(1, 1);
  CHECK(p1.v == 1);
  CHECK(p1.u == 1);
  CHECK(p1.mats[0] == Mat::from_rows({{1}}));
  const KroneckerRep p2 = exceptional_preprojective(1, 2);
  CHECK(p2.v == 0);
  CHECK(p2.u == 1);
  CHECK_THROWS_AS(exceptional_preprojective(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(exceptional_preinjective(1, 4), std::invalid_argument);
}

TEST_CASE("binary disjoint support audit") {
  KroneckerRep ok{2, 2, 1, {Mat::from_rows({{1}, {0}}), Mat::from_rows({{0}, {1}})}};
  CHECK(binary_disjoint_support(ok));

  KroneckerRep overlap{2, 1, 1, {Mat::from_rows({{1}}), Mat::from_rows({{1}})}};
  CHECK_FALSE(binary_disjoint_support(overlap));
  CHECK_THROWS_AS(certify_exceptional_kronecker(overlap), std::logic_error);

  KroneckerRep scaled{1, 1, 1, {Mat::from_rows({{2}})}};
  CHECK_FALSE(binary_disjoint_support(scaled));

  KroneckerRep negative{1, 1, 1, {Mat::from_rows({{-1}})}};
  CHECK_FALSE(binary_disjoint_support(negative));

  // Binary and disjoint, but decomposable: certification must still refuse.
  KroneckerRep split{2, 1, 1, {Mat::from_rows({{1}}), Mat::from_rows({{0}})}};
  CHECK(binary_disjoint_support(split));
  CHECK_THROWS_AS(certify_exceptional_kronecker(split), std::logic_error);
}

TEST_CASE("dense and sparse difference maps agree") {
  std::mt19937 gen(4242);
  std::uniform_int_distribution<int> dim(0, 4);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 3;
    KroneckerRep x{n, 1 + dim(gen), dim(gen), {}};
    KroneckerRep y{n, dim(gen), 1 + dim(gen), {}};
    for (KroneckerRep* m : {&x, &y}) {
      for (int j = 0; j < n; ++j) {
        Mat a(m->v, m->u);
        for (int r = 0; r < m->v; ++r)
          for (int c = 0; c < m->u; ++c) a.at(r, c) = entry(gen);
        m->mats.push_back(std::move(a));
      }
    }
    const long long dense = rank(kronecker_delta_matrix(x, y));
    CHECK(dense == sparse_rank(kronecker_delta_sparse(x, y)));
  }
}
