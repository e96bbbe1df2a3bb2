#include <doctest.h>

#include "canrep/algebra.hpp"

using namespace canrep;

namespace {

CanonicalAlgebra alg237() {
  return CanonicalAlgebra(make_weights({2, 3, 7}), {Rat(0), Rat(1)});
}

}  // namespace

TEST_CASE("quiver bookkeeping") {
  const CanonicalAlgebra alg = alg237();
  CHECK(alg.vertex_count() == 11);
  CHECK(alg.arrow_count() == 12);
  CHECK(alg.relation_count() == 1);
  CHECK(alg.normalized());

  CHECK(alg.vertex_label(alg.vertex_zero()) == "v0");
  CHECK(alg.vertex_label(alg.vertex_c()) == "vc");
  CHECK(alg.vertex_label(alg.arm_vertex(3, 2)) == "x_3_2");
  CHECK(alg.arm_vertex(1, 0) == alg.vertex_zero());
  CHECK(alg.arm_vertex(1, 2) == alg.vertex_c());
  CHECK(alg.arm_vertex(3, 7) == alg.vertex_c());

  const Arrow& first = alg.arrow(alg.arrow_id(1, 1));
  CHECK(first.src == alg.vertex_zero());
  CHECK(first.tgt == alg.arm_vertex(1, 1));
  const Arrow& last = alg.arrow(alg.arrow_id(3, 7));
  CHECK(last.src == alg.arm_vertex(3, 6));
  CHECK(last.tgt == alg.vertex_c());
  CHECK(alg.arrow_label(alg.arrow_id(2, 3)) == "alpha_2_3");

  CHECK(alg.vertex_by_label("x_2_1") == alg.arm_vertex(2, 1));
  CHECK(alg.vertex_by_label("v0") == alg.vertex_zero());
  CHECK_FALSE(alg.vertex_by_label("x_1_2").has_value());
  CHECK_FALSE(alg.vertex_by_label("x_9_1").has_value());
  CHECK(alg.arrow_by_label("alpha_3_7") == alg.arrow_id(3, 7));
  CHECK_FALSE(alg.arrow_by_label("alpha_3_8").has_value());
  CHECK_FALSE(alg.arrow_by_label("beta_1_1").has_value());
}

TEST_CASE("two armed star has no relations") {
  const CanonicalAlgebra alg(make_weights({2, 3}), {Rat(0)});
  CHECK(alg.relation_count() == 0);
  CHECK(relations(alg).empty());
  CHECK(alg.vertex_count() == 5);
  CHECK(alg.arrow_count() == 5);
  CHECK(alg.normalized());
}

TEST_CASE("lambda validation") {
  CHECK_THROWS_AS(CanonicalAlgebra(make_weights({2, 3, 7}), {Rat(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      CanonicalAlgebra(make_weights({2, 2, 2, 2}), {Rat(0), Rat(1), Rat(1)}),
      std::invalid_argument);

  // Non-normalized parameters are legal, only flagged.
  const CanonicalAlgebra odd(make_weights({2, 3, 7}),
                             {rat_frac(1, 2), Rat(4)});
  CHECK_FALSE(odd.normalized());
}

TEST_CASE("admissible coefficient differences") {
  const CanonicalAlgebra alg = alg237();
  CHECK(alg.coefficient_differences() ==
        std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});

  const CanonicalAlgebra four(make_weights({2, 2, 2, 2}),
                              {Rat(0), Rat(1), Rat(3)});
  const auto d = four.coefficient_differences();
  CHECK(d.size() == 7);  // 0, ±1, ±2, ±3
  CHECK(d.front() == Rat(-3));
  CHECK(d.back() == Rat(3));
}

TEST_CASE("relation descriptors") {
  const CanonicalAlgebra alg = alg237();
  const auto rels = relations(alg);
  REQUIRE(rels.size() == 1);
  CHECK(rels[0].arm == 3);
  CHECK(rels[0].lambda == Rat(1));
  CHECK(rels[0].arm_i.from == 1);
  CHECK(rels[0].arm_i.to == 7);
  CHECK(rels[0].arm_1.to == 2);
  CHECK(rels[0].arm_2.to == 3);

  CHECK_THROWS_AS(path(alg, 1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(path(alg, 1, 1, 3), std::invalid_argument);
  CHECK_NOTHROW(path(alg, 3, 2, 7));
}
