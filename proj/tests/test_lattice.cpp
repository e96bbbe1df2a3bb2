#include <doctest.h>

#include <random>

#include "canrep/lattice.hpp"

using namespace canrep;

namespace {

const Weights W237 = make_weights({2, 3, 7});
const Weights W2222 = make_weights({2, 2, 2, 2});
const Weights W23 = make_weights({2, 3});

}  // namespace

TEST_CASE("weights validation") {
  CHECK_THROWS_AS(make_weights({2}), std::invalid_argument);
  CHECK_THROWS_AS(make_weights({2, 1}), std::invalid_argument);
  CHECK_NOTHROW(make_weights({2, 2}));
}

TEST_CASE("euler characteristic and wildness") {
  CHECK(euler_characteristic(W237) == rat_frac(-1, 42));
  CHECK(is_wild(W237));
  CHECK(euler_characteristic(make_weights({3, 3, 3})) == 0);
  CHECK_FALSE(is_wild(make_weights({3, 3, 3})));
  CHECK(euler_characteristic(W2222) == 0);
  CHECK(euler_characteristic(make_weights({2, 3, 5})) == rat_frac(1, 30));
  CHECK_FALSE(is_wild(make_weights({2, 3, 5})));
  CHECK_FALSE(is_wild(W23));
}

TEST_CASE("normal form") {
  const LatticeElement e = normal_form(W237, 1, {-1, -1, -1});
  CHECK(e.a == -2);
  CHECK(e.x == std::vector<long long>{1, 2, 6});
  CHECK(lattice_to_string(e) == "-2;1,2,6");

  CHECK(normal_form(W237, 0, {2, 0, 0}) == lattice_c(W237));
  CHECK_THROWS_AS(normal_form(W237, 0, {1, 1}), std::invalid_argument);
}

TEST_CASE("normal form against the defining relations") {
  // Independent witness: the difference between raw and normalized
  // coefficients must be an exact multiple of each relation p_i x_i = c.
  std::mt19937 rng(31);
  std::uniform_int_distribution<long long> coeff(-20, 20);
  for (const Weights& w : {W237, W2222, W23}) {
    for (int trial = 0; trial < 50; ++trial) {
      const long long a = coeff(rng);
      std::vector<long long> raw(w.p.size());
      for (auto& r : raw) r = coeff(rng);
      const LatticeElement e = normal_form(w, a, raw);
      long long carried = 0;
      for (size_t i = 0; i < raw.size(); ++i) {
        CHECK(e.x[i] >= 0);
        CHECK(e.x[i] < w.p[i]);
        const long long diff = raw[i] - e.x[i];
        CHECK(diff % w.p[i] == 0);
        carried += diff / w.p[i];
      }
      CHECK(e.a == a + carried);
    }
  }
}

TEST_CASE("lattice arithmetic") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<long long> coeff(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long long> xa(3), xb(3);
    for (auto& v : xa) v = coeff(rng);
    for (auto& v : xb) v = coeff(rng);
    const long long aa = coeff(rng), ab = coeff(rng);
    const LatticeElement ea = normal_form(W237, aa, xa);
    const LatticeElement eb = normal_form(W237, ab, xb);
    std::vector<long long> xs(3);
    for (int i = 0; i < 3; ++i) xs[i] = xa[i] + xb[i];
    CHECK(add(ea, eb) == normal_form(W237, aa + ab, xs));
    CHECK(add(ea, neg(ea)) == lattice_zero(W237));
    CHECK(sub(ea, eb) == add(ea, neg(eb)));
    CHECK(scale(3, ea) == add(ea, add(ea, ea)));
  }
  CHECK_THROWS_AS(add(lattice_zero(W237), lattice_zero(W2222)),
                  std::invalid_argument);
}

TEST_CASE("dualizing element") {
  const LatticeElement w237 = dualizing_element(W237);
  CHECK(w237.a == -2);
  CHECK(w237.x == std::vector<long long>{1, 2, 6});

  const LatticeElement w23 = dualizing_element(W23);
  CHECK(w23.a == -2);
  CHECK(w23.x == std::vector<long long>{1, 2});

  const LatticeElement w2222 = dualizing_element(W2222);
  CHECK(w2222.a == -2);
  CHECK(w2222.x == std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("nonnegativity") {
  CHECK(is_nonnegative(lattice_zero(W237)));
  CHECK(is_nonnegative(lattice_c(W237)));
  CHECK(is_nonnegative(lattice_x(W237, 2)));
  CHECK_FALSE(is_nonnegative(dualizing_element(W237)));
  CHECK_FALSE(is_nonnegative(neg(lattice_c(W237))));
}

TEST_CASE("translation shift") {
  const LatticeElement zero = lattice_zero(W237);
  CHECK(tau_shift(zero, 0) == zero);
  CHECK(tau_shift(zero, 1) == dualizing_element(W237));
  CHECK(tau_shift(zero, 2) == scale(2, dualizing_element(W237)));
  CHECK_THROWS_AS(tau_shift(zero, -1), std::invalid_argument);
}

TEST_CASE("translation bound") {
  const LatticeElement zero = lattice_zero(W237);
  CHECK(translation_bound({zero}) == 2);
  const LatticeElement minus = normal_form(W237, -1, {0, 0, 0});
  CHECK(translation_bound({minus}) == 3);
  CHECK(translation_bound({zero, minus}) == 3);
  CHECK_THROWS_AS(translation_bound({}), std::invalid_argument);
}

TEST_CASE("lattice text round trip") {
  const LatticeElement e = normal_form(W237, -2, {1, 2, 6});
  const auto back = lattice_from_string(W237, lattice_to_string(e));
  REQUIRE(back.has_value());
  CHECK(*back == e);

  // The parser renormalizes arbitrary integer coefficients.
  const auto raw = lattice_from_string(W237, "1;-1,-1,-1");
  REQUIRE(raw.has_value());
  CHECK(*raw == normal_form(W237, 1, {-1, -1, -1}));

  CHECK_FALSE(lattice_from_string(W237, "1,2").has_value());
  CHECK_FALSE(lattice_from_string(W237, "x;1,2,3").has_value());
  CHECK_FALSE(lattice_from_string(W237, "0;1,2").has_value());
  CHECK_FALSE(lattice_from_string(W237, "0;1,2,3,4").has_value());
  CHECK_FALSE(lattice_from_string(W237, "0;1,,3").has_value());
}

TEST_CASE("descending determinant walk leaves the nonnegative cone slowly") {
  // The probe element behind the shifted-determinant positivity question is
  // c + omega - (det + n*omega). Its degree falls by only 1/42 per step over
  // (2,3,7), so small cutoffs for "never nonnegative again" are wrong.
  const LatticeElement det = lattice_zero(W237);
  const LatticeElement c_plus_omega =
      add(lattice_c(W237), dualizing_element(W237));
  auto probe = [&](long long n) {
    return sub(c_plus_omega, tau_shift(det, n));
  };

  // Frozen counterexample to the two-step cutoff suggested by the bound
  // formula (which gives 2 for the zero determinant): at n = 3 the probe is
  // back inside the nonnegative cone.
  CHECK(translation_bound({det}) == 2);
  CHECK(probe(3).a == 0);
  CHECK(probe(3).x == std::vector<long long>{0, 2, 2});
  CHECK(is_nonnegative(probe(3)));

  // True exit point: the probe stays nonnegative through n = 43 (where it is
  // exactly zero) and is negative for every larger n.
  int last_nonneg = -1;
  for (int n = 0; n <= 60; ++n) {
    if (is_nonnegative(probe(n))) last_nonneg = n;
  }
  CHECK(last_nonneg == 43);
  CHECK(probe(43) == lattice_zero(W237));
  CHECK_FALSE(is_nonnegative(probe(44)));
}

TEST_CASE("walks from strictly positive determinants exit immediately") {
  // For determinants with c coefficient 1 the probe degree starts at zero
  // and the bound formula is safe; every step past it stays negative.
  for (long long x1 = 0; x1 < 2; ++x1)
    for (long long x2 = 0; x2 < 3; ++x2)
      for (long long x3 = 0; x3 < 7; ++x3) {
        const LatticeElement det = normal_form(W237, 1, {x1, x2, x3});
        const LatticeElement c_plus_omega =
            add(lattice_c(W237), dualizing_element(W237));
        const long long bound = translation_bound({det});
        for (long long n = bound + 1; n <= bound + 20; ++n)
          CHECK_FALSE(is_nonnegative(sub(c_plus_omega, tau_shift(det, n))));
      }
}
