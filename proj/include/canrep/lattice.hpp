#pragma once

#include "canrep/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace canrep {

// Weight sequence p_1..p_t of a star quiver: at least two arms, every weight
// at least 2.
struct Weights {
  std::vector<long long> p;

  int arms() const { return static_cast<int>(p.size()); }
  bool operator==(const Weights&) const = default;
};

Weights make_weights(std::vector<long long> p);

// 2 - t + sum 1/p_i. Negative exactly in the wild case.
Rat euler_characteristic(const Weights& w);
bool is_wild(const Weights& w);

// Element of the rank-one lattice on generators c, x_1, ..., x_t modulo
// p_i x_i = c, kept in normal form 0 <= x_i < p_i. The weight sequence rides
// along so arithmetic across different stars is rejected.
struct LatticeElement {
  Weights w;
  long long a = 0;              // coefficient of c
  std::vector<long long> x;     // arm coefficients, normalized

  bool operator==(const LatticeElement&) const = default;
};

LatticeElement normal_form(const Weights& w, long long a,
                           std::vector<long long> raw);
LatticeElement lattice_zero(const Weights& w);
LatticeElement lattice_c(const Weights& w);
LatticeElement lattice_x(const Weights& w, int arm);  // arm is 1-based

LatticeElement add(const LatticeElement& a, const LatticeElement& b);
LatticeElement sub(const LatticeElement& a, const LatticeElement& b);
LatticeElement neg(const LatticeElement& a);
LatticeElement scale(long long k, const LatticeElement& a);

// (t-2)c - x_1 - ... - x_t, in normal form.
LatticeElement dualizing_element(const Weights& w);

// An element is >= 0 when it is a sum of generators, which in normal form
// means the c coefficient is nonnegative.
bool is_nonnegative(const LatticeElement& e);

// e + n * dualizing element. Requires n >= 0.
LatticeElement tau_shift(const LatticeElement& e, long long n);

// max over the sample of floor((1 - a_j) * (t - 2)) + 1, where a_j is the
// normal-form c coefficient. Requires a nonempty sample over one star.
long long translation_bound(const std::vector<LatticeElement>& dets);

// "a;x1,...,xt"
std::string lattice_to_string(const LatticeElement& e);

// Accepts arbitrary integer coefficients and renormalizes.
std::optional<LatticeElement> lattice_from_string(const Weights& w,
                                                  const std::string& s);

}  // namespace canrep
