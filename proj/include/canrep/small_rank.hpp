#pragma once

#include "canrep/rep.hpp"

namespace canrep {

// The (n+k) x n matrix with the identity in its top rows and zero rows below.
Mat identity_over_zeros(int n, int k);
// Zero rows on top, identity at the bottom.
Mat zeros_over_identity(int n, int k);

// Window description of a regular exceptional module concentrated around one
// arm: quasi-top position a (1 <= a <= p_i) and quasi-length l
// (1 <= l <= p_i - 1; longer windows are not exceptional and are refused).
struct RegularSpec {
  int arm = 0;
  int a = 0;
  int l = 0;
};

// interior: the window [a, a+l-1] stays inside the open arm, the module is a
//           one-dimensional strip of interior vertices.
// wrapped:  the window runs past the sink and re-enters through the center;
//           every vertex carries one dimension except a gap on the arm.
// top:      the a = p_i variant of wrapped, starting at the sink itself.
enum class RegularCase { interior, wrapped, top };

RegularCase regular_case(const Weights& w, const RegularSpec& s);

// First vertex of the zero gap [s, a-1] in the wrapped and top cases.
int wrap_start(const Weights& w, const RegularSpec& s);

// Builds the module, deriving the first-arrow scalars of the wrapped cases
// from the relations by an exact solve (normalized so the arm 2 scalar is 1,
// or the arm 1 scalar when arm 2 carries the window). The result is
// certified: shapes, relations, and exceptionality are re-checked.
Rep regular_exceptional(const CanonicalAlgebra& alg, const RegularSpec& s);

// Sincere rank one module: dimension n+1 at the center and at the first r_i
// vertices of each arm, n elsewhere. Entries lie in {0, 1, lambda_i}.
struct RankOneSpec {
  std::vector<int> r;  // one window per arm, 0 <= r_i < p_i
  int n = 0;
};

Rep rank_one(const CanonicalAlgebra& alg, const RankOneSpec& s);

}  // namespace canrep
