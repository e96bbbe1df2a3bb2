#pragma once

#include "canrep/rep.hpp"
#include "canrep/sparse.hpp"

#include <utility>
#include <vector>

namespace canrep {

// Coordinate layout for the two-term model of a pair (X, Y). Level zero is
// the sum over vertices of Hom(X_v, Y_v); level one the sum over arrows of
// Hom(X_tgt, Y_src). Blocks follow the canonical vertex and arrow order and
// each block is flattened row-major (Y index major, X index minor).
struct PairLayout {
  std::vector<long long> c0_off, c1_off;
  long long c0_dim = 0, c1_dim = 0;
};
PairLayout pair_layout(const Rep& x, const Rep& y);

// Difference map from level zero to level one. The component of f at an
// arrow alpha: s -> t is f_s X_alpha - Y_alpha f_t; its kernel is Hom(X, Y).
Mat delta_matrix(const Rep& x, const Rep& y);
SparseMat delta_sparse(const Rep& x, const Rep& y);

// One constraint block per relation, each of shape dim Y_0 by dim X_c,
// cutting the admissible subspace U(X, Y) out of level one. When X and Y
// satisfy the relations, ext(X, Y) = U / im(delta).
Mat u_constraint_matrix(const Rep& x, const Rep& y);
SparseMat u_constraint_sparse(const Rep& x, const Rep& y);

long long hom_dim(const Rep& x, const Rep& y);
long long ext_dim(const Rep& x, const Rep& y);
std::pair<long long, long long> hom_ext(const Rep& x, const Rep& y);

// Kernel of the difference map, unflattened into per-vertex matrices.
std::vector<std::vector<Mat>> hom_basis(const Rep& x, const Rep& y);

// Echelonized basis of U(X, Y), one column per basis vector.
Mat u_subspace_basis(const Rep& x, const Rep& y);

// Representatives of U / im(delta) picked from the given spanning columns of
// U: the columns whose pivots in the echelon form of [delta | u_cols] fall in
// the right half. Deterministic, and exactly ext(X, Y) many columns.
Mat ext_cocycles_from(const Rep& x, const Rep& y, const Mat& u_cols);
Mat ext_cocycles(const Rep& x, const Rep& y);

// Direct witness that im(delta) lies inside U; holds whenever both modules
// satisfy the relations.
bool image_delta_inside_u(const Rep& x, const Rep& y);

// Middle term of the extension classified by a U-vector: spaces Y_v + X_v,
// arrows [[Y_alpha, phi_alpha], [0, X_alpha]]. Rejects vectors outside U.
Rep extension_middle_term(const Rep& x, const Rep& y,
                          const std::vector<Rat>& cocycle);

// Bilinear form on dimension vectors that computes hom - ext for
// relation-satisfying pairs.
long long euler_form(const CanonicalAlgebra& alg, const std::vector<int>& dx,
                     const std::vector<int>& dy);

// hom(M, M) = 1 and ext(M, M) = 0.
bool is_exceptional(const Rep& m);

struct OrthogonalityReport {
  bool x_exceptional = false;
  bool y_exceptional = false;
  bool hom_xy_zero = false;
  bool hom_yx_zero = false;
  bool ext_yx_zero = false;
  long long n = 0;  // ext(X, Y), the multiplicity the pair can carry
  bool ok() const {
    return x_exceptional && y_exceptional && hom_xy_zero && hom_yx_zero &&
           ext_yx_zero;
  }
};
OrthogonalityReport orthogonal_pair_check(const Rep& x, const Rep& y);

}  // namespace canrep
