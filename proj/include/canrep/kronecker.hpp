#pragma once

#include <utility>
#include <vector>

#include "canrep/matrix.hpp"
#include "canrep/sparse.hpp"

namespace canrep {

// Representation of the Kronecker quiver with n parallel arrows: k^v sits at
// the source vertex, k^u at the sink, and every arrow matrix maps k^u to k^v.
struct KroneckerRep {
  int n = 0;
  int v = 0;
  int u = 0;
  std::vector<Mat> mats;

  bool operator==(const KroneckerRep&) const = default;
};

void validate_kronecker(const KroneckerRep& m);

// d_0 = 0, d_1 = 1, d_{k+1} = n d_k - d_{k-1}. The k-th preprojective has
// dimension vector (d_{k+1}, d_k). For n = 1 the sequence turns negative
// after index 3; that family is finite.
std::vector<long long> kronecker_dims(int n, int count);

Mat kronecker_delta_matrix(const KroneckerRep& x, const KroneckerRep& y);
SparseMat kronecker_delta_sparse(const KroneckerRep& x, const KroneckerRep& y);

// (hom, ext). There are no relations, so both fall out of one rank.
std::pair<long long, long long> kronecker_hom_ext(const KroneckerRep& x,
                                                  const KroneckerRep& y);

// Every entry is 0 or 1 and no position is occupied by two arrows.
bool binary_disjoint_support(const KroneckerRep& m);

// Shapes, binary disjoint support, hom = 1 and ext = 0; throws on failure.
void certify_exceptional_kronecker(const KroneckerRep& m);

// Exceptional module of dimension (d_{k+1}, d_k), built by iterating the
// vertex shift that quotients the stacked arrow matrices, certified after
// every step.
KroneckerRep exceptional_preprojective(int n, int k);
// The transposed family, of dimension (d_k, d_{k+1}).
KroneckerRep exceptional_preinjective(int n, int k);

}  // namespace canrep
