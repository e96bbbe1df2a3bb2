#pragma once

#include "canrep/rational.hpp"

#include <utility>
#include <vector>

namespace canrep {

// Triplet-built sparse matrix used for exact rank computation on the large
// block-sparse systems (difference maps and relation constraints). Rank is
// independent of pivot order, so the fill-reducing heuristic inside
// sparse_rank never changes the answer, only the running time.
class SparseMat {
 public:
  SparseMat(long long rows, long long cols);

  long long rows() const { return rows_; }
  long long cols() const { return cols_; }

  // Duplicate coordinates accumulate.
  void add(long long r, long long c, Rat v);

  long long nonzeros() const;

  friend long long sparse_rank(SparseMat m);

 private:
  long long rows_ = 0;
  long long cols_ = 0;
  std::vector<std::vector<std::pair<long long, Rat>>> row_;
};

long long sparse_rank(SparseMat m);

}  // namespace canrep
