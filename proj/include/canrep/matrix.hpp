#pragma once

#include "canrep/rational.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace canrep {

// Dense exact-rational matrix, row-major. Shapes with zero rows or columns
// are legal; they arise constantly from empty vertex spaces.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols);
  static Mat identity(int n);
  static Mat from_rows(std::initializer_list<std::initializer_list<Rat>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty_shape() const { return rows_ == 0 || cols_ == 0; }

  Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  bool is_zero() const;
  bool is_identity() const;

  bool operator==(const Mat&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> a_;
};

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(const Rat& s, const Mat& a);
Mat operator-(const Mat& a);

Mat transpose(const Mat& a);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

// Kronecker product in block layout: entry a(i,j) scales a full copy of b,
// so the result has shape (rows_a * rows_b) x (cols_a * cols_b).
Mat kron(const Mat& a, const Mat& b);

std::vector<Rat> mat_vec(const Mat& a, const std::vector<Rat>& x);
Mat col_from(const std::vector<Rat>& x);

// Reduced row echelon form. Pivot choice inside each column: the nonzero
// entry of smallest absolute value, ties broken toward the lowest row index.
// Pivots are normalized to 1 and pivot columns fully cleared, so the result
// is a deterministic canonical form.
struct Echelon {
  Mat rref;
  std::vector<int> pivot_cols;
  int rank = 0;
};
Echelon reduced_echelon(const Mat& a);

int rank(const Mat& a);

// Columns form the echelonized basis of {x : ax = 0} obtained by setting one
// free column to 1 at a time.
Mat nullspace(const Mat& a);

// Standard basis vectors e_q spanning a complement of the column space;
// the count equals rows - rank.
std::vector<int> column_space_complement(const Mat& a);

std::optional<Mat> inverse(const Mat& a);

}  // namespace canrep
