#include "canrep/matrix.hpp"

#include <stdexcept>
#include <string>

namespace canrep {

namespace {

void require_shape(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("matrix shape mismatch: " + what);
}

}  // namespace

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  a_.assign(static_cast<size_t>(rows) * cols, Rat(0));
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<Rat>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Mat m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    require_shape(static_cast<int>(row.size()) == c, "ragged row list");
    int j = 0;
    for (const auto& v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

bool Mat::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_shape(a.rows() == b.rows() && a.cols() == b.cols(), "sum");
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  require_shape(a.rows() == b.rows() && a.cols() == b.cols(), "difference");
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

Mat operator*(const Mat& a, const Mat& b) {
  require_shape(a.cols() == b.rows(), "product " + std::to_string(a.rows()) +
                                          "x" + std::to_string(a.cols()) +
                                          " * " + std::to_string(b.rows()) +
                                          "x" + std::to_string(b.cols()));
  Mat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j) == 0) continue;
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  return c;
}

Mat operator*(const Rat& s, const Mat& a) {
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = s * a.at(i, j);
  return c;
}

Mat operator-(const Mat& a) { return Rat(-1) * a; }

Mat transpose(const Mat& a) {
  Mat c(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(j, i) = a.at(i, j);
  return c;
}

Mat hstack(const Mat& a, const Mat& b) {
  require_shape(a.rows() == b.rows(), "hstack");
  Mat c(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

Mat vstack(const Mat& a, const Mat& b) {
  require_shape(a.cols() == b.cols(), "vstack");
  Mat c(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) c.at(a.rows() + i, j) = b.at(i, j);
  return c;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat c(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) {
          if (b.at(k, l) == 0) continue;
          c.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    }
  return c;
}

std::vector<Rat> mat_vec(const Mat& a, const std::vector<Rat>& x) {
  require_shape(static_cast<int>(x.size()) == a.cols(), "mat_vec");
  std::vector<Rat> y(a.rows(), Rat(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      y[i] += a.at(i, j) * x[j];
    }
  return y;
}

Mat col_from(const std::vector<Rat>& x) {
  Mat c(static_cast<int>(x.size()), 1);
  for (int i = 0; i < c.rows(); ++i) c.at(i, 0) = x[i];
  return c;
}

Echelon reduced_echelon(const Mat& a) {
  Echelon e;
  e.rref = a;
  Mat& m = e.rref;
  int pr = 0;
  for (int c = 0; c < m.cols() && pr < m.rows(); ++c) {
    int best = -1;
    for (int r = pr; r < m.rows(); ++r) {
      if (m.at(r, c) == 0) continue;
      if (best < 0 || abs_cmp(m.at(r, c), m.at(best, c)) < 0) best = r;
    }
    if (best < 0) continue;
    if (best != pr)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(best, j));
    const Rat inv = 1 / m.at(pr, c);
    for (int j = c; j < m.cols(); ++j) m.at(pr, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == pr || m.at(r, c) == 0) continue;
      const Rat f = m.at(r, c);
      for (int j = c; j < m.cols(); ++j) m.at(r, j) -= f * m.at(pr, j);
    }
    e.pivot_cols.push_back(c);
    ++pr;
  }
  e.rank = static_cast<int>(e.pivot_cols.size());
  return e;
}

int rank(const Mat& a) { return reduced_echelon(a).rank; }

Mat nullspace(const Mat& a) {
  const Echelon e = reduced_echelon(a);
  std::vector<int> free_cols;
  {
    size_t k = 0;
    for (int c = 0; c < a.cols(); ++c) {
      if (k < e.pivot_cols.size() && e.pivot_cols[k] == c) {
        ++k;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  Mat n(a.cols(), static_cast<int>(free_cols.size()));
  for (size_t idx = 0; idx < free_cols.size(); ++idx) {
    const int f = free_cols[idx];
    n.at(f, static_cast<int>(idx)) = 1;
    for (size_t k = 0; k < e.pivot_cols.size(); ++k)
      n.at(e.pivot_cols[k], static_cast<int>(idx)) =
          -e.rref.at(static_cast<int>(k), f);
  }
  return n;
}

std::vector<int> column_space_complement(const Mat& a) {
  const Echelon e = reduced_echelon(transpose(a));
  std::vector<int> out;
  size_t k = 0;
  for (int r = 0; r < a.rows(); ++r) {
    if (k < e.pivot_cols.size() && e.pivot_cols[k] == r) {
      ++k;
    } else {
      out.push_back(r);
    }
  }
  return out;
}

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const int n = a.rows();
  const Echelon e = reduced_echelon(hstack(a, Mat::identity(n)));
  if (e.rank < n || (n > 0 && e.pivot_cols[n - 1] >= n)) return std::nullopt;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = e.rref.at(i, n + j);
  return inv;
}

}  // namespace canrep
