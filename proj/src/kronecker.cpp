#include "canrep/kronecker.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

namespace canrep {

namespace {

constexpr long long kDenseCellLimit = 4'000'000;

template <typename Sink>
void emit_delta(const KroneckerRep& x, const KroneckerRep& y, Sink&& sink) {
  const long long f2_off = 1LL * y.v * x.v;
  for (int m = 0; m < x.n; ++m) {
    const long long block = 1LL * m * y.v * x.u;
    const Mat& xa = x.mats[m];
    const Mat& ya = y.mats[m];
    for (int j = 0; j < x.v; ++j) {
      for (int c = 0; c < x.u; ++c) {
        const Rat& val = xa.at(j, c);
        if (val == 0) continue;
        for (int r = 0; r < y.v; ++r)
          sink(block + 1LL * r * x.u + c, 1LL * r * x.v + j, val);
      }
    }
    for (int r = 0; r < y.v; ++r) {
      for (int i = 0; i < y.u; ++i) {
        const Rat& val = ya.at(r, i);
        if (val == 0) continue;
        for (int c = 0; c < x.u; ++c)
          sink(block + 1LL * r * x.u + c, f2_off + 1LL * i * x.u + c, -val);
      }
    }
  }
}

struct Elimination {
  std::vector<int> elim;  // one row per column of the inclusion
  std::vector<int> kept;  // ascending complement, the quotient coordinates
  Mat wt;                 // kept x elim: class(x)_i = x_kept[i] + wt * x_elim
};

// Picks one pivot row per column so the square block on those rows is
// invertible, preferring rows whose pivot is their only entry (those keep the
// basis change a signed permutation), then unit pivots, then sparse rows,
// then late rows (high copy index in a stacked inclusion).
Elimination eliminate_columns(const Mat& c) {
  const int rows = c.rows();
  const int cols = c.cols();
  Mat r = c;
  std::vector<char> used(rows, 0);
  std::vector<int> elim;
  elim.reserve(cols);
  for (int j = 0; j < cols; ++j) {
    int best = -1;
    std::tuple<int, int, int> best_key;
    for (int e = 0; e < rows; ++e) {
      if (used[e] || r.at(e, j) == 0) continue;
      const int unit = (r.at(e, j) == 1 || r.at(e, j) == -1) ? 0 : 1;
      int others = 0;
      for (int j2 = 0; j2 < cols; ++j2)
        if (j2 != j && r.at(e, j2) != 0) ++others;
      const std::tuple<int, int, int> key{others == 0 ? 0 : 1, unit, others};
      if (best < 0 || key <= best_key) {
        best = e;
        best_key = key;
      }
    }
    if (best < 0) throw std::logic_error("inclusion lost full column rank");
    used[best] = 1;
    elim.push_back(best);
    for (int j2 = j + 1; j2 < cols; ++j2) {
      if (r.at(best, j2) == 0) continue;
      const Rat f = r.at(best, j2) / r.at(best, j);
      for (int i = 0; i < rows; ++i) r.at(i, j2) -= f * r.at(i, j);
    }
  }

  std::vector<int> kept;
  kept.reserve(rows - cols);
  for (int i = 0; i < rows; ++i)
    if (!used[i]) kept.push_back(i);

  Mat wt(rows - cols, cols);
  if (cols > 0) {
    Mat ce(cols, cols);
    Mat ck(rows - cols, cols);
    for (int a = 0; a < cols; ++a)
      for (int b = 0; b < cols; ++b) ce.at(a, b) = c.at(elim[a], b);
    for (int i = 0; i < rows - cols; ++i)
      for (int b = 0; b < cols; ++b) ck.at(i, b) = c.at(kept[i], b);
    const std::optional<Mat> inv = inverse(ce);
    if (!inv) throw std::logic_error("pivot block is singular");
    wt = -(ck * *inv);
  }
  return {std::move(elim), std::move(kept), std::move(wt)};
}

// Diagonal sign changes at both vertices that make every entry nonnegative,
// found by two-coloring the bipartite support graph.
std::pair<std::vector<int>, std::vector<int>> removable_signs(
    const KroneckerRep& m) {
  const int nodes = m.v + m.u;
  std::vector<std::vector<std::pair<int, int>>> adj(nodes);
  for (const Mat& a : m.mats) {
    for (int r = 0; r < m.v; ++r) {
      for (int c = 0; c < m.u; ++c) {
        if (a.at(r, c) == 0) continue;
        const int s = a.at(r, c) > 0 ? 1 : -1;
        adj[r].emplace_back(m.v + c, s);
        adj[m.v + c].emplace_back(r, s);
      }
    }
  }
  std::vector<int> color(nodes, 0);
  std::deque<int> queue;
  for (int start = 0; start < nodes; ++start) {
    if (color[start] != 0) continue;
    color[start] = 1;
    queue.push_back(start);
    while (!queue.empty()) {
      const int node = queue.front();
      queue.pop_front();
      for (const auto& [other, s] : adj[node]) {
        const int want = s * color[node];
        if (color[other] == 0) {
          color[other] = want;
          queue.push_back(other);
        } else if (color[other] != want) {
          throw std::logic_error(
              "entry signs cannot be removed by diagonal changes");
        }
      }
    }
  }
  return {std::vector<int>(color.begin(), color.begin() + m.v),
          std::vector<int>(color.begin() + m.v, color.end())};
}

void apply_signs(KroneckerRep& m, const std::vector<int>& s1,
                 const std::vector<int>& s2) {
  for (Mat& a : m.mats)
    for (int r = 0; r < m.v; ++r)
      for (int c = 0; c < m.u; ++c)
        if (s1[r] * s2[c] < 0) a.at(r, c) = -a.at(r, c);
}

// One step along the preprojective family. The arrow matrices embed the sink
// space into n copies of the source space; the next module carries the old
// source space at the sink and the quotient by that embedding at the source.
// Exceptional modules are determined up to isomorphism by their dimension
// vector, so the certification after each step pins the result down exactly.
KroneckerRep shift(const KroneckerRep& cur) {
  const int n = cur.n;
  Mat c(n * cur.v, cur.u);
  for (int m = 0; m < n; ++m)
    for (int r = 0; r < cur.v; ++r)
      for (int t = 0; t < cur.u; ++t)
        c.at(m * cur.v + r, t) = cur.mats[m].at(r, t);

  const Elimination e = eliminate_columns(c);
  const int nv = static_cast<int>(e.kept.size());
  if (nv != n * cur.v - cur.u)
    throw std::logic_error("cokernel dimensions drifted off the recurrence");

  std::vector<int> kept_pos(n * cur.v, -1), elim_slot(n * cur.v, -1);
  for (int i = 0; i < nv; ++i) kept_pos[e.kept[i]] = i;
  for (int a = 0; a < static_cast<int>(e.elim.size()); ++a)
    elim_slot[e.elim[a]] = a;

  KroneckerRep next{n, nv, cur.v, {}};
  next.mats.reserve(n);
  for (int j = 0; j < n; ++j) {
    Mat b(nv, cur.v);
    for (int i = 0; i < cur.v; ++i) {
      const int g = j * cur.v + i;
      if (kept_pos[g] >= 0) {
        b.at(kept_pos[g], i) += 1;
      } else {
        const int a = elim_slot[g];
        for (int row = 0; row < nv; ++row) b.at(row, i) += e.wt.at(row, a);
      }
    }
    next.mats.push_back(std::move(b));
  }

  const auto [s1, s2] = removable_signs(next);
  apply_signs(next, s1, s2);
  return next;
}

}  // namespace

void validate_kronecker(const KroneckerRep& m) {
  if (m.n < 1)
    throw std::invalid_argument("kronecker quiver needs at least one arrow");
  if (m.v < 0 || m.u < 0)
    throw std::invalid_argument("negative kronecker dimension");
  if (static_cast<int>(m.mats.size()) != m.n)
    throw std::invalid_argument("expected one matrix per arrow");
  for (const Mat& a : m.mats)
    if (a.rows() != m.v || a.cols() != m.u)
      throw std::invalid_argument("kronecker arrow matrix has the wrong shape");
}

std::vector<long long> kronecker_dims(int n, int count) {
  if (n < 1)
    throw std::invalid_argument("kronecker quiver needs at least one arrow");
  if (count < 0) throw std::invalid_argument("negative length");
  std::vector<long long> d;
  d.reserve(count);
  for (int k = 0; k < count; ++k) {
    if (k == 0)
      d.push_back(0);
    else if (k == 1)
      d.push_back(1);
    else
      d.push_back(n * d[k - 1] - d[k - 2]);
  }
  return d;
}

Mat kronecker_delta_matrix(const KroneckerRep& x, const KroneckerRep& y) {
  validate_kronecker(x);
  validate_kronecker(y);
  if (x.n != y.n)
    throw std::invalid_argument("modules over different kronecker quivers");
  const long long rows = 1LL * x.n * x.u * y.v;
  const long long cols = 1LL * x.v * y.v + 1LL * x.u * y.u;
  if (rows * cols > kDenseCellLimit)
    throw std::length_error("difference map too large for a dense matrix");
  Mat out(static_cast<int>(rows), static_cast<int>(cols));
  emit_delta(x, y, [&](long long r, long long c, const Rat& v) {
    out.at(static_cast<int>(r), static_cast<int>(c)) += v;
  });
  return out;
}

SparseMat kronecker_delta_sparse(const KroneckerRep& x, const KroneckerRep& y) {
  validate_kronecker(x);
  validate_kronecker(y);
  if (x.n != y.n)
    throw std::invalid_argument("modules over different kronecker quivers");
  SparseMat out(1LL * x.n * x.u * y.v, 1LL * x.v * y.v + 1LL * x.u * y.u);
  emit_delta(x, y,
             [&](long long r, long long c, const Rat& v) { out.add(r, c, v); });
  return out;
}

std::pair<long long, long long> kronecker_hom_ext(const KroneckerRep& x,
                                                  const KroneckerRep& y) {
  const long long c0 = 1LL * x.v * y.v + 1LL * x.u * y.u;
  const long long c1 = 1LL * x.n * x.u * y.v;
  const long long rank = sparse_rank(kronecker_delta_sparse(x, y));
  return {c0 - rank, c1 - rank};
}

bool binary_disjoint_support(const KroneckerRep& m) {
  for (int r = 0; r < m.v; ++r) {
    for (int c = 0; c < m.u; ++c) {
      int hits = 0;
      for (const Mat& a : m.mats) {
        const Rat& val = a.at(r, c);
        if (val == 0) continue;
        if (val != 1) return false;
        ++hits;
      }
      if (hits > 1) return false;
    }
  }
  return true;
}

void certify_exceptional_kronecker(const KroneckerRep& m) {
  validate_kronecker(m);
  if (!binary_disjoint_support(m))
    throw std::logic_error(
        "kronecker matrices are not binary with disjoint support");
  const auto he = kronecker_hom_ext(m, m);
  if (he.first != 1 || he.second != 0)
    throw std::logic_error("kronecker module is not exceptional");
}

KroneckerRep exceptional_preprojective(int n, int k) {
  if (n < 1)
    throw std::invalid_argument("kronecker quiver needs at least one arrow");
  if (k < 0) throw std::invalid_argument("negative preprojective index");
  if (n == 1 && k > 2)
    throw std::invalid_argument(
        "the one arrow quiver has no preprojective past index 2");

  KroneckerRep cur{n, 1, 0, std::vector<Mat>(n, Mat(1, 0))};
  certify_exceptional_kronecker(cur);
  for (int step = 1; step <= k; ++step) {
    cur = shift(cur);
    certify_exceptional_kronecker(cur);
  }
  return cur;
}

KroneckerRep exceptional_preinjective(int n, int k) {
  const KroneckerRep p = exceptional_preprojective(n, k);
  KroneckerRep q{p.n, p.u, p.v, {}};
  q.mats.reserve(p.n);
  for (const Mat& a : p.mats) q.mats.push_back(transpose(a));
  // The rank of the difference map is invariant under transposing every
  // matrix, so the exceptionality certificate carries over unchanged.
  return q;
}

}  // namespace canrep
