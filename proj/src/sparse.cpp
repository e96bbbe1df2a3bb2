#include "canrep/sparse.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace canrep {

namespace {

using Row = std::vector<std::pair<long long, Rat>>;

// Sorts by column and merges duplicates, dropping exact zeros.
void consolidate(Row& row) {
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Row out;
  out.reserve(row.size());
  for (auto& e : row) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
      if (out.back().second == 0) out.pop_back();
    } else if (e.second != 0) {
      out.push_back(std::move(e));
    }
  }
  row = std::move(out);
}

const Rat* row_entry(const Row& row, long long col) {
  auto it = std::lower_bound(
      row.begin(), row.end(), col,
      [](const auto& e, long long c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// dst -= factor * src, keeping dst sorted and zero-free.
void axpy(Row& dst, const Rat& factor, const Row& src) {
  Row out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() ||
        (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, -factor * src[j].second);
      ++j;
    } else {
      Rat v = dst[i].second - factor * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

}  // namespace

SparseMat::SparseMat(long long rows, long long cols)
    : rows_(rows), cols_(cols), row_(static_cast<size_t>(rows)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative sparse shape");
}

void SparseMat::add(long long r, long long c, Rat v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("sparse entry outside matrix");
  if (v == 0) return;
  row_[static_cast<size_t>(r)].emplace_back(c, std::move(v));
}

long long SparseMat::nonzeros() const {
  long long n = 0;
  for (const auto& r : row_) n += static_cast<long long>(r.size());
  return n;
}

long long sparse_rank(SparseMat m) {
  auto& rows = m.row_;
  const size_t nr = rows.size();
  std::vector<char> active(nr, 1);

  // Occupancy lists per column, cleaned lazily: entries may point at rows
  // that no longer touch the column.
  std::vector<std::vector<long long>> col_rows(static_cast<size_t>(m.cols_));

  for (size_t r = 0; r < nr; ++r) {
    consolidate(rows[r]);
    for (const auto& e : rows[r]) col_rows[static_cast<size_t>(e.first)].push_back(static_cast<long long>(r));
  }

  using Key = std::pair<size_t, long long>;  // (row nnz, row index)
  std::priority_queue<Key, std::vector<Key>, std::greater<Key>> queue;
  for (size_t r = 0; r < nr; ++r)
    if (!rows[r].empty()) queue.emplace(rows[r].size(), static_cast<long long>(r));

  long long rank = 0;
  while (!queue.empty()) {
    const auto [nnz, rl] = queue.top();
    queue.pop();
    const size_t r = static_cast<size_t>(rl);
    if (!active[r] || rows[r].size() != nnz || rows[r].empty()) continue;

    // Pivot column: fewest (approximately) occupied rows, then lowest index.
    long long pc = -1;
    size_t pc_load = 0;
    for (const auto& e : rows[r]) {
      auto& occ = col_rows[static_cast<size_t>(e.first)];
      std::sort(occ.begin(), occ.end());
      occ.erase(std::unique(occ.begin(), occ.end()), occ.end());
      occ.erase(std::remove_if(occ.begin(), occ.end(),
                               [&](long long r2) {
                                 return !active[static_cast<size_t>(r2)] ||
                                        row_entry(rows[static_cast<size_t>(r2)], e.first) == nullptr;
                               }),
                occ.end());
      if (pc < 0 || occ.size() < pc_load) {
        pc = e.first;
        pc_load = occ.size();
      }
    }

    const Rat pivot = *row_entry(rows[r], pc);
    active[r] = 0;
    ++rank;

    auto victims = std::move(col_rows[static_cast<size_t>(pc)]);
    col_rows[static_cast<size_t>(pc)].clear();
    for (long long r2l : victims) {
      const size_t r2 = static_cast<size_t>(r2l);
      if (r2 == r || !active[r2]) continue;
      const Rat* v2 = row_entry(rows[r2], pc);
      if (v2 == nullptr) continue;
      axpy(rows[r2], *v2 / pivot, rows[r]);
      for (const auto& e : rows[r2]) col_rows[static_cast<size_t>(e.first)].push_back(r2l);
      if (!rows[r2].empty()) queue.emplace(rows[r2].size(), r2l);
    }
    rows[r].clear();
    rows[r].shrink_to_fit();
  }
  return rank;
}

}  // namespace canrep
