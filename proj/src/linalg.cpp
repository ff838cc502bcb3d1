#include "linalg.hpp"

#include <algorithm>
#include <limits>

namespace superband::linalg {

namespace {

constexpr std::size_t kNoCol = std::numeric_limits<std::size_t>::max();

std::size_t leading_col(const SparseRow& r) {
  return r.empty() ? kNoCol : r.begin()->first;
}

// dst -= c * src
void axpy(SparseRow& dst, const Rat& c, const SparseRow& src) {
  for (const auto& [col, v] : src) {
    auto it = dst.find(col);
    if (it == dst.end()) {
      Rat nv = -c * v;
      if (nv != 0) dst.emplace(col, nv);
    } else {
      it->second -= c * v;
      if (it->second == 0) dst.erase(it);
    }
  }
}

}  // namespace

void rref(std::vector<SparseRow>& rows, std::vector<std::size_t>& pivots) {
  std::vector<SparseRow> done;
  pivots.clear();
  std::vector<bool> used(rows.size(), false);
  for (;;) {
    std::size_t best = rows.size();
    std::size_t best_col = kNoCol;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || rows[i].empty()) continue;
      std::size_t lc = leading_col(rows[i]);
      if (lc < best_col ||
          (lc == best_col && rows[i].size() < rows[best].size())) {
        best = i;
        best_col = lc;
      }
    }
    if (best == rows.size()) break;
    used[best] = true;
    SparseRow& pr = rows[best];
    Rat lead = pr.begin()->second;
    for (auto& [c, v] : pr) v /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == best || rows[i].empty()) continue;
      auto it = rows[i].find(best_col);
      if (it != rows[i].end()) axpy(rows[i], it->second, pr);
    }
    for (auto& dr : done) {
      auto it = dr.find(best_col);
      if (it != dr.end()) axpy(dr, it->second, pr);
    }
    done.push_back(pr);
    pivots.push_back(best_col);
  }
  // sort by pivot column
  std::vector<std::size_t> order(done.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
  std::vector<SparseRow> sorted_rows;
  std::vector<std::size_t> sorted_pivots;
  sorted_rows.reserve(done.size());
  for (std::size_t i : order) {
    sorted_rows.push_back(std::move(done[i]));
    sorted_pivots.push_back(pivots[i]);
  }
  rows = std::move(sorted_rows);
  pivots = std::move(sorted_pivots);
}

std::vector<SparseRow> kernel_basis(std::vector<SparseRow> rows,
                                    std::size_t cols) {
  std::vector<std::size_t> pivots;
  rref(rows, pivots);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<SparseRow> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    SparseRow v;
    v[f] = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto it = rows[i].find(f);
      if (it != rows[i].end() && it->second != 0) v[pivots[i]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace superband::linalg
