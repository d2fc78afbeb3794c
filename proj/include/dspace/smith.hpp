#pragma once

// Integral homology of a chain complex via Smith normal form.
//
// Boundary matrices coming from nerves are large but extremely sparse and
// almost all pivots are +-1, so we run a sparse unit-pivot elimination first
// and only hand the (small) residual block to the dense SNF routine.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <vector>

namespace dspace {

using BigInt = boost::multiprecision::cpp_int;

// Sparse integer matrix, row-major.
struct SparseMat {
  int rows = 0, cols = 0;
  std::vector<std::map<int, BigInt>> row;

  void resize(int r, int c) {
    rows = r;
    cols = c;
    row.assign(r, {});
  }
  void add(int r, int c, const BigInt& v) {
    auto& cell = row[r][c];
    cell += v;
    if (cell == 0) row[r].erase(c);
  }
};

struct SmithResult {
  int rank = 0;
  std::vector<BigInt> diagonal;  // nonzero diagonal entries, d_i | d_{i+1}
};

namespace detail {

// Dense SNF on the residual block. Classic gcd-reduction; entries stay exact.
inline std::vector<BigInt> dense_snf(std::vector<std::vector<BigInt>> m) {
  std::vector<BigInt> diag;
  size_t R = m.size();
  size_t C = R ? m[0].size() : 0;
  size_t t = 0;
  while (t < R && t < C) {
    // find the nonzero entry of least absolute value
    size_t pr = R, pc = C;
    BigInt best = 0;
    for (size_t i = t; i < R; ++i)
      for (size_t j = t; j < C; ++j)
        if (m[i][j] != 0 && (best == 0 || abs(m[i][j]) < abs(best))) {
          best = m[i][j];
          pr = i;
          pc = j;
        }
    if (pr == R) break;
    std::swap(m[t], m[pr]);
    for (size_t i = 0; i < R; ++i) std::swap(m[i][t], m[i][pc]);
    bool clean = true;
    for (size_t i = t + 1; i < R; ++i) {
      if (m[i][t] == 0) continue;
      BigInt q = m[i][t] / m[t][t];
      for (size_t j = t; j < C; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) clean = false;
    }
    for (size_t j = t + 1; j < C; ++j) {
      if (m[t][j] == 0) continue;
      BigInt q = m[t][j] / m[t][t];
      for (size_t i = t; i < R; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // smaller entries appeared; redo this pivot
    // divisibility fix-up: fold any non-multiple into the pivot position
    bool fixed = false;
    for (size_t i = t + 1; i < R && !fixed; ++i)
      for (size_t j = t + 1; j < C && !fixed; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (size_t jj = t; jj < C; ++jj) m[t][jj] += m[i][jj];
          fixed = true;
        }
    if (fixed) continue;
    if (m[t][t] < 0) m[t][t] = -m[t][t];
    diag.push_back(m[t][t]);
    ++t;
  }
  return diag;
}

}  // namespace detail

// Smith normal form of a sparse matrix: unit pivots eliminated sparsely,
// residual handled densely.
inline SmithResult smith_normal_form(const SparseMat& in) {
  SmithResult res;
  std::vector<std::map<int, BigInt>> rows = in.row;
  // column -> superset of rows with a nonzero entry there (lazily compacted)
  std::vector<std::vector<int>> col_rows(in.cols);
  for (int r = 0; r < in.rows; ++r)
    for (auto& [c, v] : rows[r]) col_rows[c].push_back(r);
  std::vector<bool> row_done(in.rows, false), col_done(in.cols, false);

  int unit_pivots = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int pc = 0; pc < in.cols; ++pc) {
      if (col_done[pc]) continue;
      // compact the column index and pick the shortest +-1 pivot row
      std::vector<int> live;
      int pr = -1;
      size_t best_len = 0;
      for (int r : col_rows[pc]) {
        if (row_done[r]) continue;
        auto it = rows[r].find(pc);
        if (it == rows[r].end()) continue;
        live.push_back(r);
        if ((it->second == 1 || it->second == -1) &&
            (pr < 0 || rows[r].size() < best_len)) {
          pr = r;
          best_len = rows[r].size();
        }
      }
      col_rows[pc] = live;
      if (pr < 0) continue;
      BigInt piv = rows[pr][pc];
      for (int r : live) {
        if (r == pr) continue;
        auto it = rows[r].find(pc);
        if (it == rows[r].end()) continue;
        BigInt q = it->second / piv;  // exact: piv is +-1
        for (auto& [c, v] : rows[pr]) {
          if (col_done[c]) continue;
          auto [cell, fresh] = rows[r].try_emplace(c, 0);
          if (fresh && c != pc) col_rows[c].push_back(r);
          cell->second -= q * v;
          if (cell->second == 0) rows[r].erase(cell);
        }
      }
      row_done[pr] = true;
      col_done[pc] = true;
      ++unit_pivots;
      progress = true;
    }
  }

  // residual block
  std::vector<int> rmap, cmap;
  for (int r = 0; r < in.rows; ++r)
    if (!row_done[r] && !rows[r].empty()) {
      bool live = false;
      for (auto& [c, v] : rows[r])
        if (!col_done[c]) { live = true; break; }
      if (live) rmap.push_back(r);
    }
  std::vector<bool> col_used(in.cols, false);
  for (int r : rmap)
    for (auto& [c, v] : rows[r])
      if (!col_done[c]) col_used[c] = true;
  for (int c = 0; c < in.cols; ++c)
    if (col_used[c]) cmap.push_back(c);
  std::vector<std::vector<BigInt>> dense(rmap.size(),
                                         std::vector<BigInt>(cmap.size(), 0));
  std::map<int, int> cidx;
  for (size_t j = 0; j < cmap.size(); ++j) cidx[cmap[j]] = (int)j;
  for (size_t i = 0; i < rmap.size(); ++i)
    for (auto& [c, v] : rows[rmap[i]])
      if (!col_done[c]) dense[i][cidx[c]] = v;
  auto tail = detail::dense_snf(std::move(dense));

  res.rank = unit_pivots + (int)tail.size();
  res.diagonal.assign((size_t)unit_pivots, BigInt(1));
  for (auto& d : tail) res.diagonal.push_back(d);
  std::sort(res.diagonal.begin(), res.diagonal.end());
  return res;
}

struct HomologyGroup {
  int rank = 0;
  std::vector<BigInt> torsion;  // entries > 1, each dividing the next

  bool operator==(const HomologyGroup&) const = default;
  bool is_zero() const { return rank == 0 && torsion.empty(); }
};

// Homology of a chain complex given by boundary matrices d[k]: C_k -> C_{k-1}
// (d[0] is ignored / empty) and the ranks of the chain groups. Computes H_k
// for k < d.size() - 1 reliably; callers should supply one extra dimension.
inline std::vector<HomologyGroup> chain_homology(const std::vector<int>& dims,
                                                 const std::vector<SparseMat>& d,
                                                 int up_to) {
  std::vector<SmithResult> snf(d.size());
  for (size_t k = 1; k < d.size(); ++k) snf[k] = smith_normal_form(d[k]);
  std::vector<HomologyGroup> H;
  for (int k = 0; k <= up_to; ++k) {
    HomologyGroup g;
    int rk_out = (k >= 1 && k < (int)d.size()) ? snf[k].rank : 0;
    int rk_in = (k + 1 < (int)d.size()) ? snf[k + 1].rank : 0;
    g.rank = dims[k] - rk_out - rk_in;
    if (k + 1 < (int)d.size())
      for (auto& v : snf[k + 1].diagonal)
        if (v > 1) g.torsion.push_back(v);
    H.push_back(std::move(g));
  }
  return H;
}

}  // namespace dspace
