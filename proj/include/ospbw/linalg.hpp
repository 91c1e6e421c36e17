#pragma once

#include <map>
#include <vector>

#include "ospbw/morphism.hpp"

namespace ospbw {

/// Dense exact-rational matrix, row major.
using Matrix = std::vector<std::vector<Rational>>;

/// Reduce rows to echelon form in place; returns the rank.
inline int row_reduce(Matrix& m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    Rational inv = m[rank][c];
    for (int cc = c; cc < cols; ++cc) m[rank][cc] /= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

inline int rank(Matrix m) { return row_reduce(m); }

/// Basis of the right kernel {v : m v = 0}.
inline std::vector<std::vector<Rational>> kernel_basis(Matrix m) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m[0].size());
  int rk = row_reduce(m);
  // locate pivot columns
  std::vector<int> pivot_col(rk);
  std::vector<char> is_pivot(cols, 0);
  for (int r = 0; r < rk; ++r) {
    int c = 0;
    while (c < cols && m[r][c] == 0) ++c;
    pivot_col[r] = c;
    is_pivot[c] = 1;
  }
  std::vector<std::vector<Rational>> out;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[c] = 1;
    for (int r = 0; r < rk; ++r) v[pivot_col[r]] = -m[r][c];
    out.push_back(std::move(v));
  }
  return out;
}

/// Flatten morphisms into exact coordinate rows over the free basis
/// (arc diagram, power of t); suitable for rank/kernel computations.
inline Matrix morphism_matrix(const std::vector<Morphism>& ms) {
  std::map<std::pair<ArcDiagram, int>, int> index;
  for (const auto& m : ms)
    for (const auto& [d, c] : m.terms())
      for (int i = 0; i <= c.degree(); ++i)
        if (c.coeff(i) != 0) index.try_emplace({d, i}, 0);
  int n = 0;
  for (auto& [k, v] : index) v = n++;
  Matrix rows;
  for (const auto& m : ms) {
    std::vector<Rational> row(n, Rational(0));
    for (const auto& [d, c] : m.terms())
      for (int i = 0; i <= c.degree(); ++i)
        if (c.coeff(i) != 0) row[index.at({d, i})] = c.coeff(i);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline int morphisms_rank(const std::vector<Morphism>& ms) {
  return rank(morphism_matrix(ms));
}

/// Solve a x = b for the column vector x (a given row major, rows x cols).
/// Returns false if the system is inconsistent.
inline bool solve_linear(Matrix a, std::vector<Rational> b,
                         std::vector<Rational>& x) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  for (int r = 0; r < rows; ++r) a[r].push_back(b[r]);
  int rk = row_reduce(a);
  x.assign(cols, Rational(0));
  for (int r = 0; r < rk; ++r) {
    int c = 0;
    while (c <= cols && a[r][c] == 0) ++c;
    if (c == cols) return false;  // 0 = 1 row
    if (c > cols) continue;
    x[c] = a[r][cols];
  }
  return true;
}

}  // namespace ospbw
