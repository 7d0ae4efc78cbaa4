#pragma once

// Integer row reduction: Hermite normal form, left kernels, rank.

#include "agalg/core.hpp"

namespace agalg {

using IntMatrix = std::vector<std::vector<mpz_class>>;

namespace detail {

// Unimodular row reduction of rows[p..] on columns [0, ncols). Returns the
// number of pivots found; rows below the last pivot are zero on those
// columns. Pivots are positive and entries above a pivot are reduced into
// [0, pivot).
inline std::size_t echelonize(IntMatrix& rows, std::size_t ncols) {
  std::size_t p = 0;
  for (std::size_t c = 0; c < ncols && p < rows.size(); ++c) {
    for (;;) {
      // Smallest nonzero |entry| in column c at or below p.
      std::size_t best = rows.size();
      for (std::size_t r = p; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[p], rows[best]);
      bool clean = true;
      for (std::size_t r = p + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[p][c].get_mpz_t());
        for (std::size_t k = 0; k < rows[r].size(); ++k) rows[r][k] -= q * rows[p][k];
        if (rows[r][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[p][c] == 0) continue;
    if (rows[p][c] < 0)
      for (auto& x : rows[p]) x = -x;
    for (std::size_t r = 0; r < p; ++r) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[p][c].get_mpz_t());
      if (q != 0)
        for (std::size_t k = 0; k < rows[r].size(); ++k) rows[r][k] -= q * rows[p][k];
    }
    ++p;
  }
  return p;
}

}  // namespace detail

/// Row Hermite normal form; zero rows dropped. Canonical for the lattice
/// spanned by the rows.
inline IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t ncols = rows.front().size();
  const std::size_t p = detail::echelonize(rows, ncols);
  rows.resize(p);
  return rows;
}

/// Basis (in Hermite normal form) of { z in Z^m : sum_i z_i M[i] = 0 }.
inline IntMatrix left_kernel(const IntMatrix& M) {
  const std::size_t m = M.size();
  if (m == 0) return {};
  const std::size_t n = M.front().size();
  IntMatrix aug(m, std::vector<mpz_class>(n + m));
  for (std::size_t i = 0; i < m; ++i) {
    if (M[i].size() != n) throw DimensionMismatch("ragged matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = M[i][j];
    aug[i][n + i] = 1;
  }
  const std::size_t p = detail::echelonize(aug, n);
  IntMatrix ker;
  for (std::size_t r = p; r < m; ++r)
    ker.emplace_back(aug[r].begin() + static_cast<std::ptrdiff_t>(n), aug[r].end());
  return hermite_normal_form(std::move(ker));
}

inline std::size_t matrix_rank(IntMatrix rows) {
  if (rows.empty()) return 0;
  return detail::echelonize(rows, rows.front().size());
}

/// Rank of the configuration A (as a d x n integer matrix).
inline std::size_t rank_of(const GradingSet& A) {
  IntMatrix rows;
  for (const auto& c : A.columns()) {
    std::vector<mpz_class> r;
    for (Int x : c) r.emplace_back(static_cast<long>(x));
    rows.push_back(std::move(r));
  }
  return matrix_rank(std::move(rows));
}

}  // namespace agalg
