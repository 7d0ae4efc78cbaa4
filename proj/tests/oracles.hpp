#pragma once

// Brute-force reference implementations used as test oracles. They are
// deliberately naive and share no code paths with the library beyond the
// basic vector types.

#include "agalg/agalg.hpp"

#include <random>

namespace oracle {

using namespace agalg;

/// Number of u in N^n with A u = b, by the coin-change recurrence over
/// columns on the box [0, cap].
inline std::vector<mpz_class> fiber_counts(const GradingSet& A, const Degree& cap) {
  DegreeBox box(cap);
  std::vector<mpz_class> h(box.size());
  h[box.index(A.zero_degree())] = 1;
  for (const auto& a : A.columns())
    for (std::size_t idx = 0; idx < box.size(); ++idx) {
      const Degree b = box.degree(idx);
      const Degree p = b - a;
      if (p.is_nonnegative()) h[idx] += h[box.index(p)];
    }
  return h;
}

/// Every monomial of A-degree at most cap (componentwise).
inline std::vector<ExponentVector> monomials_up_to(const GradingSet& A, const Degree& cap) {
  std::vector<ExponentVector> out;
  ExponentVector u(A.n());
  std::function<void(std::size_t, Degree)> rec = [&](std::size_t i, Degree acc) {
    if (i == A.n()) {
      out.push_back(u);
      return;
    }
    for (Int k = 0; acc.leq(cap); ++k) {
      u[i] = k;
      rec(i + 1, acc);
      acc += A.column(i);
    }
    u[i] = 0;
  };
  rec(0, A.zero_degree());
  return out;
}

/// x^u - x^v is primitive iff A u = A v, u != v, and no (u', v') != (0, 0)
/// below (u, v) other than (u, v) itself has A u' = A v'.
inline bool primitive_by_definition(const GradingSet& A, const ExponentVector& u, const ExponentVector& v) {
  if (u == v || A.degree_of(u) != A.degree_of(v)) return false;
  const std::size_t n = A.n();
  ExponentVector up(n), vp(n);
  bool found = false;
  std::function<void(std::size_t)> rec_v;
  std::function<void(std::size_t)> rec_u = [&](std::size_t i) {
    if (found) return;
    if (i == n) {
      rec_v(0);
      return;
    }
    for (Int k = 0; k <= u[i]; ++k) {
      up[i] = k;
      rec_u(i + 1);
    }
  };
  rec_v = [&](std::size_t i) {
    if (found) return;
    if (i == n) {
      const bool zero = up.is_zero() && vp.is_zero();
      const bool whole = up == u && vp == v;
      if (!zero && !whole && up != vp && A.degree_of(up) == A.degree_of(vp)) found = true;
      return;
    }
    for (Int k = 0; k <= v[i]; ++k) {
      vp[i] = k;
      rec_v(i + 1);
    }
  };
  rec_u(0);
  return !found;
}

/// Standard monomials of I with degree exactly b, by scanning the fiber.
inline std::size_t standard_count(const MonomialIdeal& I, const Degree& b) {
  std::size_t k = 0;
  for (const auto& u : enumerate_fiber(I.grading(), b).points)
    if (!I.contains(u)) ++k;
  return k;
}

inline Rational random_rational(std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero(std::mt19937_64& rng, int range) {
  Rational q = 0;
  while (q == 0) q = random_rational(rng, range);
  return q;
}

}  // namespace oracle
