#pragma once

// Primitive binomials (the Graver basis of the toric ideal) by a sweep over
// fibers in increasing degree.

#include "agalg/core.hpp"
#include "agalg/lattice.hpp"

#include <optional>
#include <unordered_map>

namespace agalg {

/// x^u - x^v with deg u = deg v is primitive iff there is no pair of proper
/// factors x^u' | x^u, x^v' | x^v of equal degree. Exhaustive check.
inline bool is_primitive(const GradingSet& A, const ExponentVector& u, const ExponentVector& v) {
  if (u.size() != A.n() || v.size() != A.n()) throw DimensionMismatch("exponent length");
  if (u == v) throw InvalidInput("is_primitive needs u != v");
  if (A.degree_of(u) != A.degree_of(v)) throw InvalidInput("binomial is not homogeneous");

  auto proper_factor_degrees = [&](const ExponentVector& w) {
    std::set<Degree> out;
    ExponentVector f(w.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == w.size()) {
        if (!f.is_zero() && f != w) out.insert(A.degree_of(f));
        return;
      }
      for (Int k = 0; k <= w[i]; ++k) {
        f[i] = k;
        rec(i + 1);
      }
      f[i] = 0;
    };
    rec(0);
    return out;
  };
  const auto du = proper_factor_degrees(u);
  const auto dv = proper_factor_degrees(v);
  for (const auto& b : du)
    if (dv.count(b)) return false;
  return true;
}

/// a_{n-1} * a_n for d = 1 (product of the two largest entries).
inline Int degree_bound_1d(const GradingSet& A) {
  if (A.d() != 1) throw InvalidInput("degree_bound_1d needs d = 1");
  if (A.n() < 2) return 0;
  std::vector<Int> e;
  for (const auto& c : A.columns()) e.push_back(c[0]);
  std::sort(e.begin(), e.end());
  return e[e.size() - 1] * e[e.size() - 2];
}

/// r = (n - rank) * ceil(a^rank), a the largest Euclidean column norm.
inline Int zonotope_radius(const GradingSet& A) {
  const Int rk = static_cast<Int>(rank_of(A));
  const Int corank = static_cast<Int>(A.n()) - rk;
  if (corank <= 0) return 0;
  mpz_class s = 0;  // a^2
  for (const auto& c : A.columns()) {
    mpz_class t = 0;
    for (Int x : c) t += mpz_class(static_cast<long>(x)) * static_cast<long>(x);
    if (t > s) s = t;
  }
  // ceil(sqrt(s^rk))
  mpz_class p, root;
  mpz_pow_ui(p.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(rk));
  mpz_sqrt(root.get_mpz_t(), p.get_mpz_t());
  if (root * root < p) root += 1;
  const mpz_class r = root * static_cast<long>(corank);
  if (!r.fits_slong_p()) throw GuardExceeded("zonotope radius overflow");
  return r.get_si();
}

struct PrimitiveSet {
  GradingSet grading;
  /// Canonical orientation (u >lex v), c = 1, ordered by degree then u.
  std::vector<Binomial> binomials;
  /// Distinct primitive degrees in graded-lex order.
  std::vector<Degree> degrees;
  /// True when completeness is a theorem (d = 1); otherwise it rests on the
  /// conjectured zonotope bound.
  bool certified = false;
  std::string bound_note;

  Degree degree_of(const Binomial& b) const { return grading.degree_of(b.u); }
  bool is_primitive_degree(const Degree& b) const {
    return std::binary_search(degrees.begin(), degrees.end(), b, graded_lex_less);
  }
};

struct GraverOptions {
  /// d = 1: degree bound (default a_{n-1} a_n). d >= 2: entry bound r
  /// (default zonotope_radius(A)).
  std::optional<Int> bound;
  std::size_t guard = kDefaultFiberGuard;
};

/// Complete list of primitive binomials within the bound.
///
/// Candidate pairs come from buckets of monomials with non-full support
/// grouped by degree; only pairs with disjoint supports can be primitive.
/// Degrees are swept in graded-lex order and a pair is kept iff no primitive
/// pair found earlier divides it termwise (in either orientation); a minimal
/// proper factor pair is itself primitive, so this matches the definition.
inline PrimitiveSet primitive_binomials(const GradingSet& A, const GraverOptions& opts = {}) {
  const std::size_t n = A.n();
  if (n > 63) throw GuardExceeded("too many variables");
  PrimitiveSet out;
  out.grading = A;
  if (n < 2) {
    out.certified = true;
    out.bound_note = "trivial kernel";
    return out;
  }

  const bool one_dim = A.d() == 1;
  Int bound = 0;
  if (one_dim) {
    bound = opts.bound.value_or(degree_bound_1d(A));
    out.certified = !opts.bound.has_value() || *opts.bound >= degree_bound_1d(A);
    out.bound_note = "degree <= " + std::to_string(bound);
  } else {
    bound = opts.bound.value_or(zonotope_radius(A));
    out.certified = false;
    out.bound_note = "entries <= " + std::to_string(bound) +
                     " (zonotope bound; completeness conjectural)";
  }

  struct Point {
    ExponentVector u;
    std::uint64_t mask;
  };
  std::unordered_map<Degree, std::vector<Point>, IntVectorHash> buckets;
  std::size_t count = 0;
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);

  // Enumerate u with support exactly `mask` within the bound.
  ExponentVector u(n);
  Degree acc(A.d());
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t mask) {
    if (i == n) {
      buckets[acc].push_back(Point{u, mask});
      if (++count > opts.guard) throw GuardExceeded("primitive candidate enumeration");
      return;
    }
    if (!((mask >> i) & 1)) {
      rec(i + 1, mask);
      return;
    }
    const Degree& a = A.column(i);
    Int m = 1;
    for (;; ++m) {
      if (one_dim) {
        if (acc[0] + m * a[0] > bound) break;
      } else if (m > bound) {
        break;
      }
      u[i] = m;
      acc += m * a;
      rec(i + 1, mask);
      acc -= m * a;
    }
    u[i] = 0;
  };
  for (std::uint64_t mask = 1; mask < full; ++mask) rec(0, mask);

  struct Candidate {
    Degree degree;
    ExponentVector u, v;
  };
  std::vector<Candidate> cands;
  for (auto& [deg, pts] : buckets) {
    if (pts.size() < 2) continue;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (pts[i].mask & pts[j].mask) continue;
        if (pts[i].u > pts[j].u)
          cands.push_back({deg, pts[i].u, pts[j].u});
        else
          cands.push_back({deg, pts[j].u, pts[i].u});
      }
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
    if (x.degree != y.degree) return graded_lex_less(x.degree, y.degree);
    if (x.u != y.u) return x.u < y.u;
    return x.v < y.v;
  });

  std::vector<std::pair<ExponentVector, ExponentVector>> found;
  std::size_t level_start = 0;  // primitives strictly below the current degree
  for (std::size_t k = 0; k < cands.size(); ++k) {
    if (k > 0 && cands[k].degree != cands[k - 1].degree) level_start = found.size();
    const auto& c = cands[k];
    bool reducible = false;
    for (std::size_t t = 0; t < level_start && !reducible; ++t) {
      const auto& [p, q] = found[t];
      reducible = (p.leq(c.u) && q.leq(c.v)) || (p.leq(c.v) && q.leq(c.u));
    }
    if (reducible) continue;
    found.emplace_back(c.u, c.v);
    out.binomials.push_back(Binomial{c.u, c.v, Rational(1), false});
    if (out.degrees.empty() || out.degrees.back() != c.degree) out.degrees.push_back(c.degree);
  }
  return out;
}

inline std::vector<Degree> primitive_degrees(const GradingSet& A, const GraverOptions& opts = {}) {
  return primitive_binomials(A, opts).degrees;
}

}  // namespace agalg
