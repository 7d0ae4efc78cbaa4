#pragma once

// Hilbert series of monomial ideals graded by A, the one-dimensional
// semigroup series, and the exact A-gradedness decision.

#include "agalg/core.hpp"
#include "agalg/graver.hpp"

#include <optional>

namespace agalg {

/// Minimal generating set of a monomial ideal, sorted lexicographically.
inline std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const ExponentVector& a, const ExponentVector& b) {
              if (a.total() != b.total()) return a.total() < b.total();
              return a < b;
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

class MonomialIdeal {
public:
  MonomialIdeal() = default;
  MonomialIdeal(GradingSet A, std::vector<ExponentVector> gens) : A_(std::move(A)) {
    for (const auto& g : gens) {
      if (g.size() != A_.n()) throw DimensionMismatch("generator has wrong length");
      if (!g.is_nonnegative()) throw InvalidInput("negative exponent");
    }
    gens_ = minimalize(std::move(gens));
  }

  const GradingSet& grading() const { return A_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }

  bool contains(const ExponentVector& u) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const ExponentVector& g) { return divides(g, u); });
  }

  bool operator==(const MonomialIdeal& o) const { return A_ == o.A_ && gens_ == o.gens_; }

  std::string str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ", ";
      s += monomial_string(gens_[i]);
    }
    return s + ">";
  }

private:
  GradingSet A_;
  std::vector<ExponentVector> gens_;
};

/// Sparse integer polynomial in t_1..t_d, keyed by exponent (a degree).
using DegreePolynomial = std::map<Degree, mpz_class>;

inline void add_term(DegreePolynomial& p, const Degree& b, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

inline DegreePolynomial multiply(const DegreePolynomial& a, const DegreePolynomial& b) {
  DegreePolynomial out;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b) add_term(out, da + db, ca * cb);
  return out;
}

inline DegreePolynomial subtract(DegreePolynomial a, const DegreePolynomial& b) {
  for (const auto& [d, c] : b) add_term(a, d, -c);
  return a;
}

/// 1 - t^b
inline DegreePolynomial one_minus(const Degree& b) {
  DegreePolynomial p;
  add_term(p, Degree(b.size()), 1);
  add_term(p, b, -1);
  return p;
}

/// prod_i (1 - t^{a_i})
inline DegreePolynomial denominator(const GradingSet& A) {
  DegreePolynomial p;
  add_term(p, A.zero_degree(), 1);
  for (const auto& a : A.columns()) p = multiply(p, one_minus(a));
  return p;
}

inline std::string polynomial_string(const DegreePolynomial& p) {
  if (p.empty()) return "0";
  std::string s;
  for (const auto& [d, c] : p) {
    if (!s.empty()) s += '\n';
    s += c.get_str() + " @ " + d.str();
  }
  return s;
}

struct HilbertNumerator {
  DegreePolynomial poly;
};

namespace detail {

inline DegreePolynomial numerator_rec(const GradingSet& A, std::vector<ExponentVector> gens) {
  gens = minimalize(std::move(gens));
  const std::size_t n = A.n();
  DegreePolynomial one;
  add_term(one, A.zero_degree(), 1);
  if (gens.empty()) return one;
  if (gens.front().is_zero()) return {};

  // Pairwise coprime generators: the numerator factors.
  std::vector<std::size_t> uses(n, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i)
      if (g[i] > 0) ++uses[i];
  const auto top = std::max_element(uses.begin(), uses.end());
  if (*top <= 1) {
    DegreePolynomial p = one;
    for (const auto& g : gens) p = multiply(p, one_minus(A.degree_of(g)));
    return p;
  }

  // Pivot x_i^e on the most used variable, e the median exponent.
  const std::size_t i = static_cast<std::size_t>(top - uses.begin());
  std::vector<Int> exps;
  for (const auto& g : gens)
    if (g[i] > 0) exps.push_back(g[i]);
  std::sort(exps.begin(), exps.end());
  ExponentVector pivot = unit_vector(n, i, exps[exps.size() / 2]);
  auto in_ideal = [&](const ExponentVector& m) {
    return std::any_of(gens.begin(), gens.end(), [&](const auto& g) { return divides(g, m); });
  };
  if (in_ideal(pivot)) pivot = unit_vector(n, i, exps.front());

  std::vector<ExponentVector> sum = gens;
  sum.push_back(pivot);
  std::vector<ExponentVector> quotient;
  quotient.reserve(gens.size());
  for (const auto& g : gens) quotient.push_back(g - gcd(g, pivot));

  DegreePolynomial result = numerator_rec(A, std::move(sum));
  const Degree shift = A.degree_of(pivot);
  for (const auto& [d, c] : numerator_rec(A, std::move(quotient))) add_term(result, d + shift, c);
  return result;
}

}  // namespace detail

/// H(S/I; t) = numerator / prod_i (1 - t^{a_i}). Pivot-splitting recursion:
/// N(I) = N(I + <p>) + t^{deg p} N(I : p).
inline HilbertNumerator hilbert_numerator(const MonomialIdeal& I) {
  return HilbertNumerator{detail::numerator_rec(I.grading(), I.generators())};
}

/// The same numerator by inclusion-exclusion over all subsets of
/// generators (sum over subsets of (-1)^|subset| t^{deg lcm}). Exponential;
/// kept as the reference formula.
inline HilbertNumerator hilbert_numerator_inclusion_exclusion(const MonomialIdeal& I) {
  const auto& g = I.generators();
  if (g.size() > 20) throw GuardExceeded("too many generators for inclusion-exclusion");
  DegreePolynomial p;
  const std::size_t s = g.size();
  for (std::uint64_t nu = 0; nu < (std::uint64_t{1} << s); ++nu) {
    ExponentVector l(I.grading().n());
    int bits = 0;
    for (std::size_t j = 0; j < s; ++j)
      if ((nu >> j) & 1) {
        l = lcm(l, g[j]);
        ++bits;
      }
    add_term(p, I.grading().degree_of(l), bits % 2 ? -1 : 1);
  }
  return HilbertNumerator{std::move(p)};
}

/// Power-series coefficients of numerator / prod (1 - t^{a_i}) on a box.
inline std::vector<mpz_class> expand_series(const GradingSet& A, const DegreePolynomial& num,
                                            const DegreeBox& box) {
  std::vector<mpz_class> h(box.size());
  for (const auto& [d, c] : num)
    if (box.contains(d)) h[box.index(d)] += c;
  for (const auto& a : A.columns()) {
    for (std::size_t idx = 0; idx < box.size(); ++idx) {
      const Degree b = box.degree(idx);
      const Degree p = b - a;
      if (p.is_nonnegative()) h[idx] += h[box.index(p)];
    }
  }
  return h;
}

struct SemigroupSeries {
  DegreePolynomial numerator_q;  // q(t) = (1 - t) sum_{m in NA} t^m
  Int frobenius = -1;            // largest gap, -1 when there is none
};

/// d = 1 only; requires gcd(A) = 1.
inline SemigroupSeries semigroup_series_d1(const GradingSet& A) {
  if (A.d() != 1) throw InvalidInput("semigroup_series_d1 needs d = 1");
  Int g = 0, amin = 0;
  for (const auto& c : A.columns()) {
    g = std::gcd(g, c[0]);
    amin = amin == 0 ? c[0] : std::min(amin, c[0]);
  }
  if (g != 1) throw InvalidInput("semigroup series needs gcd 1");
  std::vector<char> in{1};
  Int run = 1, frob = -1;
  for (Int m = 1; run < amin; ++m) {
    char member = 0;
    for (const auto& c : A.columns())
      if (c[0] <= m && in[static_cast<std::size_t>(m - c[0])]) member = 1;
    in.push_back(member);
    if (member) {
      ++run;
    } else {
      run = 0;
      frob = m;
    }
  }
  SemigroupSeries s;
  s.frobenius = frob;
  add_term(s.numerator_q, Degree{0}, 1);
  for (Int m = 1; m <= frob + 1; ++m) {
    const int diff = in[static_cast<std::size_t>(m)] - in[static_cast<std::size_t>(m - 1)];
    add_term(s.numerator_q, Degree{m}, diff);
  }
  return s;
}

struct GradednessVerdict {
  bool graded = false;
  /// True when the verdict is a theorem (always for d = 1).
  bool certified = false;
  std::optional<Degree> witness;  // first failing degree
  mpz_class count = 0;            // standard monomials at the witness
  Degree checked_up_to;           // box used for d >= 2
};

struct GradednessOptions {
  /// d >= 2: verification box is radius * sum_i a_i (default radius:
  /// zonotope_radius(A)).
  std::optional<Int> radius;
  std::size_t box_guard = 4'000'000;
};

/// Decides whether dim (S/I)_b = [b in NA] for every b. Exact for d = 1 via
/// N_I(t) (1 - t) = q(t) prod (1 - t^{a_i}); for d >= 2 a coefficientwise
/// comparison on a bounded box.
inline GradednessVerdict is_A_graded_monomial(const MonomialIdeal& I,
                                              const GradednessOptions& opts = {}) {
  const GradingSet& A = I.grading();
  GradednessVerdict v;
  const auto num = hilbert_numerator(I).poly;
  if (A.d() == 1) {
    v.certified = true;
    const auto q = semigroup_series_d1(A).numerator_q;
    const auto lhs = multiply(num, one_minus(Degree{1}));
    const auto rhs = multiply(q, denominator(A));
    const auto diff = subtract(lhs, rhs);
    if (diff.empty()) {
      v.graded = true;
      return v;
    }
    // The lowest term of diff is the lowest term of H_I - sum_{NA} t^m.
    const auto& [b, c] = *diff.begin();
    v.witness = b;
    Int member = 0;
    for (const auto& m : semigroup_members_up_to(A, b))
      if (m == b) member = 1;
    v.count = c + member;
    return v;
  }

  const Int r = opts.radius.value_or(std::max<Int>(zonotope_radius(A), 1));
  Degree cap = A.zero_degree();
  for (const auto& a : A.columns()) cap += r * a;
  mpz_class cells = 1;
  for (Int x : cap) cells *= static_cast<long>(x + 1);
  if (cells > static_cast<long>(opts.box_guard)) throw GuardExceeded("verification box too large");
  DegreeBox box(cap);
  v.checked_up_to = cap;
  const auto h = expand_series(A, num, box);
  const auto in = semigroup_indicator(A, box);
  std::vector<std::size_t> order(box.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return graded_lex_less(box.degree(x), box.degree(y));
  });
  for (std::size_t idx : order) {
    if (h[idx] != (in[idx] ? 1 : 0)) {
      v.witness = box.degree(idx);
      v.count = h[idx];
      return v;
    }
  }
  v.graded = true;
  return v;
}

}  // namespace agalg
