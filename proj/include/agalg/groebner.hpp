#pragma once

// Binomial Buchberger over Q, term orders, weight initial ideals of the toric
// ideal, and the fiber-edge tests for Groebner degrees.

#include "agalg/core.hpp"
#include "agalg/graver.hpp"
#include "agalg/hilbert.hpp"
#include "agalg/lp.hpp"

#include <optional>

namespace agalg {

/// Pure lex for a variable permutation (perm[0] is the largest variable), or
/// a rational weight refined by such a lex order.
class TermOrder {
public:
  static TermOrder lex(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    return lex(std::move(p));
  }
  static TermOrder lex(std::vector<std::size_t> perm) {
    check_perm(perm);
    TermOrder t;
    t.perm_ = std::move(perm);
    return t;
  }
  static TermOrder weight(std::vector<Rational> omega, std::vector<std::size_t> tiebreak) {
    if (omega.size() != tiebreak.size()) throw DimensionMismatch("weight and tiebreak lengths");
    check_perm(tiebreak);
    TermOrder t;
    t.omega_ = std::move(omega);
    t.perm_ = std::move(tiebreak);
    return t;
  }
  static TermOrder weight(std::vector<Rational> omega) {
    const std::size_t n = omega.size();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    return weight(std::move(omega), std::move(p));
  }

  std::size_t n() const { return perm_.size(); }
  bool is_weight() const { return omega_.has_value(); }
  const std::vector<Rational>& omega() const { return *omega_; }
  const std::vector<std::size_t>& permutation() const { return perm_; }

  Rational weight_of(const ExponentVector& u) const {
    Rational s = 0;
    if (omega_)
      for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != 0) s += (*omega_)[i] * u[i];
    return s;
  }

  /// Negative, zero, positive as x^u is smaller, equal, larger.
  int compare(const ExponentVector& u, const ExponentVector& v) const {
    if (u.size() != n() || v.size() != n()) throw DimensionMismatch("term order length");
    if (omega_) {
      const Rational wu = weight_of(u), wv = weight_of(v);
      if (wu != wv) return wu < wv ? -1 : 1;
    }
    for (std::size_t i : perm_)
      if (u[i] != v[i]) return u[i] < v[i] ? -1 : 1;
    return 0;
  }
  bool less(const ExponentVector& u, const ExponentVector& v) const { return compare(u, v) < 0; }

private:
  static void check_perm(const std::vector<std::size_t>& p) {
    std::vector<char> seen(p.size(), 0);
    for (auto i : p) {
      if (i >= p.size() || seen[i]) throw InvalidInput("not a permutation");
      seen[i] = 1;
    }
  }
  std::optional<std::vector<Rational>> omega_;
  std::vector<std::size_t> perm_;
};

/// Generators as given; monomials appear as Binomial with monomial = true.
struct BinomialIdeal {
  GradingSet grading;
  std::vector<Binomial> generators;

  void check() const {
    for (const auto& g : generators) {
      if (g.u.size() != grading.n()) throw DimensionMismatch("generator length");
      if (!g.u.is_nonnegative()) throw InvalidInput("negative exponent");
      if (g.monomial) continue;
      if (g.v.size() != grading.n() || !g.v.is_nonnegative())
        throw InvalidInput("bad second term");
      if (g.c == 0) throw InvalidInput("zero coefficient");
      if (grading.degree_of(g.u) != grading.degree_of(g.v))
        throw InvalidInput("generator " + g.str() + " is not homogeneous");
    }
  }

  std::string str() const {
    std::string s;
    for (const auto& g : generators) s += g.str() + "\n";
    return s;
  }
};

namespace detail {

/// x^lead - c x^trail with lead > trail, or a monomial.
struct GbElem {
  ExponentVector lead;
  ExponentVector trail;
  Rational c;
  bool mono = false;
};

/// alpha x^p + beta x^q as a monic element (or nothing when it vanishes).
inline std::optional<GbElem> orient(const TermOrder& ord, Rational alpha, ExponentVector p,
                                    Rational beta, ExponentVector q) {
  if (alpha != 0 && beta != 0 && p == q) {
    alpha += beta;
    beta = 0;
  }
  if (alpha == 0 && beta == 0) return std::nullopt;
  if (alpha == 0) return GbElem{std::move(q), {}, 0, true};
  if (beta == 0) return GbElem{std::move(p), {}, 0, true};
  if (ord.less(p, q)) {
    std::swap(p, q);
    std::swap(alpha, beta);
  }
  return GbElem{std::move(p), std::move(q), -beta / alpha, false};
}

/// Normal form of a single term coeff * x^m: again a single term.
inline void reduce_term(const std::vector<GbElem>& G, Rational& coeff, ExponentVector& m) {
  bool progress = true;
  while (coeff != 0 && progress) {
    progress = false;
    for (const auto& g : G) {
      if (!divides(g.lead, m)) continue;
      if (g.mono) {
        coeff = 0;
      } else {
        m = m - g.lead + g.trail;
        coeff *= g.c;
      }
      progress = true;
      break;
    }
  }
}

inline std::optional<GbElem> normal_form(const std::vector<GbElem>& G, const TermOrder& ord,
                                         Rational alpha, ExponentVector p, Rational beta,
                                         ExponentVector q) {
  reduce_term(G, alpha, p);
  reduce_term(G, beta, q);
  return orient(ord, std::move(alpha), std::move(p), std::move(beta), std::move(q));
}

inline bool elem_less(const TermOrder& ord, const GbElem& a, const GbElem& b) {
  if (int c = ord.compare(a.lead, b.lead); c != 0) return c < 0;
  if (a.mono != b.mono) return a.mono;
  if (a.mono) return false;
  if (int c = ord.compare(a.trail, b.trail); c != 0) return c < 0;
  return a.c < b.c;
}

}  // namespace detail

/// Reduced Groebner basis of a binomial ideal. Output generators are monic
/// with the leading term first, sorted by leading term under ord.
inline BinomialIdeal buchberger(const BinomialIdeal& J, const TermOrder& ord) {
  J.check();
  if (ord.n() != J.grading.n()) throw DimensionMismatch("term order has wrong length");
  using detail::GbElem;
  const GradingSet& A = J.grading;
  std::vector<GbElem> G;
  for (const auto& g : J.generators) {
    auto e = g.monomial ? std::optional<GbElem>(GbElem{g.u, {}, 0, true})
                        : detail::normal_form(G, ord, 1, g.u, -g.c, g.v);
    if (e) G.push_back(std::move(*e));
  }

  struct Pair {
    Degree degree;
    ExponentVector lcm;
    std::size_t i, j;
  };
  auto pair_less = [](const Pair& x, const Pair& y) {
    if (x.degree != y.degree) return graded_lex_less(y.degree, x.degree);
    if (x.lcm != y.lcm) return y.lcm < x.lcm;
    return std::tie(y.i, y.j) < std::tie(x.i, x.j);
  };
  std::vector<Pair> heap;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      ExponentVector l = lcm(G[i].lead, G[j].lead);
      heap.push_back(Pair{A.degree_of(l), std::move(l), i, j});
      std::push_heap(heap.begin(), heap.end(), pair_less);
    }
  };
  for (std::size_t j = 1; j < G.size(); ++j) add_pairs(j);

  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), pair_less);
    Pair pr = std::move(heap.back());
    heap.pop_back();
    const GbElem& a = G[pr.i];
    const GbElem& b = G[pr.j];
    // Coprime leading terms: the S-polynomial reduces to zero.
    if (gcd(a.lead, b.lead).is_zero()) continue;
    // S = x^{L-la} a - x^{L-lb} b = -c_a x^{L-la+ta} + c_b x^{L-lb+tb}
    Rational alpha = a.mono ? Rational(0) : Rational(-a.c);
    Rational beta = b.mono ? Rational(0) : b.c;
    ExponentVector p = a.mono ? pr.lcm : pr.lcm - a.lead + a.trail;
    ExponentVector q = b.mono ? pr.lcm : pr.lcm - b.lead + b.trail;
    auto h = detail::normal_form(G, ord, alpha, p, beta, q);
    if (!h) continue;
    G.push_back(std::move(*h));
    add_pairs(G.size() - 1);
  }

  // Minimal basis, then reduce the trailing terms.
  std::sort(G.begin(), G.end(), [&](const GbElem& x, const GbElem& y) { return detail::elem_less(ord, x, y); });
  std::vector<GbElem> minimal;
  for (auto& g : G) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (divides(h.lead, g.lead)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<GbElem> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    GbElem g = minimal[k];
    if (!g.mono) {
      std::vector<GbElem> others;
      for (std::size_t t = 0; t < minimal.size(); ++t)
        if (t != k) others.push_back(minimal[t]);
      Rational coeff = g.c;
      ExponentVector m = g.trail;
      detail::reduce_term(others, coeff, m);
      if (coeff == 0) {
        g = GbElem{g.lead, {}, 0, true};
      } else {
        g.trail = m;
        g.c = coeff;
      }
    }
    reduced.push_back(std::move(g));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const GbElem& x, const GbElem& y) { return detail::elem_less(ord, x, y); });

  BinomialIdeal out{A, {}};
  for (auto& g : reduced) {
    if (g.mono)
      out.generators.push_back(monomial_generator(std::move(g.lead)));
    else
      out.generators.push_back(Binomial{std::move(g.lead), std::move(g.trail), std::move(g.c), false});
  }
  return out;
}

/// Normal form of a single monomial modulo a reduced basis (as produced by
/// buchberger with the same order): coefficient and surviving monomial.
inline std::pair<Rational, ExponentVector> normal_form_monomial(const BinomialIdeal& gb,
                                                                const ExponentVector& u) {
  std::vector<detail::GbElem> G;
  for (const auto& g : gb.generators)
    G.push_back(g.monomial ? detail::GbElem{g.u, {}, 0, true} : detail::GbElem{g.u, g.v, g.c, false});
  Rational c = 1;
  ExponentVector m = u;
  detail::reduce_term(G, c, m);
  return {c, m};
}

/// Reduced Groebner basis of the toric ideal I_A, seeded with its primitive
/// binomials (which generate I_A).
inline BinomialIdeal toric_gb(const GradingSet& A, const TermOrder& ord,
                              const PrimitiveSet* graver = nullptr) {
  std::optional<PrimitiveSet> own;
  if (!graver) {
    own = primitive_binomials(A);
    graver = &*own;
  }
  return buchberger(BinomialIdeal{A, graver->binomials}, ord);
}

struct InitialIdeal {
  MonomialIdeal ideal;
  BinomialIdeal basis;
  /// Some basis element was tied under omega and ordered by the tiebreak.
  bool tiebreak_used = false;
  /// tiebreak_used while no tiebreak was supplied by the caller.
  bool degenerate = false;
};

/// in_omega(I_A) under the highest-form convention: the leading terms of
/// the reduced basis for omega refined by the tiebreak (default: plain lex).
inline InitialIdeal initial_monomial_ideal(const GradingSet& A, const std::vector<Rational>& omega,
                                           std::optional<std::vector<std::size_t>> tiebreak = {},
                                           const PrimitiveSet* graver = nullptr) {
  if (omega.size() != A.n()) throw DimensionMismatch("weight vector has wrong length");
  std::vector<std::size_t> perm(A.n());
  std::iota(perm.begin(), perm.end(), 0);
  const TermOrder ord = TermOrder::weight(omega, tiebreak.value_or(perm));
  InitialIdeal out;
  out.basis = toric_gb(A, ord, graver);
  std::vector<ExponentVector> leads;
  for (const auto& g : out.basis.generators) {
    leads.push_back(g.u);
    if (!g.monomial && ord.weight_of(g.u) == ord.weight_of(g.v)) out.tiebreak_used = true;
  }
  out.degenerate = out.tiebreak_used && !tiebreak.has_value();
  out.ideal = MonomialIdeal(A, std::move(leads));
  return out;
}

/// x^u - c x^v  ->  x^u - c lambda^{v-u} x^v: the substitution x_i -> lambda_i x_i
/// followed by rescaling to a monic leading term.
inline BinomialIdeal torus_act(const std::vector<Rational>& lambda, const BinomialIdeal& J) {
  if (lambda.size() != J.grading.n()) throw DimensionMismatch("torus element length");
  for (const auto& l : lambda)
    if (l == 0) throw InvalidInput("torus element must have nonzero entries");
  BinomialIdeal out{J.grading, {}};
  for (const auto& g : J.generators) {
    if (g.monomial) {
      out.generators.push_back(g);
      continue;
    }
    Rational c = g.c;
    for (std::size_t i = 0; i < lambda.size(); ++i) c *= rational_pow(lambda[i], g.v[i] - g.u[i]);
    out.generators.push_back(Binomial{g.u, g.v, c, false});
  }
  return out;
}

/// Direction of u - v scaled to a primitive vector whose first nonzero entry
/// is positive.
inline std::vector<Int> edge_direction(const ExponentVector& u, const ExponentVector& v) {
  std::vector<Int> d(u.size());
  Int g = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    d[i] = u[i] - v[i];
    g = std::gcd(g, d[i]);
  }
  if (g == 0) throw InvalidInput("zero direction");
  for (auto& x : d) x /= g;
  for (Int x : d)
    if (x != 0) {
      if (x < 0)
        for (auto& y : d) y = -y;
      break;
    }
  return d;
}

/// Primitive directions of the edges of the fiber polytope P[b].
inline std::set<std::vector<Int>> fiber_edge_directions(const Fiber& F) {
  std::set<std::vector<Int>> dirs;
  for (std::size_t i = 0; i < F.points.size(); ++i)
    for (std::size_t j = i + 1; j < F.points.size(); ++j)
      if (is_edge(F, F.points[i], F.points[j])) dirs.insert(edge_direction(F.points[i], F.points[j]));
  return dirs;
}

/// True iff P[b] has an edge parallel to no edge of any P[b'] with b' in NA,
/// b' <= b componentwise and b' != b.
inline bool is_groebner_degree(const GradingSet& A, const Degree& b,
                               std::size_t guard = kDefaultFiberGuard) {
  if (b.size() != A.d()) throw DimensionMismatch("degree has wrong dimension");
  FiberTable table(A, b, guard);
  if (table.points(b).empty()) throw InvalidInput("degree " + b.str() + " is not in NA");
  const auto top = fiber_edge_directions(table.fiber(b));
  if (top.empty()) return false;
  for (const auto& dir : top) {
    bool parallel = false;
    for (const auto& lower : table.degrees()) {
      if (lower == b) continue;
      const auto& pts = table.points(lower);
      const Fiber F{lower, pts};
      for (std::size_t i = 0; i < pts.size() && !parallel; ++i)
        for (std::size_t j = i + 1; j < pts.size() && !parallel; ++j)
          if (edge_direction(pts[i], pts[j]) == dir && is_edge(F, pts[i], pts[j])) parallel = true;
      if (parallel) break;
    }
    if (!parallel) return true;
  }
  return false;
}

/// A primitive binomial lies in some reduced Groebner basis of I_A iff its
/// two terms span an edge of their fiber.
inline bool in_some_reduced_gb(const GradingSet& A, const Binomial& g,
                               std::size_t guard = kDefaultFiberGuard) {
  if (g.monomial) throw InvalidInput("monomials are not in the toric ideal");
  if (!is_primitive(A, g.u, g.v)) throw InvalidInput("binomial " + g.str() + " is not primitive");
  const Fiber F = enumerate_fiber(A, A.degree_of(g.u), guard);
  return is_edge(F, g.u, g.v);
}

}  // namespace agalg
