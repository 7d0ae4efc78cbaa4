#pragma once

// The zonotope Z_r(A), the truncation ideal M_r, the quadratic equations of
// the truncated parameter scheme, and the correspondence between its points
// and binomial A-graded ideals.

#include "agalg/census.hpp"
#include "agalg/groebner.hpp"
#include "agalg/lp.hpp"

#include <unordered_map>

namespace agalg {

/// b = sum lambda_i a_i with 0 <= lambda_i <= r.
inline bool zonotope_contains(const GradingSet& A, Int r, const Degree& b) {
  if (r < 1) throw InvalidInput("zonotope radius must be positive");
  if (b.size() != A.d()) throw DimensionMismatch("degree has wrong dimension");
  if (b.is_zero()) return true;
  if (!b.is_nonnegative()) return false;
  const std::size_t n = A.n();
  std::vector<LinearConstraint> cs;
  for (std::size_t k = 0; k < A.d(); ++k) {
    LinearConstraint e;
    e.relation = Relation::Equal;
    e.rhs = b[k];
    for (std::size_t i = 0; i < n; ++i) e.normal.emplace_back(A.column(i)[k]);
    cs.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < n; ++i) {
    LinearConstraint lo, hi;
    lo.normal.assign(n, Rational(0));
    hi.normal.assign(n, Rational(0));
    lo.normal[i] = 1;
    lo.rhs = 0;
    hi.normal[i] = -1;
    hi.rhs = -r;
    cs.push_back(std::move(lo));
    cs.push_back(std::move(hi));
  }
  return lp_feasible(cs, n).feasible();
}

/// r * sum_i a_i, the componentwise bounding box of Z_r(A).
inline Degree zonotope_corner(const GradingSet& A, Int r) {
  Degree c = A.zero_degree();
  for (const auto& a : A.columns()) c += r * a;
  return c;
}

/// Membership in the truncation ideal M_r = span of x^u with deg(u + v)
/// outside Z_r for every v. Membership depends only on deg u; it is decided
/// for every degree in the bounding box of Z_r, and everything beyond the
/// box is in M_r.
class TruncationIdeal {
public:
  TruncationIdeal(const GradingSet& A, Int r) : A_(A), r_(r), box_(zonotope_corner(A, r)) {
    if (r < 1) throw InvalidInput("zonotope radius must be positive");
    escapes_.assign(box_.size(), 0);
    // Larger box indices first: b + a_i has a larger index than b.
    for (std::size_t idx = box_.size(); idx-- > 0;) {
      const Degree b = box_.degree(idx);
      bool e = false;
      for (const auto& a : A_.columns()) {
        const Degree up = b + a;
        if (box_.contains(up) && escapes_[box_.index(up)]) {
          e = true;
          break;
        }
      }
      if (!e) e = zonotope_contains(A_, r_, b);
      escapes_[idx] = e ? 1 : 0;
    }
  }

  Int radius() const { return r_; }

  /// deg(u) + c lies in Z_r for some c in NA.
  bool degree_reaches_zonotope(const Degree& b) const {
    return box_.contains(b) && escapes_[box_.index(b)];
  }

  bool contains(const ExponentVector& u) const { return !degree_reaches_zonotope(A_.degree_of(u)); }

  /// Minimal generators. A generator u has u - e_i outside M_r, so its
  /// degree is at most r * sum a + a_i.
  MonomialIdeal ideal() const {
    Degree cap = box_.cap();
    Degree amax = A_.zero_degree();
    for (const auto& a : A_.columns())
      for (std::size_t k = 0; k < a.size(); ++k) amax[k] = std::max(amax[k], a[k]);
    cap += amax;
    FiberTable table(A_, cap);
    std::vector<ExponentVector> gens;
    for (const auto& b : table.degrees()) {
      if (degree_reaches_zonotope(b)) continue;
      for (const auto& u : table.points(b)) {
        bool minimal = true;
        for (std::size_t i = 0; i < u.size() && minimal; ++i)
          if (u[i] > 0 && !degree_reaches_zonotope(b - A_.column(i))) minimal = false;
        if (minimal) gens.push_back(u);
      }
    }
    return MonomialIdeal(A_, std::move(gens));
  }

private:
  GradingSet A_;
  Int r_;
  DegreeBox box_;
  std::vector<char> escapes_;
};

inline bool in_truncation_ideal(const GradingSet& A, Int r, const ExponentVector& u) {
  return TruncationIdeal(A, r).contains(u);
}

inline MonomialIdeal truncation_ideal(const GradingSet& A, Int r) {
  return TruncationIdeal(A, r).ideal();
}

/// Degrees of NA inside Z_r(A), graded-lex, each with its fiber.
struct ZonotopeFibers {
  GradingSet grading;
  Int r = 1;
  std::vector<Degree> degrees;
  std::map<Degree, std::vector<ExponentVector>> fibers;

  ZonotopeFibers(const GradingSet& A, Int radius, std::size_t guard = kDefaultFiberGuard)
      : grading(A), r(radius) {
    FiberTable table(A, zonotope_corner(A, radius), guard);
    for (const auto& b : table.degrees())
      if (zonotope_contains(A, radius, b)) {
        degrees.push_back(b);
        fibers.emplace(b, table.points(b));
      }
  }
  bool in_range(const Degree& b) const { return fibers.count(b) > 0; }
};

/// f^b_u f^{b+c}_{v+w} = f^b_v f^{b+c}_{u+w} with deg u = deg v = b, deg w = c.
struct SchemeEquation {
  Degree b;
  ExponentVector u, v;
  Degree c;
  ExponentVector w;

  std::string str() const {
    const Degree bc = b + c;
    return "f[" + b.str(',') + "](" + u.str(',') + ") * f[" + bc.str(',') + "](" + (v + w).str(',') +
           ") = f[" + b.str(',') + "](" + v.str(',') + ") * f[" + bc.str(',') + "](" +
           (u + w).str(',') + ")";
  }
};

/// Calls fn(eq) for every equation with u >lex v and c != 0; stops when fn
/// returns false.
template <class Fn>
void for_each_scheme_equation(const ZonotopeFibers& Z, Fn fn) {
  for (const auto& b : Z.degrees) {
    const auto& F = Z.fibers.at(b);
    if (F.size() < 2) continue;
    for (const auto& c : Z.degrees) {
      if (c.is_zero() || !Z.in_range(b + c)) continue;
      const auto& W = Z.fibers.at(c);
      for (std::size_t i = 0; i < F.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          for (const auto& w : W)
            if (!fn(SchemeEquation{b, F[i], F[j], c, w})) return;
    }
  }
}

inline std::vector<SchemeEquation> scheme_equations(const GradingSet& A, Int r,
                                                    std::size_t guard = 1'000'000) {
  ZonotopeFibers Z(A, r);
  std::vector<SchemeEquation> out;
  for_each_scheme_equation(Z, [&](SchemeEquation e) {
    if (out.size() >= guard) throw GuardExceeded("too many scheme equations");
    out.push_back(std::move(e));
    return true;
  });
  return out;
}

/// One projective coordinate block per degree of NA in Z_r(A), stored in the
/// affine chart where the first nonzero coordinate (fiber points in lex
/// order) is 1.
struct SchemePoint {
  Int r = 1;
  std::map<Degree, std::map<ExponentVector, Rational>> blocks;

  bool operator==(const SchemePoint&) const = default;

  void normalize() {
    for (auto& [b, blk] : blocks) {
      Rational pivot = 0;
      for (const auto& [u, x] : blk)
        if (x != 0) {
          pivot = x;
          break;
        }
      if (pivot == 0) throw InvalidInput("block at degree " + b.str() + " is zero");
      for (auto& [u, x] : blk) x /= pivot;
    }
  }

  const Rational& at(const Degree& b, const ExponentVector& u) const { return blocks.at(b).at(u); }

  std::string str() const {
    std::string s;
    for (const auto& [b, blk] : blocks) {
      s += "[" + b.str(',') + "]";
      for (const auto& [u, x] : blk) s += " " + u.str(',') + " : " + rational_string(x) + ";";
      s += "\n";
    }
    return s;
  }
};

/// Smallest r >= 1 with every primitive degree inside Z_r(A).
inline Int default_radius(const PrimitiveSet& P) {
  for (Int r = 1;; ++r) {
    bool all = true;
    for (const auto& b : P.degrees)
      if (!zonotope_contains(P.grading, r, b)) {
        all = false;
        break;
      }
    if (all) return r;
    if (r > 10000) throw GuardExceeded("default radius search");
  }
}

/// First failing equation, if any.
inline std::optional<SchemeEquation> violated_equation(const GradingSet& A, const SchemePoint& f) {
  ZonotopeFibers Z(A, f.r);
  std::unordered_map<ExponentVector, const Rational*, IntVectorHash> value;
  for (const auto& [b, blk] : f.blocks)
    for (const auto& [u, x] : blk) value.emplace(u, &x);
  auto at = [&](const ExponentVector& u) -> const Rational& {
    auto it = value.find(u);
    if (it == value.end()) throw InvalidInput("point has no coordinate for " + u.str(','));
    return *it->second;
  };
  std::optional<SchemeEquation> bad;
  for_each_scheme_equation(Z, [&](const SchemeEquation& e) {
    if (at(e.u) * at(e.v + e.w) != at(e.v) * at(e.u + e.w)) {
      bad = e;
      return false;
    }
    return true;
  });
  return bad;
}

/// I_f = < f^b_u x^v - f^b_v x^u >, returned as its reduced lex basis.
inline BinomialIdeal point_to_ideal(const GradingSet& A, const SchemePoint& f) {
  ZonotopeFibers Z(A, f.r);
  for (const auto& b : Z.degrees) {
    auto it = f.blocks.find(b);
    if (it == f.blocks.end()) throw InvalidInput("missing block at degree " + b.str());
    if (it->second.size() != Z.fibers.at(b).size()) throw InvalidInput("block size at " + b.str());
    for (const auto& u : Z.fibers.at(b))
      if (!it->second.count(u)) throw InvalidInput("block at " + b.str() + " misses a fiber point");
  }
  if (f.blocks.size() != Z.degrees.size()) throw InvalidInput("blocks outside Z_r(A)");
  if (auto bad = violated_equation(A, f)) throw InvalidInput("point violates " + bad->str());

  // In lex order the standard monomial of a block is its lex-smallest point
  // with a nonzero coordinate. The candidate basis pairs each minimal
  // non-standard monomial with it; it is then completed and checked against
  // every generator of the ideal spanned by the blocks.
  BinomialIdeal J{A, {}};
  std::map<Degree, std::pair<ExponentVector, Rational>> standard;
  std::vector<ExponentVector> nonstandard;
  for (const auto& [b, blk] : f.blocks) {
    const ExponentVector* p = nullptr;
    Rational fp = 0;
    for (const auto& [u, x] : blk)
      if (x != 0) {
        p = &u;
        fp = x;
        break;
      }
    if (!p) throw InvalidInput("block at degree " + b.str() + " is zero");
    standard.emplace(b, std::make_pair(*p, fp));
    // f_p x^v - f_v x^p spans the degree-b part; pairs (u, v) are combinations.
    for (const auto& [v, fv] : blk) {
      if (v == *p) continue;
      nonstandard.push_back(v);
      if (fv == 0)
        J.generators.push_back(monomial_generator(v));
      else
        J.generators.push_back(Binomial{v, *p, fv / fp, false});
    }
  }

  BinomialIdeal seed{A, {}};
  for (const auto& m : minimalize(nonstandard)) {
    const auto& [s, fs] = standard.at(A.degree_of(m));
    const Rational& fm = f.blocks.at(A.degree_of(m)).at(m);
    seed.generators.push_back(fm == 0 ? monomial_generator(m) : Binomial{m, s, fm / fs, false});
  }
  const TermOrder lex = TermOrder::lex(A.n());
  auto gb = buchberger(seed, lex);
  for (const auto& g : J.generators) {
    const auto [cu, wu] = normal_form_monomial(gb, g.u);
    if (g.monomial) {
      if (cu != 0) return buchberger(J, lex);
      continue;
    }
    const auto [cv, wv] = normal_form_monomial(gb, g.v);
    const bool zero = wu == wv ? cu - g.c * cv == 0 : cu == 0 && cv == 0;
    if (!zero) return buchberger(J, lex);
  }
  return gb;
}

/// Reads f^b_u as the normal form coefficient of x^u against the standard
/// monomial of its degree. J must be A-graded.
inline SchemePoint ideal_to_point(const BinomialIdeal& J, Int r) {
  const GradingSet& A = J.grading;
  const auto gb = buchberger(J, TermOrder::lex(A.n()));
  std::vector<ExponentVector> leads;
  for (const auto& g : gb.generators) leads.push_back(g.u);
  const MonomialIdeal in(A, leads);
  const auto verdict = is_A_graded_monomial(in);
  if (!verdict.graded) throw InvalidInput("ideal is not A-graded (degree " + verdict.witness->str() + ")");
  ZonotopeFibers Z(A, r);
  SchemePoint f;
  f.r = r;
  for (const auto& b : Z.degrees) {
    auto& blk = f.blocks[b];
    for (const auto& u : Z.fibers.at(b)) blk[u] = normal_form_monomial(gb, u).first;
  }
  f.normalize();
  return f;
}

/// (lambda . f)^b_u = lambda^u f^b_u.
inline SchemePoint twist(const std::vector<Rational>& lambda, const SchemePoint& f) {
  SchemePoint g = f;
  for (auto& [b, blk] : g.blocks)
    for (auto& [u, x] : blk)
      for (std::size_t i = 0; i < u.size(); ++i) x *= rational_pow(lambda[i], u[i]);
  g.normalize();
  return g;
}

/// The all-ones point, whose ideal is I_A.
inline SchemePoint unit_point(const GradingSet& A, Int r) {
  ZonotopeFibers Z(A, r);
  SchemePoint f;
  f.r = r;
  for (const auto& b : Z.degrees)
    for (const auto& u : Z.fibers.at(b)) f.blocks[b][u] = 1;
  return f;
}

}  // namespace agalg
