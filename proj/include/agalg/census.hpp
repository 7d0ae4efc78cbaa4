#pragma once

// Census of monomial A-graded ideals: a depth-first search over selections
// of one standard monomial per fiber that are closed under division.

#include "agalg/core.hpp"
#include "agalg/graver.hpp"
#include "agalg/hilbert.hpp"

#include <variant>

namespace agalg {

struct StandardSelection {
  GradingSet grading;
  /// One standard monomial per degree of NA up to the search bound, in
  /// graded-lex order of degree.
  std::vector<std::pair<Degree, ExponentVector>> choice;
  MonomialIdeal ideal;
  /// The A-graded check behind this selection is a theorem (d = 1).
  bool certified = false;

  const ExponentVector* standard_at(const Degree& b) const {
    auto it = std::lower_bound(choice.begin(), choice.end(), b,
                               [](const auto& e, const Degree& x) { return graded_lex_less(e.first, x); });
    if (it == choice.end() || it->first != b) return nullptr;
    return &it->second;
  }
};

struct Rejection {
  std::string reason;
  Degree degree;
};

/// Componentwise maximum of the primitive degrees (the zero degree when
/// there are none).
inline Degree census_bound(const PrimitiveSet& P) {
  Degree B = P.grading.zero_degree();
  for (const auto& b : P.degrees)
    for (std::size_t k = 0; k < B.size(); ++k) B[k] = std::max(B[k], b[k]);
  return B;
}

namespace detail {

// Fibers of NA up to a bound with, for every point, the positions of its
// maximal proper divisors u - e_i.
struct SelectionGraph {
  std::vector<Degree> degrees;                            // graded-lex
  std::vector<std::vector<ExponentVector>> points;        // sorted lex
  std::vector<std::vector<std::vector<std::pair<std::size_t, std::size_t>>>> parents;
  std::vector<char> primitive;

  SelectionGraph(const PrimitiveSet& P, const Degree& B, std::size_t guard) {
    const GradingSet& A = P.grading;
    FiberTable table(A, B, guard);
    degrees = table.degrees();
    std::map<Degree, std::size_t> pos;
    for (std::size_t k = 0; k < degrees.size(); ++k) {
      pos[degrees[k]] = k;
      points.push_back(table.points(degrees[k]));
      primitive.push_back(P.is_primitive_degree(degrees[k]) ? 1 : 0);
    }
    parents.resize(degrees.size());
    for (std::size_t k = 0; k < degrees.size(); ++k) {
      parents[k].resize(points[k].size());
      for (std::size_t p = 0; p < points[k].size(); ++p) {
        const auto& u = points[k][p];
        for (std::size_t i = 0; i < A.n(); ++i) {
          if (u[i] == 0) continue;
          const std::size_t pk = pos.at(degrees[k] - A.column(i));
          ExponentVector w = u;
          w[i] -= 1;
          const auto& f = points[pk];
          const auto it = std::lower_bound(f.begin(), f.end(), w);
          parents[k][p].emplace_back(pk, static_cast<std::size_t>(it - f.begin()));
        }
      }
    }
  }

  bool all_parents_chosen(std::size_t k, std::size_t p, const std::vector<std::size_t>& chosen) const {
    for (const auto& [pk, pp] : parents[k][p])
      if (chosen[pk] != pp) return false;
    return true;
  }

  // Points outside the selection all of whose maximal divisors are selected.
  std::vector<ExponentVector> generators(const std::vector<std::size_t>& chosen) const {
    std::vector<ExponentVector> gens;
    for (std::size_t k = 0; k < degrees.size(); ++k)
      for (std::size_t p = 0; p < points[k].size(); ++p)
        if (p != chosen[k] && all_parents_chosen(k, p, chosen)) gens.push_back(points[k][p]);
    return gens;
  }
};

}  // namespace detail

struct CensusOptions {
  std::size_t guard = kDefaultFiberGuard;
  GradednessOptions gradedness;
};

/// Every monomial A-graded ideal, sorted by minimal generators.
///
/// Degrees of NA up to the bound are visited in graded-lex order, which
/// refines divisibility. A candidate at degree b is a fiber point whose
/// maximal proper divisors are all selected. The minimal generators of a
/// monomial A-graded ideal sit in primitive degrees, and at any degree every
/// unselected candidate is such a minimal generator. So at a non-primitive
/// degree exactly one candidate may exist: with none the fiber lies inside
/// the ideal, with two or more some generator would have a non-primitive
/// degree. At primitive degrees each candidate starts a branch. Because all
/// minimal generators have degree at most the bound, a leaf determines the
/// ideal; every leaf is certified with the Hilbert series test.
inline std::vector<StandardSelection> enumerate_mono_agas(const PrimitiveSet& P,
                                                          const CensusOptions& opts = {}) {
  const GradingSet& A = P.grading;
  const Degree B = census_bound(P);
  detail::SelectionGraph g(P, B, opts.guard);
  const std::size_t m = g.degrees.size();
  std::vector<std::size_t> chosen(m, 0);
  std::vector<StandardSelection> out;

  std::function<void(std::size_t)> dfs = [&](std::size_t k) {
    if (k == m) {
      MonomialIdeal I(A, g.generators(chosen));
      auto verdict = is_A_graded_monomial(I, opts.gradedness);
      if (!verdict.graded) return;
      StandardSelection s;
      s.grading = A;
      for (std::size_t t = 0; t < m; ++t) s.choice.emplace_back(g.degrees[t], g.points[t][chosen[t]]);
      s.ideal = std::move(I);
      s.certified = verdict.certified;
      out.push_back(std::move(s));
      return;
    }
    std::vector<std::size_t> cands;
    for (std::size_t p = 0; p < g.points[k].size(); ++p) {
      if (!g.all_parents_chosen(k, p, chosen)) continue;
      cands.push_back(p);
      if (!g.primitive[k] && cands.size() > 1) return;
    }
    if (cands.empty()) return;
    for (std::size_t p : cands) {
      chosen[k] = p;
      dfs(k + 1);
    }
  };
  dfs(0);

  std::sort(out.begin(), out.end(), [](const StandardSelection& x, const StandardSelection& y) {
    return x.ideal.generators() < y.ideal.generators();
  });
  return out;
}

inline std::vector<StandardSelection> enumerate_mono_agas(const GradingSet& A,
                                                          const CensusOptions& opts = {}) {
  return enumerate_mono_agas(primitive_binomials(A), opts);
}

/// For each degree of NA up to B with exactly one monomial outside I, that
/// monomial. Degrees with zero or several are left out.
inline std::map<Degree, ExponentVector> selection_from_ideal(const MonomialIdeal& I, const Degree& B,
                                                             std::size_t guard = kDefaultFiberGuard) {
  FiberTable table(I.grading(), B, guard);
  std::map<Degree, ExponentVector> out;
  for (const auto& b : table.degrees()) {
    const ExponentVector* pick = nullptr;
    int count = 0;
    for (const auto& u : table.points(b))
      if (!I.contains(u)) {
        pick = &u;
        ++count;
      }
    if (count == 1) out.emplace(b, *pick);
  }
  return out;
}

/// Checks a proposed selection: one fiber point for each degree of NA up to
/// the census bound, closed under division, with an A-graded induced ideal
/// whose minimal generators have primitive degrees.
inline std::variant<StandardSelection, Rejection> verify_selection(
    const PrimitiveSet& P, const std::map<Degree, ExponentVector>& choice,
    const CensusOptions& opts = {}) {
  const GradingSet& A = P.grading;
  const Degree B = census_bound(P);
  detail::SelectionGraph g(P, B, opts.guard);
  std::vector<std::size_t> chosen(g.degrees.size());
  for (std::size_t k = 0; k < g.degrees.size(); ++k) {
    auto it = choice.find(g.degrees[k]);
    if (it == choice.end()) return Rejection{"no standard monomial chosen", g.degrees[k]};
    const auto& pts = g.points[k];
    auto pos = std::lower_bound(pts.begin(), pts.end(), it->second);
    if (pos == pts.end() || *pos != it->second)
      return Rejection{"chosen monomial is not in the fiber", g.degrees[k]};
    chosen[k] = static_cast<std::size_t>(pos - pts.begin());
    if (!g.all_parents_chosen(k, chosen[k], chosen))
      return Rejection{"not closed under division", g.degrees[k]};
  }
  auto gens = g.generators(chosen);
  std::sort(gens.begin(), gens.end(), [&](const ExponentVector& x, const ExponentVector& y) {
    return graded_lex_less(A.degree_of(x), A.degree_of(y));
  });
  for (const auto& u : gens)
    if (!P.is_primitive_degree(A.degree_of(u)))
      return Rejection{"minimal generator " + monomial_string(u) + " in a non-primitive degree",
                       A.degree_of(u)};
  MonomialIdeal I(A, gens);
  auto verdict = is_A_graded_monomial(I, opts.gradedness);
  if (!verdict.graded) return Rejection{"induced ideal is not A-graded", *verdict.witness};
  StandardSelection s;
  s.grading = A;
  for (std::size_t k = 0; k < g.degrees.size(); ++k)
    s.choice.emplace_back(g.degrees[k], g.points[k][chosen[k]]);
  s.ideal = std::move(I);
  s.certified = verdict.certified;
  return s;
}

/// The standard monomial of every degree of NA up to `up_to` (degree 0
/// included), in graded-lex order of degree.
inline std::vector<std::pair<Degree, ExponentVector>> standard_monomials(
    const MonomialIdeal& I, const Degree& up_to, std::size_t guard = kDefaultFiberGuard) {
  const auto verdict = is_A_graded_monomial(I);
  if (!verdict.graded)
    throw InvalidInput("ideal is not A-graded (fails at degree " + verdict.witness->str() + ")");
  FiberTable table(I.grading(), up_to, guard);
  std::vector<std::pair<Degree, ExponentVector>> out;
  for (const auto& b : table.degrees()) {
    const ExponentVector* pick = nullptr;
    for (const auto& u : table.points(b))
      if (!I.contains(u)) {
        if (pick) throw ConsistencyFailure("two standard monomials at degree " + b.str());
        pick = &u;
      }
    if (!pick) throw ConsistencyFailure("no standard monomial at degree " + b.str());
    out.emplace_back(b, *pick);
  }
  return out;
}

}  // namespace agalg
