#pragma once

// Coherence of monomial A-graded ideals by exact linear programming, and the
// classification table over quadruples.

#include "agalg/census.hpp"
#include "agalg/groebner.hpp"
#include "agalg/lp.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace agalg {

/// One inequality omega . (competitor - standard) >= 1.
struct CoherenceRow {
  Degree degree;
  ExponentVector standard;
  ExponentVector competitor;

  bool operator==(const CoherenceRow&) const = default;
  auto operator<=>(const CoherenceRow& o) const {
    if (degree != o.degree) return graded_lex_less(degree, o.degree) ? std::strong_ordering::less
                                                                     : std::strong_ordering::greater;
    if (auto c = standard <=> o.standard; c != 0) return c;
    return competitor <=> o.competitor;
  }
};

struct CoherenceVerdict {
  bool coherent = false;
  /// Feasible branch: an integer weight with the selection as unique
  /// omega-minima on every primitive-degree fiber.
  std::vector<mpz_class> omega;
  /// Infeasible branch: the rows combined by the certificate and their
  /// multipliers as smallest positive integers.
  std::vector<CoherenceRow> rows;
  std::vector<mpz_class> multipliers;
};

namespace detail {

inline LinearConstraint coherence_constraint(const CoherenceRow& r) {
  LinearConstraint c;
  c.rhs = 1;
  for (std::size_t i = 0; i < r.standard.size(); ++i)
    c.normal.emplace_back(r.competitor[i] - r.standard[i]);
  return c;
}

}  // namespace detail

/// Decides whether sel is in_omega(I_A) for some omega. The inequalities
/// ask the selected monomial to be the unique omega-minimum of each fiber at
/// a primitive degree. When they hold, in_omega(I_A) contains every minimal
/// generator of the selection's ideal and has the same Hilbert function, so
/// the two ideals agree. Monomial ideals are fixed by the torus, so
/// isomorphism and equality coincide here.
///
/// Rows are generated lazily: the LP starts from the primitive binomials
/// with a selected term, and any fiber competitor the current omega fails
/// is added before re-solving. An infeasible subsystem is an infeasible
/// system, and a feasible omega is only accepted against every row.
inline CoherenceVerdict coherence_test(const StandardSelection& sel, const PrimitiveSet& P,
                                       const FiberTable& table) {
  const std::size_t n = sel.grading.n();
  std::vector<CoherenceRow> rows;
  std::set<CoherenceRow> present;
  auto add = [&](CoherenceRow r) {
    if (present.insert(r).second) rows.push_back(std::move(r));
  };
  for (const auto& g : P.binomials) {
    const Degree b = P.degree_of(g);
    const ExponentVector* s = sel.standard_at(b);
    if (!s) throw InvalidInput("selection does not cover primitive degree " + b.str());
    if (*s == g.u) add({b, g.u, g.v});
    if (*s == g.v) add({b, g.v, g.u});
  }

  for (;;) {
    std::vector<LinearConstraint> cs;
    for (const auto& r : rows) cs.push_back(detail::coherence_constraint(r));
    const LPOutcome out = lp_feasible(cs, n);
    if (!out.feasible()) {
      CoherenceVerdict v;
      const auto ints = to_primitive_integers(out.certificate->multipliers);
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if (ints[k] == 0) continue;
        v.rows.push_back(rows[k]);
        v.multipliers.push_back(ints[k]);
      }
      return v;
    }
    const auto& omega = *out.point;
    std::size_t added = 0;
    for (const auto& b : P.degrees) {
      const ExponentVector& s = *sel.standard_at(b);
      for (const auto& w : table.points(b)) {
        if (w == s) continue;
        CoherenceRow r{b, s, w};
        if (present.count(r)) continue;
        if (!satisfies(detail::coherence_constraint(r), omega)) {
          add(std::move(r));
          ++added;
        }
      }
    }
    if (added == 0) {
      CoherenceVerdict v;
      v.coherent = true;
      v.omega = to_primitive_integers(omega);
      // to_primitive_integers keeps signs; the positive rescaling preserves
      // every strict inequality.
      return v;
    }
  }
}

inline CoherenceVerdict coherence_test(const StandardSelection& sel, const PrimitiveSet& P) {
  FiberTable table(P.grading, census_bound(P));
  return coherence_test(sel, P, table);
}

/// Exact check of an incoherence certificate: sum_k y_k (competitor_k -
/// standard_k) = 0 with positive multipliers.
inline bool verify_incoherence(const CoherenceVerdict& v) {
  if (v.coherent || v.rows.empty() || v.rows.size() != v.multipliers.size()) return false;
  const std::size_t n = v.rows.front().standard.size();
  std::vector<mpz_class> sum(n);
  for (std::size_t k = 0; k < v.rows.size(); ++k) {
    if (v.multipliers[k] <= 0) return false;
    for (std::size_t i = 0; i < n; ++i)
      sum[i] += v.multipliers[k] * static_cast<long>(v.rows[k].competitor[i] - v.rows[k].standard[i]);
  }
  return std::all_of(sum.begin(), sum.end(), [](const mpz_class& x) { return x == 0; });
}

/// Recomputes in_omega(I_A) and compares it with the selection's ideal.
inline bool verify_coherent_witness(const StandardSelection& sel, const CoherenceVerdict& v,
                                    const PrimitiveSet* graver = nullptr) {
  if (!v.coherent) return false;
  std::vector<Rational> omega;
  for (const auto& x : v.omega) omega.emplace_back(x);
  const auto init = initial_monomial_ideal(sel.grading, omega, std::nullopt, graver);
  return !init.tiebreak_used && init.ideal == sel.ideal;
}

struct Classification {
  std::size_t graver = 0;
  std::size_t census = 0;
  std::size_t incoherent = 0;
};

inline Classification classify(const GradingSet& A, const CensusOptions& opts = {}) {
  const PrimitiveSet P = primitive_binomials(A);
  const auto census = enumerate_mono_agas(P, opts);
  FiberTable table(A, census_bound(P), opts.guard);
  Classification c;
  c.graver = P.binomials.size();
  c.census = census.size();
  for (const auto& s : census)
    if (!coherence_test(s, P, table).coherent) ++c.incoherent;
  return c;
}

struct Table1Row {
  std::vector<Int> entries;
  Classification result;

  std::string bracket() const {
    std::string s = "[";
    for (Int e : entries) s += std::to_string(e);
    return s + "]";
  }
};

/// classify over every 1 <= a1 < a2 < a3 < a4 <= max_entry, in lexicographic
/// order. Work is spread over `threads` workers; output order is fixed.
inline std::vector<Table1Row> table1(unsigned threads = 1, Int max_entry = 9) {
  std::vector<Table1Row> rows;
  for (Int a = 1; a <= max_entry; ++a)
    for (Int b = a + 1; b <= max_entry; ++b)
      for (Int c = b + 1; c <= max_entry; ++c)
        for (Int d = c + 1; d <= max_entry; ++d) rows.push_back(Table1Row{{a, b, c, d}, {}});
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto work = [&] {
    try {
      for (std::size_t k; (k = next.fetch_add(1)) < rows.size();)
        rows[k].result = classify(GradingSet::from_sorted_1d(rows[k].entries));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = rows.size();
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace agalg
