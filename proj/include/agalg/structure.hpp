#pragma once

// Cells and polyhedral subdivisions of A-graded ideals, Stanley components,
// radicals of monomial A-graded ideals, and torus-isomorphism invariants.

#include "agalg/groebner.hpp"
#include "agalg/lattice.hpp"
#include "agalg/lp.hpp"

namespace agalg {

/// A subset sigma of column indices (0-based, sorted).
struct Cell {
  std::vector<std::size_t> sigma;

  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;

  /// "{1,2,4}" with 1-based indices.
  std::string str() const {
    std::string s = "{";
    for (std::size_t k = 0; k < sigma.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(sigma[k] + 1);
    }
    return s + "}";
  }
};

struct Subdivision {
  GradingSet grading;
  std::vector<Cell> maximal_cells;  // sorted
  /// Fan property (pairwise intersections are common faces) was checked.
  bool fan_checked = false;
  /// Cells came from bounded nilpotency tests rather than an exact criterion.
  bool heuristic = false;
};

namespace detail {

inline std::vector<std::size_t> mask_to_indices(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1) out.push_back(i);
  return out;
}

inline std::vector<Degree> columns_of(const GradingSet& A, const std::vector<std::size_t>& idx) {
  std::vector<Degree> out;
  for (auto i : idx) out.push_back(A.column(i));
  return out;
}

// Unique inclusion-maximal set among those with b in relint pos(sigma) and
// `allowed(sigma)`.
template <class Allowed>
Cell maximal_cell(const GradingSet& A, const Degree& b, Allowed allowed) {
  const std::size_t n = A.n();
  if (n > 20) throw GuardExceeded("too many columns for the subset scan");
  std::vector<std::uint64_t> good;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (!allowed(mask)) continue;
    if (in_relative_interior(columns_of(A, mask_to_indices(mask, n)), b)) good.push_back(mask);
  }
  std::vector<std::uint64_t> maximal;
  for (auto m : good) {
    bool dominated = false;
    for (auto o : good)
      if (o != m && (m & o) == m) dominated = true;
    if (!dominated) maximal.push_back(m);
  }
  if (maximal.size() != 1)
    throw ConsistencyFailure("support set at degree " + b.str() + " has " +
                             std::to_string(maximal.size()) + " maximal elements");
  return Cell{mask_to_indices(maximal.front(), n)};
}

}  // namespace detail

/// The unique maximal sigma with b in relint pos(a_i : i in sigma) such
/// that no minimal generator of I has support inside sigma.
///
/// For a monomial ideal, x^u is nilpotent iff some generator's support lies
/// in supp(u): if g | x^w with supp(g) in supp(u) then g divides a power of
/// x^u; conversely if (x^u)^k is in I some generator divides it and its
/// support sits in supp(u).
inline Cell cell_of(const MonomialIdeal& I, const Degree& b) {
  const GradingSet& A = I.grading();
  if (b.size() != A.d()) throw DimensionMismatch("degree has wrong dimension");
  if (enumerate_fiber(A, b).points.empty()) throw InvalidInput("degree " + b.str() + " is not in NA");
  std::vector<std::uint64_t> gen_supports;
  for (const auto& g : I.generators()) gen_supports.push_back(support_mask(g));
  return detail::maximal_cell(A, b, [&](std::uint64_t mask) {
    for (auto s : gen_supports)
      if ((s & mask) == s) return false;
    return true;
  });
}

/// True iff x^u is nilpotent modulo I, by testing powers up to `max_power`.
inline bool nilpotent_by_powers(const MonomialIdeal& I, const ExponentVector& u, Int max_power) {
  for (Int k = 1; k <= max_power; ++k)
    if (I.contains(k * u)) return true;
  return false;
}

/// Cell computation for a binomial ideal from a Groebner basis: sigma is
/// treated as nilpotent when (prod_{i in sigma} x_i)^power_cap reduces to 0.
/// A bounded test, so results are heuristic.
inline Cell cell_of_binomial(const BinomialIdeal& gb, const Degree& b, Int power_cap = 20) {
  const GradingSet& A = gb.grading;
  return detail::maximal_cell(A, b, [&](std::uint64_t mask) {
    ExponentVector u(A.n());
    for (std::size_t i = 0; i < A.n(); ++i)
      if ((mask >> i) & 1) u[i] = power_cap;
    return normal_form_monomial(gb, u).first != 0;
  });
}

/// True iff b lies in pos(a_i : i in sigma).
inline bool in_cone(const GradingSet& A, const std::vector<std::size_t>& sigma, const Degree& b) {
  const std::size_t k = sigma.size();
  std::vector<LinearConstraint> cs;
  for (std::size_t c = 0; c < A.d(); ++c) {
    LinearConstraint e;
    e.relation = Relation::Equal;
    e.rhs = b[c];
    for (auto i : sigma) e.normal.emplace_back(A.column(i)[c]);
    cs.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < k; ++i) {
    LinearConstraint g;
    g.normal.assign(k, Rational(0));
    g.normal[i] = 1;
    g.rhs = 0;
    cs.push_back(std::move(g));
  }
  return lp_feasible(cs, k).feasible();
}

namespace detail {

// Some point of pos(sigma) cap pos(tau) needs weight on sigma \ tau.
inline bool overlaps_beyond(const GradingSet& A, const Cell& s, const Cell& t) {
  std::vector<std::size_t> only;
  std::set_difference(s.sigma.begin(), s.sigma.end(), t.sigma.begin(), t.sigma.end(),
                      std::back_inserter(only));
  if (only.empty()) return false;
  const std::size_t ks = s.sigma.size(), kt = t.sigma.size(), dim = ks + kt;
  std::vector<LinearConstraint> cs;
  for (std::size_t c = 0; c < A.d(); ++c) {
    LinearConstraint e;
    e.relation = Relation::Equal;
    e.rhs = 0;
    for (auto i : s.sigma) e.normal.emplace_back(A.column(i)[c]);
    for (auto j : t.sigma) e.normal.emplace_back(-A.column(j)[c]);
    cs.push_back(std::move(e));
  }
  for (std::size_t v = 0; v < dim; ++v) {
    LinearConstraint g;
    g.normal.assign(dim, Rational(0));
    g.normal[v] = 1;
    g.rhs = 0;
    cs.push_back(std::move(g));
  }
  LinearConstraint norm;
  norm.relation = Relation::Equal;
  norm.rhs = 1;
  norm.normal.assign(dim, Rational(0));
  for (std::size_t v = 0; v < ks; ++v)
    if (std::binary_search(only.begin(), only.end(), s.sigma[v])) norm.normal[v] = 1;
  cs.push_back(std::move(norm));
  return lp_feasible(cs, dim).feasible();
}

template <class CellFn>
Subdivision subdivision_from(const GradingSet& A, CellFn cell_fn, bool heuristic) {
  const std::size_t n = A.n();
  if (n > 20) throw GuardExceeded("too many columns for the subset scan");
  // A maximal cell sigma is recovered as cell(sum_{i in sigma} a_i), so the
  // subset sums reach every maximal cell.
  std::set<Cell> cells;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Degree b = A.zero_degree();
    for (auto i : mask_to_indices(mask, n)) b += A.column(i);
    cells.insert(cell_fn(b));
  }
  Subdivision sub;
  sub.grading = A;
  sub.heuristic = heuristic;
  for (const auto& c : cells) {
    bool dominated = false;
    for (const auto& o : cells)
      if (o != c && std::includes(o.sigma.begin(), o.sigma.end(), c.sigma.begin(), c.sigma.end()))
        dominated = true;
    if (!dominated) sub.maximal_cells.push_back(c);
  }
  if (A.d() <= 3) {
    for (std::size_t x = 0; x < sub.maximal_cells.size(); ++x)
      for (std::size_t y = 0; y < sub.maximal_cells.size(); ++y)
        if (x != y && overlaps_beyond(A, sub.maximal_cells[x], sub.maximal_cells[y]))
          throw ConsistencyFailure("cells " + sub.maximal_cells[x].str() + " and " +
                                   sub.maximal_cells[y].str() + " do not meet in a common face");
    // Coverage of pos(A): every column and every pairwise column sum lies in
    // some maximal cone.
    std::vector<Degree> probes = A.columns();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) probes.push_back(A.column(i) + A.column(j));
    for (const auto& b : probes) {
      bool covered = false;
      for (const auto& c : sub.maximal_cells)
        if (in_cone(A, c.sigma, b)) {
          covered = true;
          break;
        }
      if (!covered) throw ConsistencyFailure("degree " + b.str() + " lies in no maximal cell");
    }
    sub.fan_checked = true;
  }
  return sub;
}

}  // namespace detail

inline Subdivision subdivision_of(const MonomialIdeal& I) {
  return detail::subdivision_from(
      I.grading(), [&](const Degree& b) { return cell_of(I, b); }, false);
}

/// Subdivision of a binomial ideal from bounded nilpotency tests modulo its
/// reduced lex basis.
inline Subdivision subdivision_of_binomial(const BinomialIdeal& J, Int power_cap = 20) {
  const BinomialIdeal gb = buchberger(J, TermOrder::lex(J.grading.n()));
  return detail::subdivision_from(
      J.grading, [&](const Degree& b) { return cell_of_binomial(gb, b, power_cap); }, true);
}

/// For each maximal cell sigma: I_sigma + <x_j : j not in sigma>, with
/// I_sigma the toric ideal of the columns in sigma (reduced lex basis).
inline std::vector<BinomialIdeal> stanley_components(const Subdivision& sub) {
  const GradingSet& A = sub.grading;
  const std::size_t n = A.n();
  std::vector<BinomialIdeal> out;
  for (const auto& cell : sub.maximal_cells) {
    BinomialIdeal comp{A, {}};
    const GradingSet Asub = A.restrict_to(cell.sigma);
    const auto gb = toric_gb(Asub, TermOrder::lex(cell.sigma.size()));
    auto lift = [&](const ExponentVector& w) {
      ExponentVector u(n);
      for (std::size_t k = 0; k < cell.sigma.size(); ++k) u[cell.sigma[k]] = w[k];
      return u;
    };
    for (const auto& g : gb.generators)
      comp.generators.push_back(g.monomial ? monomial_generator(lift(g.u))
                                           : Binomial{lift(g.u), lift(g.v), g.c, false});
    for (std::size_t j = 0; j < n; ++j)
      if (!std::binary_search(cell.sigma.begin(), cell.sigma.end(), j))
        comp.generators.push_back(monomial_generator(unit_vector(n, j)));
    out.push_back(std::move(comp));
  }
  return out;
}

/// Radical of a monomial ideal: squarefree parts of the generators.
inline MonomialIdeal radical_mono(const MonomialIdeal& I) {
  std::vector<ExponentVector> gens;
  for (const auto& g : I.generators()) {
    ExponentVector s(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) s[i] = g[i] > 0 ? 1 : 0;
    gens.push_back(std::move(s));
  }
  return MonomialIdeal(I.grading(), std::move(gens));
}

/// True iff a squarefree monomial ideal equals the intersection of the
/// primes <x_j : j not in sigma> over the maximal cells: x_S lies in the
/// intersection iff S fits in no maximal cell.
inline bool matches_stanley_radical(const MonomialIdeal& radical, const Subdivision& sub) {
  const std::size_t n = radical.grading().n();
  if (n > 20) throw GuardExceeded("too many columns for the subset scan");
  std::vector<std::uint64_t> cells;
  for (const auto& c : sub.maximal_cells) {
    std::uint64_t m = 0;
    for (auto i : c.sigma) m |= std::uint64_t{1} << i;
    cells.push_back(m);
  }
  for (std::uint64_t S = 0; S < (std::uint64_t{1} << n); ++S) {
    ExponentVector u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = (S >> i) & 1;
    bool in_intersection = std::none_of(cells.begin(), cells.end(),
                                        [&](std::uint64_t c) { return (S & c) == S; });
    if (radical.contains(u) != in_intersection) return false;
  }
  return true;
}

struct TorusInvariantReport {
  IntMatrix exponent_matrix;         // rows u_i - v_i
  IntMatrix kernel_basis;            // Hermite normal form
  std::vector<Rational> invariant_values;
};

/// Multiplicative invariants prod_i c_i^{z_i} over the integer kernel of
/// the exponent-difference rows of the binomial generators, taken in the
/// orientation given. Monomial generators are skipped.
inline TorusInvariantReport torus_invariants(const BinomialIdeal& J) {
  TorusInvariantReport r;
  std::vector<Rational> coeffs;
  for (const auto& g : J.generators) {
    if (g.monomial) continue;
    std::vector<mpz_class> row;
    for (std::size_t i = 0; i < g.u.size(); ++i) row.emplace_back(static_cast<long>(g.u[i] - g.v[i]));
    r.exponent_matrix.push_back(std::move(row));
    coeffs.push_back(g.c);
  }
  r.kernel_basis = left_kernel(r.exponent_matrix);
  for (const auto& z : r.kernel_basis) {
    Rational val = 1;
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (!z[k].fits_slong_p()) throw GuardExceeded("kernel entry too large");
      val *= rational_pow(coeffs[k], z[k].get_si());
    }
    r.invariant_values.push_back(val);
  }
  return r;
}

/// Decides whether J' = lambda . J for some lambda in the torus (over an
/// algebraically closed field). The reduced lex bases must share their
/// monomial skeleton; then lambda exists iff the coefficient ratios satisfy
/// every character relation, i.e. every invariant of the ratios is 1.
inline bool torus_isomorphic(const BinomialIdeal& J, const BinomialIdeal& Jp) {
  if (!(J.grading == Jp.grading)) return false;
  const TermOrder ord = TermOrder::lex(J.grading.n());
  const auto G = buchberger(J, ord);
  const auto H = buchberger(Jp, ord);
  if (G.generators.size() != H.generators.size()) return false;
  BinomialIdeal ratios{J.grading, {}};
  for (std::size_t k = 0; k < G.generators.size(); ++k) {
    const auto& g = G.generators[k];
    const auto& h = H.generators[k];
    if (g.monomial != h.monomial || g.u != h.u) return false;
    if (g.monomial) continue;
    if (g.v != h.v) return false;
    ratios.generators.push_back(Binomial{g.u, g.v, h.c / g.c, false});
  }
  const auto rep = torus_invariants(ratios);
  return std::all_of(rep.invariant_values.begin(), rep.invariant_values.end(),
                     [](const Rational& q) { return q == 1; });
}

}  // namespace agalg
