#pragma once

// Exact rational linear feasibility with Farkas certificates, and the
// polytope predicates built on it (vertex, edge, relative interior).

#include "agalg/core.hpp"

#include <optional>
#include <span>
#include <variant>

namespace agalg {

enum class Relation { GreaterEqual, Equal };

struct LinearConstraint {
  std::vector<Rational> normal;
  Relation relation = Relation::GreaterEqual;
  Rational rhs;
};

/// Multipliers y (nonnegative on >= rows, free on = rows) with
/// sum y_k normal_k = 0 and sum y_k rhs_k > 0.
struct FarkasCertificate {
  std::vector<Rational> multipliers;
};

struct LPOutcome {
  std::optional<std::vector<Rational>> point;
  std::optional<FarkasCertificate> certificate;

  bool feasible() const { return point.has_value(); }
};

namespace simplex {

/// Result of the phase-one problem  M z = r, z >= 0.
struct PhaseOneResult {
  bool feasible = false;
  std::vector<Rational> z;   // when feasible, length N
  std::vector<Rational> pi;  // when infeasible: pi^T M <= 0 and pi^T r > 0
};

/// Revised simplex on the phase-one problem with Bland's rule. M is given
/// column by column (each of length m). Exact throughout.
inline PhaseOneResult phase_one(const std::vector<std::vector<Rational>>& columns,
                                const std::vector<Rational>& rhs) {
  const std::size_t m = rhs.size();
  const std::size_t N = columns.size();
  for (const auto& c : columns)
    if (c.size() != m) throw DimensionMismatch("simplex column length mismatch");

  std::vector<int> sign(m, 1);
  std::vector<Rational> xB(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (rhs[i] < 0) sign[i] = -1;
    xB[i] = sign[i] > 0 ? rhs[i] : Rational(-rhs[i]);
  }
  // Basis starts on the artificial columns N..N+m-1.
  std::vector<std::size_t> basis(m);
  std::vector<char> is_basic(N + m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    basis[i] = N + i;
    is_basic[N + i] = 1;
  }
  std::vector<std::vector<Rational>> Binv(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i) Binv[i][i] = 1;

  auto cost = [N](std::size_t j) { return j >= N ? 1 : 0; };
  auto column_entry = [&](std::size_t j, std::size_t i) -> Rational {
    if (j >= N) return (j - N == i) ? Rational(1) : Rational(0);
    return sign[i] > 0 ? columns[j][i] : Rational(-columns[j][i]);
  };

  std::vector<Rational> pi(m), dir(m);
  Rational tmp;
  for (;;) {
    for (std::size_t k = 0; k < m; ++k) {
      pi[k] = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (cost(basis[i])) pi[k] += Binv[i][k];
    }
    // Bland: lowest-index column with negative reduced cost.
    std::size_t enter = N + m;
    for (std::size_t j = 0; j < N + m && enter == N + m; ++j) {
      if (is_basic[j]) continue;
      Rational rc = cost(j);
      if (j >= N) {
        rc -= pi[j - N];
      } else {
        for (std::size_t i = 0; i < m; ++i) {
          if (columns[j][i] == 0) continue;
          tmp = pi[i] * columns[j][i];
          if (sign[i] > 0) rc -= tmp; else rc += tmp;
        }
      }
      if (rc < 0) enter = j;
    }
    if (enter == N + m) break;

    for (std::size_t i = 0; i < m; ++i) {
      dir[i] = 0;
      for (std::size_t k = 0; k < m; ++k) {
        if (Binv[i][k] == 0) continue;
        Rational e = column_entry(enter, k);
        if (e != 0) dir[i] += Binv[i][k] * e;
      }
    }
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (dir[i] <= 0) continue;
      Rational ratio = xB[i] / dir[i];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw ConsistencyFailure("phase-one simplex reported unbounded");

    const Rational piv = dir[leave];
    for (std::size_t k = 0; k < m; ++k) Binv[leave][k] /= piv;
    xB[leave] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || dir[i] == 0) continue;
      const Rational f = dir[i];
      for (std::size_t k = 0; k < m; ++k)
        if (Binv[leave][k] != 0) Binv[i][k] -= f * Binv[leave][k];
      xB[i] -= f * xB[leave];
    }
    is_basic[basis[leave]] = 0;
    basis[leave] = enter;
    is_basic[enter] = 1;
  }

  PhaseOneResult res;
  Rational objective = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (cost(basis[i])) objective += xB[i];
  if (objective == 0) {
    res.feasible = true;
    res.z.assign(N, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < N) res.z[basis[i]] = xB[i];
  } else {
    res.pi.resize(m);
    for (std::size_t k = 0; k < m; ++k) res.pi[k] = sign[k] > 0 ? pi[k] : Rational(-pi[k]);
  }
  return res;
}

}  // namespace simplex

inline bool satisfies(const LinearConstraint& c, const std::vector<Rational>& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += c.normal[i] * x[i];
  return c.relation == Relation::Equal ? s == c.rhs : s >= c.rhs;
}

/// Exact check of the certificate conditions against the constraint list.
inline bool verify_certificate(std::span<const LinearConstraint> cs,
                               const FarkasCertificate& cert) {
  if (cs.empty() || cert.multipliers.size() != cs.size()) return false;
  const std::size_t dim = cs.front().normal.size();
  std::vector<Rational> combo(dim);
  Rational rhs = 0;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const Rational& y = cert.multipliers[k];
    if (cs[k].relation == Relation::GreaterEqual && y < 0) return false;
    for (std::size_t i = 0; i < dim; ++i) combo[i] += y * cs[k].normal[i];
    rhs += y * cs[k].rhs;
  }
  return std::all_of(combo.begin(), combo.end(), [](const Rational& q) { return q == 0; }) &&
         rhs > 0;
}

inline bool verify_outcome(std::span<const LinearConstraint> cs, const LPOutcome& out) {
  if (out.point) {
    return std::all_of(cs.begin(), cs.end(),
                       [&](const LinearConstraint& c) { return satisfies(c, *out.point); });
  }
  return out.certificate && verify_certificate(cs, *out.certificate);
}

/// Decides { x in Q^dim : normal_k . x (>= or =) rhs_k } over free
/// variables. Works on the alternative system, so the simplex has only
/// dim + 1 rows however many constraints there are.
inline LPOutcome lp_feasible(std::span<const LinearConstraint> cs, std::size_t dim) {
  LPOutcome out;
  if (cs.empty()) {
    out.point = std::vector<Rational>(dim);
    return out;
  }
  for (const auto& c : cs)
    if (c.normal.size() != dim) throw DimensionMismatch("constraint of wrong dimension");

  // Columns: y_k >= 0 for every row, plus -y_k for equality rows.
  // Rows: sum y_k normal_k = 0 (dim rows), sum y_k rhs_k = 1.
  std::vector<std::vector<Rational>> cols;
  std::vector<std::pair<std::size_t, int>> owner;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    std::vector<Rational> col(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) col[i] = cs[k].normal[i];
    col[dim] = cs[k].rhs;
    if (cs[k].relation == Relation::Equal) {
      std::vector<Rational> neg(dim + 1);
      for (std::size_t i = 0; i <= dim; ++i) neg[i] = -col[i];
      cols.push_back(std::move(col));
      owner.emplace_back(k, 1);
      cols.push_back(std::move(neg));
      owner.emplace_back(k, -1);
    } else {
      cols.push_back(std::move(col));
      owner.emplace_back(k, 1);
    }
  }
  std::vector<Rational> r(dim + 1);
  r[dim] = 1;
  auto res = simplex::phase_one(cols, r);
  if (res.feasible) {
    FarkasCertificate cert;
    cert.multipliers.assign(cs.size(), Rational(0));
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (res.z[j] != 0) cert.multipliers[owner[j].first] += owner[j].second * res.z[j];
    out.certificate = std::move(cert);
  } else {
    const Rational& t = res.pi[dim];
    if (t <= 0) throw ConsistencyFailure("alternative system returned a non-positive scale");
    std::vector<Rational> x(dim);
    for (std::size_t i = 0; i < dim; ++i) x[i] = -res.pi[i] / t;
    out.point = std::move(x);
  }
  if (!verify_outcome(cs, out)) throw ConsistencyFailure("LP outcome failed exact verification");
  return out;
}

inline LPOutcome lp_feasible(const std::vector<LinearConstraint>& cs, std::size_t dim) {
  return lp_feasible(std::span<const LinearConstraint>(cs), dim);
}

/// Scales a nonnegative rational vector to the smallest integer vector on
/// the same ray.
inline std::vector<mpz_class> to_primitive_integers(const std::vector<Rational>& y) {
  mpz_class den = 1;
  for (const auto& q : y) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& q : y) {
    mpz_class v = q.get_num() * (den / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

/// True iff u is a vertex of conv(points): u is not a convex combination of
/// the other points.
inline bool is_vertex(const Fiber& F, const ExponentVector& u) {
  if (!F.contains(u)) throw InvalidInput("point not in fiber");
  const std::size_t n = u.size();
  std::vector<std::vector<Rational>> cols;
  for (const auto& p : F.points) {
    if (p == u) continue;
    std::vector<Rational> col(n + 1);
    for (std::size_t i = 0; i < n; ++i) col[i] = p[i];
    col[n] = 1;
    cols.push_back(std::move(col));
  }
  if (cols.empty()) return true;
  std::vector<Rational> r(n + 1);
  for (std::size_t i = 0; i < n; ++i) r[i] = u[i];
  r[n] = 1;
  return !simplex::phase_one(cols, r).feasible;
}

/// True iff conv{u, v} is a face of conv(F) with no third fiber point on
/// it, i.e. some functional is minimized over F exactly on {u, v}.
inline bool is_edge(const Fiber& F, const ExponentVector& u, const ExponentVector& v) {
  if (u == v) throw InvalidInput("edge endpoints must differ");
  if (!F.contains(u) || !F.contains(v)) throw InvalidInput("point not in fiber");
  const std::size_t n = u.size();
  std::vector<LinearConstraint> cs;
  LinearConstraint eq;
  eq.relation = Relation::Equal;
  eq.rhs = 0;
  for (std::size_t i = 0; i < n; ++i) eq.normal.emplace_back(v[i] - u[i]);
  cs.push_back(std::move(eq));
  for (const auto& p : F.points) {
    if (p == u || p == v) continue;
    LinearConstraint c;
    c.rhs = 1;
    for (std::size_t i = 0; i < n; ++i) c.normal.emplace_back(p[i] - u[i]);
    cs.push_back(std::move(c));
  }
  return lp_feasible(cs, n).feasible();
}

/// True iff b = sum lambda_i g_i with every lambda_i > 0.
inline bool in_relative_interior(const std::vector<Degree>& generators, const Degree& b) {
  if (generators.empty()) throw InvalidInput("need at least one generator");
  const std::size_t d = b.size();
  for (const auto& g : generators)
    if (g.size() != d) throw DimensionMismatch("generator of wrong dimension");
  if (b.is_zero()) return false;
  // Homogenized: sum lambda_i g_i - t b = 0, lambda_i >= 1, t >= 1.
  const std::size_t k = generators.size();
  std::vector<LinearConstraint> cs;
  for (std::size_t c = 0; c < d; ++c) {
    LinearConstraint e;
    e.relation = Relation::Equal;
    e.rhs = 0;
    for (std::size_t i = 0; i < k; ++i) e.normal.emplace_back(generators[i][c]);
    e.normal.emplace_back(-b[c]);
    cs.push_back(std::move(e));
  }
  for (std::size_t i = 0; i <= k; ++i) {
    LinearConstraint g;
    g.normal.assign(k + 1, Rational(0));
    g.normal[i] = 1;
    g.rhs = 1;
    cs.push_back(std::move(g));
  }
  return lp_feasible(cs, k + 1).feasible();
}

}  // namespace agalg
