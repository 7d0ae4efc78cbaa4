#pragma once

// Command-line front end. run() is callable from tests; tools/agalg.cpp is a
// thin main around it.

#include "agalg/agalg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

namespace agalg::cli {

using nlohmann::json;

enum ExitCode { kOk = 0, kRejected = 1, kUsage = 2 };

class UsageError : public Error {
public:
  using Error::Error;
};

/// Raised by a subcommand after it has printed a negative domain answer.
class Rejected : public Error {
public:
  using Error::Error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline bool is_file(const std::string& s) {
  std::error_code ec;
  return !s.empty() && std::filesystem::is_regular_file(s, ec);
}

/// A file in the grading-set text format, or inline: "1 3 4 7", "1,3,4,7",
/// or rows separated by ';' ("3,2,1,0;0,1,2,3").
inline GradingSet parse_grading(const std::string& arg) {
  try {
    if (is_file(arg)) return GradingSet::parse(read_file(arg));
    std::string text = arg;
    for (char& ch : text) {
      if (ch == ',') ch = ' ';
      if (ch == ';') ch = '\n';
    }
    return GradingSet::parse(text);
  } catch (const InvalidInput& e) {
    throw UsageError(std::string("bad grading set: ") + e.what());
  }
}

inline std::vector<Int> parse_int_list(const std::string& s) {
  std::string t = s;
  for (char& ch : t)
    if (ch == ',' || ch == ';') ch = ' ';
  std::istringstream in(t);
  std::vector<Int> out;
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    Int x = 0;
    try {
      x = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + tok + "'");
    }
    if (pos != tok.size()) throw UsageError("bad integer '" + tok + "'");
    out.push_back(x);
  }
  return out;
}

inline std::vector<Rational> parse_rational_list(const std::string& s) {
  std::string t = s;
  for (char& ch : t)
    if (ch == ',' || ch == ';') ch = ' ';
  std::istringstream in(t);
  std::vector<Rational> out;
  std::string tok;
  while (in >> tok) {
    try {
      out.push_back(parse_rational(tok));
    } catch (const InvalidInput& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

inline ExponentVector exponent_from(const std::vector<Int>& v, std::size_t n) {
  if (v.size() != n) throw UsageError("exponent vector needs " + std::to_string(n) + " entries");
  return ExponentVector(v);
}

/// Ideal records, one per line: "u=2,0,1,0 v=0,2,0,0 c=3/2" (v and c
/// optional, a missing v is a monomial; '#' starts a comment), or a JSON
/// array of objects {"u": [...], "v": [...], "c": "p/q"}.
inline BinomialIdeal parse_ideal(const GradingSet& A, const std::string& text) {
  BinomialIdeal J{A, {}};
  auto add = [&](const std::vector<Int>& u, const std::optional<std::vector<Int>>& v, Rational c) {
    if (!v) {
      J.generators.push_back(monomial_generator(exponent_from(u, A.n())));
      return;
    }
    Binomial b{exponent_from(u, A.n()), exponent_from(*v, A.n()), c, false};
    if (c == 0) throw UsageError("zero coefficient in ideal record");
    J.generators.push_back(std::move(b));
  };
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad JSON ideal: ") + e.what());
    }
    for (const auto& rec : doc) {
      if (!rec.contains("u")) throw UsageError("ideal record without u");
      std::optional<std::vector<Int>> v;
      if (rec.contains("v")) v = rec.at("v").get<std::vector<Int>>();
      Rational c = 1;
      if (rec.contains("c")) {
        const auto& cj = rec.at("c");
        c = parse_rational(cj.is_string() ? cj.get<std::string>() : cj.dump());
      }
      add(rec.at("u").get<std::vector<Int>>(), v, c);
    }
  } else {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
      // Records may also be separated by '|' for inline use.
      std::istringstream recs(line);
      std::string rec;
      while (std::getline(recs, rec, '|')) {
        std::istringstream ls(rec);
        std::string tok;
        std::optional<std::vector<Int>> u, v;
        Rational c = 1;
        while (ls >> tok) {
          const auto eq = tok.find('=');
          if (eq == std::string::npos) throw UsageError("bad ideal field '" + tok + "'");
          const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
          if (key == "u")
            u = parse_int_list(val);
          else if (key == "v")
            v = parse_int_list(val);
          else if (key == "c")
            c = parse_rational(val);
          else
            throw UsageError("unknown ideal field '" + key + "'");
        }
        if (!u) {
          if (v) throw UsageError("ideal record without u");
          continue;
        }
        add(*u, v, c);
      }
    }
  }
  try {
    J.check();
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  return J;
}

inline BinomialIdeal load_ideal(const GradingSet& A, const std::string& arg) {
  return parse_ideal(A, is_file(arg) ? read_file(arg) : arg);
}

inline MonomialIdeal as_monomial(const BinomialIdeal& J) {
  std::vector<ExponentVector> gens;
  for (const auto& g : J.generators) {
    if (!g.monomial) throw UsageError("expected a monomial ideal, found " + g.str());
    gens.push_back(g.u);
  }
  return MonomialIdeal(J.grading, std::move(gens));
}

inline json to_json(const ExponentVector& u) { return json(u.values()); }
inline json to_json(const Degree& b) { return json(b.values()); }
inline json to_json(const Binomial& g) {
  json j{{"u", to_json(g.u)}};
  if (!g.monomial) {
    j["v"] = to_json(g.v);
    j["c"] = rational_string(g.c);
  }
  return j;
}
inline json to_json(const std::vector<Rational>& v) {
  json j = json::array();
  for (const auto& q : v) j.push_back(rational_string(q));
  return j;
}
inline json to_json(const std::vector<mpz_class>& v) {
  json j = json::array();
  for (const auto& q : v) j.push_back(q.get_str());
  return j;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

/// "2*w1 + 2*w2 + 8*w3 + 4*w4"
inline std::string linear_form(const std::vector<mpz_class>& coeffs) {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    terms.push_back((coeffs[i] == 1 ? std::string() : coeffs[i].get_str() + "*") + "w" +
                    std::to_string(i + 1));
  }
  return terms.empty() ? "0" : join(terms, " + ");
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json_output = false;
  unsigned threads = 1;
  std::uint64_t seed = 20240531;
};

/// Collects mismatches for the example registry.
struct Checker {
  Context& ctx;
  std::size_t failures = 0;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      ctx.out << "MISMATCH: " << what << "\n";
    }
  }
};

// ---------------------------------------------------------------------------
// Shared fixtures for the example registry.

inline GradingSet grading_1347() { return GradingSet::from_sorted_1d({1, 3, 4, 7}); }

inline MonomialIdeal ideal_21() {
  return MonomialIdeal(grading_1347(), {{3, 0, 0, 0},
                                        {1, 1, 0, 0},
                                        {0, 2, 0, 0},
                                        {0, 1, 1, 0},
                                        {1, 0, 0, 1},
                                        {2, 0, 2, 0},
                                        {1, 0, 4, 0},
                                        {0, 1, 0, 3},
                                        {0, 0, 0, 4}});
}

/// Standard monomials of ideal_21 in degrees 1..28.
inline std::vector<ExponentVector> ideal_21_standard_table() {
  return {{1, 0, 0, 0}, {2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 1, 0}, {2, 0, 1, 0},
          {0, 0, 0, 1}, {0, 0, 2, 0}, {1, 0, 2, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 3, 0},
          {1, 0, 3, 0}, {0, 0, 0, 2}, {0, 0, 2, 1}, {0, 0, 4, 0}, {0, 1, 0, 2}, {0, 0, 1, 2},
          {0, 0, 3, 1}, {0, 0, 5, 0}, {0, 0, 0, 3}, {0, 0, 2, 2}, {0, 0, 4, 1}, {0, 0, 6, 0},
          {0, 0, 1, 3}, {0, 0, 3, 2}, {0, 0, 5, 1}, {0, 0, 7, 0}};
}

/// The three-parameter family of binomial A-graded ideals over {1,3,4,7}.
inline BinomialIdeal family_23(const Rational& c1, const Rational& c2, const Rational& c3) {
  BinomialIdeal J{grading_1347(), {}};
  J.generators = {Binomial{{2, 0, 1, 0}, {0, 2, 0, 0}, c1, false},
                  Binomial{{1, 0, 4, 0}, {0, 1, 0, 2}, c2, false},
                  Binomial{{0, 0, 7, 0}, {0, 0, 0, 4}, c3, false}};
  for (ExponentVector m : std::vector<ExponentVector>{
           {3, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 0, 1}, {0, 3, 0, 0}, {0, 2, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 3}})
    J.generators.push_back(monomial_generator(m));
  return J;
}

inline GradingSet grading_octahedral() {
  return GradingSet::from_rows({{4, 0, 0, 2, 1, 1}, {0, 4, 0, 1, 2, 1}, {0, 0, 4, 1, 1, 2}});
}

inline MonomialIdeal octahedral_monomials() {
  return MonomialIdeal(grading_octahedral(), {{1, 1, 1, 0, 0, 0},
                                              {1, 0, 0, 0, 1, 1},
                                              {0, 1, 0, 1, 0, 1},
                                              {0, 0, 1, 1, 1, 0},
                                              {1, 1, 0, 0, 0, 2},
                                              {1, 0, 1, 0, 2, 0},
                                              {0, 1, 1, 2, 0, 0}});
}

inline BinomialIdeal octahedral_family(const Rational& c1, const Rational& c2, const Rational& c3) {
  BinomialIdeal J{grading_octahedral(), {}};
  const auto base = octahedral_monomials();
  for (const auto& g : base.generators()) J.generators.push_back(monomial_generator(g));
  J.generators.push_back(Binomial{{1, 0, 0, 0, 4, 0}, {0, 1, 0, 4, 0, 0}, c1, false});
  J.generators.push_back(Binomial{{0, 1, 0, 0, 0, 4}, {0, 0, 1, 0, 4, 0}, c2, false});
  J.generators.push_back(Binomial{{0, 0, 1, 4, 0, 0}, {1, 0, 0, 0, 0, 4}, c3, false});
  return J;
}

inline GradingSet grading_twisted_cubic() { return GradingSet::from_rows({{3, 2, 1, 0}, {0, 1, 2, 3}}); }

inline Rational random_nonzero_rational(std::mt19937_64& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  int p = 0;
  while (p == 0) p = num(rng);
  Rational q(p, den(rng));
  q.canonicalize();
  return q;
}

/// Random A = {a_1 < ... < a_n} with gcd 1.
inline std::vector<Int> random_1d_set(std::mt19937_64& rng, std::size_t n, Int max_entry) {
  std::uniform_int_distribution<Int> pick(1, max_entry);
  for (;;) {
    std::set<Int> s;
    while (s.size() < n) s.insert(pick(rng));
    Int g = 0;
    for (Int x : s) g = std::gcd(g, x);
    if (g == 1) return {s.begin(), s.end()};
  }
}

inline bool lex_basis_is_family(const BinomialIdeal& J) {
  const auto gb = buchberger(J, TermOrder::lex(J.grading.n()));
  auto key = [](const Binomial& b) { return std::make_tuple(b.u, b.monomial, b.v, b.c); };
  std::vector<std::tuple<ExponentVector, bool, ExponentVector, Rational>> x, y;
  for (const auto& g : gb.generators) x.push_back(key(g));
  for (const auto& g : J.generators) y.push_back(key(g));
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

inline MonomialIdeal leading_ideal(const BinomialIdeal& gb) {
  std::vector<ExponentVector> leads;
  for (const auto& g : gb.generators) leads.push_back(g.u);
  return MonomialIdeal(gb.grading, std::move(leads));
}

// ---------------------------------------------------------------------------
// Example registry.

inline bool example_incoherent_quartic(Context& ctx) {
  Checker ck{ctx};
  const auto I = ideal_21();
  const auto& A = I.grading();
  const auto verdict = is_A_graded_monomial(I);
  ctx.out << "ideal " << I.str() << " over " << A.bracket() << "\n";
  ctx.out << "A-graded: " << (verdict.graded ? "true" : "false")
          << (verdict.certified ? " (certified by the Hilbert series identity)" : "") << "\n";
  ck.expect(verdict.graded && verdict.certified, "ideal should be certified A-graded");
  const auto P = primitive_binomials(A);
  const auto sel = std::get<StandardSelection>(verify_selection(P, selection_from_ideal(I, census_bound(P))));
  const auto v = coherence_test(sel, P);
  ctx.out << "coherent: " << (v.coherent ? "true" : "false") << "\n";
  ck.expect(!v.coherent && verify_incoherence(v), "ideal should be incoherent with a valid certificate");
  std::vector<mpz_class> lhs(A.n()), rhs(A.n());
  for (std::size_t k = 0; k < v.rows.size(); ++k) {
    const auto& r = v.rows[k];
    ctx.out << "  " << v.multipliers[k] << " x [degree " << r.degree.str() << "] "
            << monomial_string(r.standard) << " < " << monomial_string(r.competitor) << "\n";
    for (std::size_t i = 0; i < A.n(); ++i) {
      lhs[i] += v.multipliers[k] * static_cast<long>(r.standard[i]);
      rhs[i] += v.multipliers[k] * static_cast<long>(r.competitor[i]);
    }
  }
  ctx.out << "standard side: " << linear_form(lhs) << "\n";
  ctx.out << "competitor side: " << linear_form(rhs) << "\n";
  std::vector<Int> degs;
  std::vector<mpz_class> mult;
  for (std::size_t k = 0; k < v.rows.size(); ++k) {
    degs.push_back(v.rows[k].degree[0]);
    mult.push_back(v.multipliers[k]);
  }
  ck.expect(degs == std::vector<Int>{6, 17, 28}, "certificate rows should sit in degrees 6, 17, 28");
  ck.expect(mult == std::vector<mpz_class>{1, 2, 1}, "certificate multipliers should be 1, 2, 1");
  ck.expect(linear_form(lhs) == "2*w1 + 2*w2 + 8*w3 + 4*w4" && lhs == rhs,
            "both sides should equal 2*w1 + 2*w2 + 8*w3 + 4*w4");

  ctx.out << "standard monomials:\n";
  const auto table = standard_monomials(I, Degree{28});
  const auto expected = ideal_21_standard_table();
  for (std::size_t k = 1; k < table.size(); ++k) {
    ctx.out << "  " << table[k].first.str() << "\t" << monomial_string(table[k].second) << "\n";
    ck.expect(k - 1 < expected.size() && table[k].second == expected[k - 1],
              "standard monomial at degree " + std::to_string(k));
  }
  ck.expect(table.size() == 29, "29 degrees from 0 to 28");
  return ck.failures == 0;
}

inline bool example_family(Context& ctx) {
  Checker ck{ctx};
  std::mt19937_64 rng(ctx.seed);
  for (int t = 0; t < 20; ++t) {
    const Rational c1 = random_nonzero_rational(rng), c2 = random_nonzero_rational(rng),
                   c3 = random_nonzero_rational(rng);
    const auto J = family_23(c1, c2, c3);
    const auto gb = buchberger(J, TermOrder::lex(4));
    const bool reduced = lex_basis_is_family(J);
    const auto verdict = is_A_graded_monomial(leading_ideal(gb));
    ctx.out << "c = (" << c1 << ", " << c2 << ", " << c3 << "): A-graded "
            << (verdict.graded ? "true" : "false") << ", generators form the reduced lex basis "
            << (reduced ? "true" : "false") << "\n";
    ck.expect(verdict.graded && verdict.certified, "family member should be A-graded");
    ck.expect(reduced, "generators should already be the reduced lex basis");
  }
  return ck.failures == 0;
}

inline bool example_family_invariant(Context& ctx) {
  Checker ck{ctx};
  const auto rep = torus_invariants(family_23(2, 3, 5));
  ctx.out << "kernel:";
  for (const auto& z : rep.kernel_basis) ctx.out << " (" << join({z[0].get_str(), z[1].get_str(), z[2].get_str()}, ",") << ")";
  ctx.out << "\ninvariant c1*c3/c2^2 at (2,3,5): " << rep.invariant_values.at(0) << "\n";
  ck.expect(rep.kernel_basis.size() == 1 && rep.kernel_basis[0] == std::vector<mpz_class>{1, -2, 1},
            "kernel should be spanned by (1,-2,1)");
  ck.expect(rep.invariant_values.at(0) == Rational(10, 9), "invariant should be 10/9");
  std::mt19937_64 rng(ctx.seed + 1);
  int agree = 0;
  for (int t = 0; t < 20; ++t) {
    const Rational a1 = random_nonzero_rational(rng), a2 = random_nonzero_rational(rng),
                   a3 = random_nonzero_rational(rng);
    Rational b1 = random_nonzero_rational(rng), b2 = random_nonzero_rational(rng),
             b3 = random_nonzero_rational(rng);
    if (t % 2 == 0) b3 = a1 * a3 / (a2 * a2) * b2 * b2 / b1;  // same invariant
    const bool same = a1 * a3 / (a2 * a2) == b1 * b3 / (b2 * b2);
    const bool iso = torus_isomorphic(family_23(a1, a2, a3), family_23(b1, b2, b3));
    if (same == iso) ++agree;
    ck.expect(same == iso, "torus isomorphism should follow the invariant");
  }
  ctx.out << "torus isomorphism matches the invariant on " << agree << " of 20 pairs\n";
  return ck.failures == 0;
}

inline bool example_sharp_bound(Context& ctx) {
  Checker ck{ctx};
  std::mt19937_64 rng(ctx.seed + 2);
  int found = 0;
  while (found < 5) {
    auto a = random_1d_set(rng, 4, 13);
    const Int p = a[2], q = a[3];
    if (std::gcd(p, q) != 1) continue;
    ++found;
    const auto A = GradingSet::from_sorted_1d(a);
    const auto gb = toric_gb(A, TermOrder::lex(4));
    const Binomial target{unit_vector(4, 2, q), unit_vector(4, 3, p), 1, false};
    const bool present = std::find(gb.generators.begin(), gb.generators.end(), target) != gb.generators.end();
    bool has_degree = false;
    const auto leads = leading_ideal(gb);
    for (const auto& u : leads.generators())
      if (A.degree_of(u)[0] == p * q) has_degree = true;
    ctx.out << A.bracket() << ": x3^" << q << " - x4^" << p << " in lex basis " << (present ? "true" : "false")
            << ", minimal generator of degree " << p * q << " " << (has_degree ? "true" : "false") << "\n";
    ck.expect(present && has_degree, "bound should be attained for " + A.bracket());
  }
  return ck.failures == 0;
}

inline bool example_nonconvex_standard(Context& ctx) {
  Checker ck{ctx};
  const auto A = GradingSet::from_sorted_1d({3, 4, 5, 13, 14});
  const MonomialIdeal I(A, {{3, 0, 0, 0, 0}, {0, 2, 0, 0, 0}, {0, 0, 2, 0, 0}, {1, 0, 0, 0, 1},
                            {0, 1, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 0, 2}});
  const auto verdict = is_A_graded_monomial(I);
  const auto q = semigroup_series_d1(A).numerator_q;
  DegreePolynomial expected_q;
  add_term(expected_q, Degree{0}, 1);
  add_term(expected_q, Degree{1}, -1);
  add_term(expected_q, Degree{3}, 1);
  ctx.out << "A-graded: " << (verdict.graded ? "true" : "false") << "; series 1/(1-t) - t - t^2\n";
  ck.expect(verdict.graded && verdict.certified, "ideal should be certified A-graded");
  ck.expect(q == expected_q, "semigroup numerator should be 1 - t + t^3");
  const auto F = enumerate_fiber(A, Degree{15});
  ck.expect(F.points.size() == 4, "fiber of 15 should have 4 points");
  for (const auto& u : F.points) {
    const bool std_mono = !I.contains(u), vertex = is_vertex(F, u);
    ctx.out << "(" << u.str(',') << ")" << (std_mono ? " standard" : "") << ", vertex: " << (vertex ? "true" : "false") << "\n";
    ck.expect(vertex == (u != ExponentVector{2, 1, 1, 0, 0}), "vertex status of " + u.str(','));
    ck.expect(std_mono == (u == ExponentVector{2, 1, 1, 0, 0}), "standard status of " + u.str(','));
  }
  return ck.failures == 0;
}

inline bool example_non_groebner_degree(Context& ctx) {
  Checker ck{ctx};
  const auto A = GradingSet::from_sorted_1d({15, 20, 23, 24});
  const auto P = primitive_binomials(A);
  std::vector<Binomial> at138;
  for (const auto& g : P.binomials)
    if (P.degree_of(g) == Degree{138}) at138.push_back(g);
  const Binomial target{{2, 3, 0, 2}, {0, 0, 6, 0}, 1, false};
  ck.expect(at138.size() == 1 && at138[0] == target, "unique primitive binomial of degree 138");
  const bool edge = in_some_reduced_gb(A, target);
  const bool gdeg = is_groebner_degree(A, Degree{138});
  ck.expect(!edge, "edge test should be false");
  ck.expect(!gdeg, "138 should not be a Groebner degree");
  ctx.out << (at138.size() == 1 ? "unique" : "non-unique") << " primitive binomial of degree 138; edge test: "
          << (edge ? "true" : "false") << "; Gröbner degree: " << (gdeg ? "true" : "false") << "\n";
  if (!at138.empty()) ctx.out << at138[0].str() << "\n";
  return ck.failures == 0;
}

inline bool example_octahedral(Context& ctx) {
  Checker ck{ctx};
  const auto sub = subdivision_of(octahedral_monomials());
  std::vector<std::string> cells;
  for (const auto& c : sub.maximal_cells) cells.push_back(c.str());
  ctx.out << "cells: " << join(cells, " ") << "\n";
  ck.expect(cells == std::vector<std::string>{"{1,2,4,5}", "{1,3,4,6}", "{2,3,5,6}", "{4,5,6}"},
            "four maximal cells");
  const auto rep = torus_invariants(octahedral_family(2, 3, 5));
  ck.expect(rep.kernel_basis.size() == 1 && rep.kernel_basis[0] == std::vector<mpz_class>{1, 1, 1},
            "kernel should be spanned by (1,1,1)");
  ck.expect(rep.invariant_values.size() == 1 && rep.invariant_values[0] == 30, "invariant c1*c2*c3");
  ctx.out << "invariant lattice (1,1,1); invariant c1*c2*c3\n";
  std::mt19937_64 rng(ctx.seed + 3);
  const auto base = octahedral_family(1, 1, 1);
  for (int t = 0; t < 10; ++t) {
    const Rational c1 = random_nonzero_rational(rng), c2 = random_nonzero_rational(rng);
    const Rational c3 = t % 2 == 0 ? Rational(1) / (c1 * c2) : random_nonzero_rational(rng);
    const bool trivial = torus_isomorphic(base, octahedral_family(c1, c2, c3));
    ctx.out << "c = (" << c1 << ", " << c2 << ", " << c3 << "): torus-isomorphic to c = 1: "
            << (trivial ? "true" : "false") << "\n";
    ck.expect(trivial == (c1 * c2 * c3 == 1), "torus triviality iff c1*c2*c3 = 1");
  }
  return ck.failures == 0;
}

inline bool example_twisted_cubic(Context& ctx) {
  Checker ck{ctx};
  const auto A = grading_twisted_cubic();
  const auto P = primitive_binomials(A);
  for (const auto& g : P.binomials) ctx.out << g.str() << "\t" << P.degree_of(g).str(',') << "\n";
  const std::set<Degree> degs(P.degrees.begin(), P.degrees.end());
  ck.expect(P.binomials.size() == 5, "five primitive binomials");
  ck.expect(degs == std::set<Degree>{{4, 2}, {3, 3}, {2, 4}, {6, 3}, {3, 6}}, "primitive degrees");
  const MonomialIdeal I(A, {{1, 0, 0, 1}, {0, 2, 0, 0}, {0, 0, 2, 0}});
  const auto v = is_A_graded_monomial(I);
  ctx.out << I.str() << " A-graded: " << (v.graded ? "true" : "false");
  if (v.witness) ctx.out << ", witness (" << v.witness->str(',') << ") with " << v.count << " standard monomials";
  ctx.out << "\n";
  ck.expect(!v.graded && v.witness && (*v.witness == Degree{4, 5} || *v.witness == Degree{5, 4}) && v.count == 0,
            "not A-graded with witness (4,5) and count 0");
  return ck.failures == 0;
}

inline bool example_coherent_triples(Context& ctx) {
  Checker ck{ctx};
  std::mt19937_64 rng(ctx.seed + 4);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_1d_set(rng, 3, 12);
    const auto A = GradingSet::from_sorted_1d(a);
    const auto P = primitive_binomials(A);
    const auto census = enumerate_mono_agas(P);
    FiberTable table(A, census_bound(P));
    std::size_t incoherent = 0;
    for (const auto& s : census)
      if (!coherence_test(s, P, table).coherent) ++incoherent;
    ctx.out << A.bracket() << ": " << census.size() << " monomial A-graded ideals, " << incoherent << " incoherent\n";
    ck.expect(incoherent == 0, "every census member of " + A.bracket() + " should be coherent");
  }
  return ck.failures == 0;
}

inline bool example_equivariance(Context& ctx) {
  Checker ck{ctx};
  const auto A = grading_1347();
  const Int r = default_radius(primitive_binomials(A));
  std::mt19937_64 rng(ctx.seed + 5);
  const auto f = ideal_to_point(family_23(2, -3, 5), r);
  const auto If = point_to_ideal(A, f);
  ck.expect(ideal_to_point(If, r) == f, "round trip point -> ideal -> point");
  ck.expect(If.generators == buchberger(family_23(2, -3, 5), TermOrder::lex(4)).generators,
            "round trip ideal -> point -> ideal");
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> lambda, inverse;
    for (int i = 0; i < 4; ++i) {
      lambda.push_back(random_nonzero_rational(rng, 5));
      inverse.push_back(Rational(1) / lambda.back());
    }
    const auto lhs = point_to_ideal(A, twist(lambda, f));
    const auto rhs = buchberger(torus_act(inverse, If), TermOrder::lex(4));
    ck.expect(lhs.generators == rhs.generators, "twist equivariance");
  }
  ctx.out << "radius " << r << "; round trip and twist equivariance on 20 torus elements: "
          << (ck.failures == 0 ? "ok" : "failed") << "\n";
  return ck.failures == 0;
}

struct ExampleEntry {
  std::string name;
  std::string summary;
  bool (*run)(Context&);
};

inline const std::vector<ExampleEntry>& example_registry() {
  static const std::vector<ExampleEntry> reg = {
      {"thm2.1a", "incoherent monomial ideal over {1,3,4,7} and its standard monomials", example_incoherent_quartic},
      {"thm2.1b", "three-parameter binomial family over {1,3,4,7}", example_family},
      {"eq2.3-invariant", "torus invariant c1*c3/c2^2 of the family", example_family_invariant},
      {"prop2.3-sharp", "the degree bound a_{n-1}*a_n is attained", example_sharp_bound},
      {"thm3.3", "A-graded ideal with a non-vertex standard monomial", example_nonconvex_standard},
      {"ex3.5", "primitive degree that is not a Groebner degree", example_non_groebner_degree},
      {"ex4.2", "subdivision and torus invariant in three dimensions", example_octahedral},
      {"ex5.2", "twisted cubic primitives and a non-A-graded ideal", example_twisted_cubic},
      {"thm1.1-spotcheck", "monomial A-graded ideals of triples are coherent", example_coherent_triples},
      {"remark5.5-equivariance", "scheme round trip and torus equivariance", example_equivariance},
  };
  return reg;
}

// ---------------------------------------------------------------------------
// Subcommands.

inline void print_binomials(Context& ctx, const GradingSet& A, const std::vector<Binomial>& gens) {
  if (ctx.json_output) {
    json j = json::array();
    for (const auto& g : gens) {
      auto e = to_json(g);
      e["degree"] = to_json(A.degree_of(g.u));
      j.push_back(e);
    }
    ctx.out << j.dump(2) << "\n";
    return;
  }
  for (const auto& g : gens) ctx.out << g.str() << "\n";
}

inline int cmd_fiber(Context& ctx, const GradingSet& A, const std::string& degree) {
  const auto b = parse_int_list(degree);
  if (b.size() != A.d()) throw UsageError("degree needs " + std::to_string(A.d()) + " entries");
  const auto F = enumerate_fiber(A, Degree(b));
  if (ctx.json_output) {
    json pts = json::array();
    for (const auto& u : F.points) pts.push_back({{"u", to_json(u)}, {"vertex", is_vertex(F, u)}});
    ctx.out << json{{"degree", to_json(F.degree)}, {"points", pts}}.dump(2) << "\n";
  } else {
    for (const auto& u : F.points) ctx.out << u.str() << (is_vertex(F, u) ? "\tvertex" : "") << "\n";
  }
  return kOk;
}

inline int cmd_graver(Context& ctx, const GradingSet& A, std::optional<Int> bound) {
  GraverOptions opts;
  opts.bound = bound;
  const auto P = primitive_binomials(A, opts);
  if (ctx.json_output) {
    json j = json::array();
    for (const auto& g : P.binomials)
      j.push_back({{"u", to_json(g.u)}, {"v", to_json(g.v)}, {"degree", to_json(P.degree_of(g))}});
    ctx.out << json{{"binomials", j}, {"certified", P.certified}, {"bound", P.bound_note}}.dump(2) << "\n";
  } else {
    for (const auto& g : P.binomials)
      ctx.out << g.u.str() << " | " << g.v.str() << " | " << P.degree_of(g).str() << "\n";
    ctx.out << "# " << P.binomials.size() << " primitive binomials; " << P.bound_note << "\n";
  }
  return kOk;
}

inline TermOrder order_from(const GradingSet& A, const std::string& weight, const std::string& perm) {
  std::optional<std::vector<std::size_t>> p;
  if (!perm.empty()) {
    std::vector<std::size_t> q;
    for (Int x : parse_int_list(perm)) {
      if (x < 1 || static_cast<std::size_t>(x) > A.n()) throw UsageError("permutation entries are 1..n");
      q.push_back(static_cast<std::size_t>(x - 1));
    }
    p = q;
  }
  try {
    if (!weight.empty()) {
      auto w = parse_rational_list(weight);
      if (w.size() != A.n()) throw UsageError("weight needs " + std::to_string(A.n()) + " entries");
      return p ? TermOrder::weight(w, *p) : TermOrder::weight(w);
    }
    return p ? TermOrder::lex(*p) : TermOrder::lex(A.n());
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
}

inline int cmd_gb(Context& ctx, const GradingSet& A, const std::string& ideal, const TermOrder& ord) {
  const auto gb = ideal.empty() ? toric_gb(A, ord) : buchberger(load_ideal(A, ideal), ord);
  print_binomials(ctx, A, gb.generators);
  return kOk;
}

inline int cmd_initial(Context& ctx, const GradingSet& A, const std::string& weight, const std::string& perm) {
  if (weight.empty()) throw UsageError("initial needs --weight");
  auto w = parse_rational_list(weight);
  if (w.size() != A.n()) throw UsageError("weight needs " + std::to_string(A.n()) + " entries");
  std::optional<std::vector<std::size_t>> p;
  if (!perm.empty()) p = order_from(A, "", perm).permutation();
  const auto init = initial_monomial_ideal(A, w, p);
  if (ctx.json_output) {
    json gens = json::array();
    for (const auto& g : init.ideal.generators()) gens.push_back(to_json(g));
    ctx.out << json{{"generators", gens}, {"tiebreak_used", init.tiebreak_used}, {"degenerate", init.degenerate}}.dump(2)
            << "\n";
  } else {
    for (const auto& g : init.ideal.generators()) ctx.out << monomial_string(g) << "\n";
    if (init.tiebreak_used) ctx.out << "# tiebreak used" << (init.degenerate ? " (degenerate weight)" : "") << "\n";
  }
  return kOk;
}

inline int cmd_census(Context& ctx, const GradingSet& A) {
  const auto census = enumerate_mono_agas(A);
  if (ctx.json_output) {
    json j = json::array();
    for (const auto& s : census) {
      json gens = json::array(), choice = json::array();
      for (const auto& g : s.ideal.generators()) gens.push_back(to_json(g));
      for (const auto& [b, u] : s.choice) choice.push_back({{"degree", to_json(b)}, {"standard", to_json(u)}});
      j.push_back({{"generators", gens}, {"selection", choice}, {"certified", s.certified}});
    }
    ctx.out << j.dump(2) << "\n";
  } else {
    for (const auto& s : census) {
      std::vector<std::string> g;
      for (const auto& u : s.ideal.generators()) g.push_back(monomial_string(u));
      ctx.out << join(g, ", ") << (s.certified ? "" : "\t# bounded check") << "\n";
    }
    ctx.out << "# " << census.size() << " monomial A-graded ideals\n";
  }
  return kOk;
}

inline int cmd_coherence(Context& ctx, const GradingSet& A, const std::string& ideal) {
  const auto P = primitive_binomials(A);
  if (ideal.empty()) {
    const auto c = classify(A);
    if (ctx.json_output)
      ctx.out << json{{"graver", c.graver}, {"census", c.census}, {"incoherent", c.incoherent}}.dump(2) << "\n";
    else
      ctx.out << A.bracket() << "\t" << c.graver << "\t" << c.census << "\t" << c.incoherent << "\n";
    return kOk;
  }
  const auto I = as_monomial(load_ideal(A, ideal));
  const auto checked = verify_selection(P, selection_from_ideal(I, census_bound(P)));
  if (const auto* rej = std::get_if<Rejection>(&checked)) {
    ctx.err << "rejected: " << rej->reason << " at degree " << rej->degree.str() << "\n";
    return kRejected;
  }
  const auto& sel = std::get<StandardSelection>(checked);
  if (!(sel.ideal == I)) {
    ctx.err << "rejected: ideal is not generated in primitive degrees\n";
    return kRejected;
  }
  const auto v = coherence_test(sel, P);
  if (ctx.json_output) {
    json j{{"coherent", v.coherent}};
    if (v.coherent) {
      j["omega"] = to_json(v.omega);
    } else {
      json rows = json::array();
      for (std::size_t k = 0; k < v.rows.size(); ++k)
        rows.push_back({{"degree", to_json(v.rows[k].degree)},
                        {"standard", to_json(v.rows[k].standard)},
                        {"competitor", to_json(v.rows[k].competitor)},
                        {"multiplier", v.multipliers[k].get_str()}});
      j["certificate"] = rows;
    }
    ctx.out << j.dump(2) << "\n";
    return kOk;
  }
  if (v.coherent) {
    std::vector<std::string> w;
    for (const auto& x : v.omega) w.push_back(x.get_str());
    ctx.out << "coherent\nomega: " << join(w, " ") << "\n";
    return kOk;
  }
  ctx.out << "incoherent\ncertificate:\n";
  std::vector<mpz_class> lhs(A.n());
  for (std::size_t k = 0; k < v.rows.size(); ++k) {
    const auto& r = v.rows[k];
    ctx.out << "  " << v.multipliers[k] << " x [degree " << r.degree.str() << "] " << monomial_string(r.standard)
            << " < " << monomial_string(r.competitor) << "\n";
    for (std::size_t i = 0; i < A.n(); ++i) lhs[i] += v.multipliers[k] * static_cast<long>(r.standard[i]);
  }
  ctx.out << "both sides: " << linear_form(lhs) << "\n";
  return kOk;
}

inline int cmd_table1(Context& ctx, bool all, Int max_entry) {
  const auto rows = table1(ctx.threads, max_entry);
  json j = json::array();
  for (const auto& r : rows) {
    if (!all && r.result.incoherent == 0) continue;
    if (ctx.json_output)
      j.push_back({{"set", r.entries}, {"graver", r.result.graver}, {"census", r.result.census},
                   {"incoherent", r.result.incoherent}});
    else
      ctx.out << r.bracket() << "\t" << r.result.graver << "\t" << r.result.census << "\t" << r.result.incoherent
              << "\n";
  }
  if (ctx.json_output) ctx.out << j.dump(2) << "\n";
  return kOk;
}

inline int cmd_hilbert(Context& ctx, const GradingSet& A, const std::string& ideal) {
  const auto I = as_monomial(load_ideal(A, ideal));
  const auto num = hilbert_numerator(I).poly;
  const auto v = is_A_graded_monomial(I);
  if (ctx.json_output) {
    json terms = json::array();
    for (const auto& [d, c] : num) terms.push_back({{"degree", to_json(d)}, {"coeff", c.get_str()}});
    json j{{"numerator", terms}, {"a_graded", v.graded}, {"certified", v.certified}};
    if (v.witness) j["witness"] = {{"degree", to_json(*v.witness)}, {"count", v.count.get_str()}};
    ctx.out << j.dump(2) << "\n";
  } else {
    for (const auto& [d, c] : num) ctx.out << c << " @ " << d.str() << "\n";
    ctx.out << "A-graded: " << (v.graded ? "true" : "false") << (v.certified ? "" : " (bounded check)") << "\n";
    if (v.witness) ctx.out << "witness: degree " << v.witness->str() << ", " << v.count << " standard monomials\n";
  }
  return kOk;
}

inline MonomialIdeal require_graded(Context& ctx, const GradingSet& A, const std::string& ideal) {
  auto I = as_monomial(load_ideal(A, ideal));
  const auto v = is_A_graded_monomial(I);
  if (!v.graded) {
    ctx.err << "rejected: ideal is not A-graded (degree " << v.witness->str() << ")\n";
    throw Rejected("not A-graded");
  }
  return I;
}

inline int cmd_radical(Context& ctx, const GradingSet& A, const std::string& ideal) {
  const auto I = require_graded(ctx, A, ideal);
  const auto R = radical_mono(I);
  const bool matches = matches_stanley_radical(R, subdivision_of(I));
  if (ctx.json_output) {
    json gens = json::array();
    for (const auto& g : R.generators()) gens.push_back(to_json(g));
    ctx.out << json{{"generators", gens}, {"matches_stanley", matches}}.dump(2) << "\n";
  } else {
    ctx.out << R.str() << "\n# intersection of Stanley components: " << (matches ? "equal" : "DIFFERENT") << "\n";
  }
  return matches ? kOk : kRejected;
}

inline int cmd_subdivision(Context& ctx, const GradingSet& A, const std::string& ideal) {
  const auto J = load_ideal(A, ideal);
  const bool monomial = std::all_of(J.generators.begin(), J.generators.end(), [](const Binomial& g) { return g.monomial; });
  Subdivision sub = monomial ? subdivision_of(require_graded(ctx, A, ideal)) : subdivision_of_binomial(J);
  if (ctx.json_output) {
    json cells = json::array();
    for (const auto& c : sub.maximal_cells) {
      json s = json::array();
      for (auto i : c.sigma) s.push_back(i + 1);
      cells.push_back(s);
    }
    ctx.out << json{{"cells", cells}, {"fan_checked", sub.fan_checked}, {"heuristic", sub.heuristic}}.dump(2) << "\n";
  } else {
    for (const auto& c : sub.maximal_cells) ctx.out << c.str() << "\n";
    if (sub.heuristic) ctx.out << "# heuristic (bounded nilpotency test)\n";
  }
  return kOk;
}

inline int cmd_invariants(Context& ctx, const GradingSet& A, const std::string& ideal) {
  const auto rep = torus_invariants(load_ideal(A, ideal));
  if (ctx.json_output) {
    json ker = json::array();
    for (const auto& z : rep.kernel_basis) ker.push_back(to_json(z));
    ctx.out << json{{"kernel", ker}, {"invariants", to_json(rep.invariant_values)}}.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < rep.kernel_basis.size(); ++k) {
      std::vector<std::string> z;
      for (const auto& x : rep.kernel_basis[k]) z.push_back(x.get_str());
      ctx.out << "(" << join(z, ",") << ")\t" << rep.invariant_values[k] << "\n";
    }
    if (rep.kernel_basis.empty()) ctx.out << "# trivial kernel\n";
  }
  return kOk;
}

inline int cmd_scheme(Context& ctx, const GradingSet& A, std::optional<Int> radius, const std::string& ideal,
                      bool list) {
  const Int threshold = default_radius(primitive_binomials(A));
  const Int r = radius.value_or(threshold);
  const bool below = r < threshold;
  if (!ideal.empty()) {
    const auto f = ideal_to_point(load_ideal(A, ideal), r);
    if (ctx.json_output) {
      json blocks = json::array();
      for (const auto& [b, blk] : f.blocks) {
        json coords = json::array();
        for (const auto& [u, x] : blk) coords.push_back({{"u", to_json(u)}, {"value", rational_string(x)}});
        blocks.push_back({{"degree", to_json(b)}, {"coords", coords}});
      }
      ctx.out << json{{"radius", r}, {"below_threshold", below}, {"blocks", blocks}}.dump(2) << "\n";
    } else {
      ctx.out << "# radius " << r << (below ? " (below the primitive-degree radius " + std::to_string(threshold) + ")" : "")
              << "\n" << f.str();
    }
    return kOk;
  }
  const auto eqs = scheme_equations(A, r);
  if (ctx.json_output) {
    json j = json::array();
    if (list)
      for (const auto& e : eqs) j.push_back(e.str());
    ctx.out << json{{"radius", r}, {"below_threshold", below}, {"count", eqs.size()}, {"equations", j}}.dump(2)
            << "\n";
  } else {
    ctx.out << "radius " << r << ": " << eqs.size() << " equations";
    if (below) ctx.out << " (below the primitive-degree radius " << threshold << ")";
    ctx.out << "\n";
    if (list)
      for (const auto& e : eqs) ctx.out << e.str() << "\n";
  }
  return kOk;
}

inline int cmd_example(Context& ctx, const std::string& name) {
  const auto& reg = example_registry();
  if (name == "list") {
    for (const auto& e : reg) ctx.out << e.name << "\t" << e.summary << "\n";
    return kOk;
  }
  std::vector<const ExampleEntry*> todo;
  for (const auto& e : reg)
    if (name == "all" || e.name == name || (name == "thm2.1" && e.name == "thm2.1a")) todo.push_back(&e);
  if (todo.empty()) throw UsageError("unknown example '" + name + "' (try 'example list')");
  bool ok = true;
  for (const auto* e : todo) {
    ctx.out << "== " << e->name << ": " << e->summary << "\n";
    const bool pass = e->run(ctx);
    ctx.out << "result: " << (pass ? "ok" : "MISMATCH") << "\n";
    ok = ok && pass;
  }
  return ok ? kOk : kRejected;
}

inline int cmd_scan(Context& ctx, const std::string& kind, Int max_entry, std::size_t n, const std::string& grading) {
  if (kind == "coherence-nd2") {
    // d = 1 with n - d <= 2, so n <= 3.
    if (n < 2 || n > 3) throw UsageError("coherence-nd2 scans d = 1 sets with n = 2 or 3");
    std::size_t sets = 0, members = 0;
    std::vector<std::string> findings;
    std::vector<Int> a(n);
    std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int lo) {
      if (i == n) {
        Int g = 0;
        for (Int x : a) g = std::gcd(g, x);
        if (g != 1) return;
        const auto A = GradingSet::from_sorted_1d(a);
        const auto c = classify(A);
        ++sets;
        members += c.census;
        if (c.incoherent) findings.push_back(A.bracket() + "\t" + std::to_string(c.incoherent) + " incoherent");
        return;
      }
      for (Int x = lo; x <= max_entry; ++x) {
        a[i] = x;
        rec(i + 1, x + 1);
      }
    };
    rec(0, 1);
    if (ctx.json_output) {
      ctx.out << json{{"kind", kind}, {"sets", sets}, {"members", members}, {"findings", findings}}.dump(2) << "\n";
    } else {
      ctx.out << "scanned " << sets << " sets, " << members << " monomial A-graded ideals, " << findings.size()
              << " sets with incoherent members\n";
      for (const auto& f : findings) ctx.out << f << "\n";
    }
    return kOk;
  }
  if (kind == "subdivision-realization") {
    if (grading.empty()) throw UsageError("subdivision-realization needs --grading");
    const auto A = parse_grading(grading);
    if (A.d() != 1) throw UsageError("subdivision-realization scans d = 1 configurations");
    // For d = 1 every subdivision has a single maximal cell, any nonempty
    // subset of the columns.
    std::map<Cell, std::size_t> realized;
    for (const auto& s : enumerate_mono_agas(A)) {
      const auto sub = subdivision_of(s.ideal);
      for (const auto& c : sub.maximal_cells) ++realized[c];
    }
    json rows = json::array();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << A.n()); ++mask) {
      Cell c;
      for (std::size_t i = 0; i < A.n(); ++i)
        if ((mask >> i) & 1) c.sigma.push_back(i);
      const std::size_t k = realized.count(c) ? realized[c] : 0;
      if (ctx.json_output)
        rows.push_back({{"cell", c.str()}, {"realized_by", k}});
      else
        ctx.out << c.str() << "\t" << (k ? "realized by " + std::to_string(k) + " radicals" : "not realized") << "\n";
    }
    if (ctx.json_output) ctx.out << json{{"kind", kind}, {"cells", rows}}.dump(2) << "\n";
    return kOk;
  }
  throw UsageError("unknown scan kind '" + kind + "'");
}

/// Entry point: 0 success, 1 domain rejection, 2 usage error.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact computations for A-graded algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  unsigned threads = 1;
  std::uint64_t seed = 20240531;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", threads, "Worker threads");
  app.add_option("--seed", seed, "Seed for randomized checks");

  std::string grading, ideal, degree, weight, perm, name, kind;
  std::optional<Int> bound, radius;
  bool all = false, list = false;
  Int max_entry = 9;
  std::size_t scan_n = 3;

  auto with_grading = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("--grading", grading, "Grading set: file or inline list");
    if (required) o->required();
  };
  auto* fiber = app.add_subcommand("fiber", "Lattice points of a fiber");
  with_grading(fiber);
  fiber->add_option("--degree", degree, "Degree b")->required();
  auto* graver = app.add_subcommand("graver", "Primitive binomials");
  with_grading(graver);
  graver->add_option("--bound", bound, "Degree bound (d = 1) or entry bound (d >= 2)");
  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of the toric ideal or of --ideal");
  with_grading(gb);
  gb->add_option("--ideal", ideal, "Ideal file");
  gb->add_option("--weight", weight, "Weight vector");
  gb->add_option("--order", perm, "Variable order, largest first (1-based)");
  auto* initial = app.add_subcommand("initial", "Initial monomial ideal of the toric ideal");
  with_grading(initial);
  initial->add_option("--weight", weight, "Weight vector")->required();
  initial->add_option("--tiebreak", perm, "Lex tiebreak, largest first (1-based)");
  auto* census = app.add_subcommand("census", "All monomial A-graded ideals");
  with_grading(census);
  auto* coherence = app.add_subcommand("coherence", "Coherence of one ideal, or counts over the census");
  with_grading(coherence);
  coherence->add_option("--ideal", ideal, "Ideal file");
  auto* t1 = app.add_subcommand("table1", "Incoherent counts over quadruples");
  t1->add_flag("--all", all, "Print every quadruple");
  t1->add_option("--max-entry", max_entry, "Largest entry");
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert numerator and A-gradedness");
  with_grading(hilbert);
  hilbert->add_option("--ideal", ideal, "Ideal file")->required();
  auto* radical = app.add_subcommand("radical", "Radical of a monomial A-graded ideal");
  with_grading(radical);
  radical->add_option("--ideal", ideal, "Ideal file")->required();
  auto* subdivision = app.add_subcommand("subdivision", "Maximal cells of the subdivision");
  with_grading(subdivision);
  subdivision->add_option("--ideal", ideal, "Ideal file")->required();
  auto* invariants = app.add_subcommand("invariants", "Torus invariants of binomial generators");
  with_grading(invariants);
  invariants->add_option("--ideal", ideal, "Ideal file")->required();
  auto* scheme = app.add_subcommand("scheme", "Scheme equations, or the point of --ideal");
  with_grading(scheme);
  scheme->add_option("--radius", radius, "Zonotope radius");
  scheme->add_option("--bound", radius, "Alias for --radius");
  scheme->add_option("--ideal", ideal, "Ideal file");
  scheme->add_flag("--list", list, "Print every equation");
  auto* example = app.add_subcommand("example", "Run a named example");
  example->add_option("name", name, "Example name, 'list' or 'all'")->required();
  auto* scan = app.add_subcommand("conjecture-scan", "Search a bounded range for counterexamples");
  scan->add_option("--kind", kind, "coherence-nd2 or subdivision-realization")->required();
  scan->add_option("--max-entry", max_entry, "Largest entry");
  scan->add_option("--n", scan_n, "Number of entries");
  with_grading(scan, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  Context ctx{out, err, format == "json", threads, seed};
  try {
    if (*fiber) return cmd_fiber(ctx, parse_grading(grading), degree);
    if (*graver) return cmd_graver(ctx, parse_grading(grading), bound);
    if (*gb) {
      const auto A = parse_grading(grading);
      return cmd_gb(ctx, A, ideal, order_from(A, weight, perm));
    }
    if (*initial) return cmd_initial(ctx, parse_grading(grading), weight, perm);
    if (*census) return cmd_census(ctx, parse_grading(grading));
    if (*coherence) return cmd_coherence(ctx, parse_grading(grading), ideal);
    if (*t1) return cmd_table1(ctx, all, max_entry);
    if (*hilbert) return cmd_hilbert(ctx, parse_grading(grading), ideal);
    if (*radical) return cmd_radical(ctx, parse_grading(grading), ideal);
    if (*subdivision) return cmd_subdivision(ctx, parse_grading(grading), ideal);
    if (*invariants) return cmd_invariants(ctx, parse_grading(grading), ideal);
    if (*scheme) return cmd_scheme(ctx, parse_grading(grading), radius, ideal, list);
    if (*example) return cmd_example(ctx, name);
    if (*scan) return cmd_scan(ctx, kind, max_entry, scan_n, grading);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Rejected&) {
    return kRejected;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kRejected;
  }
  return kUsage;
}

}  // namespace agalg::cli
