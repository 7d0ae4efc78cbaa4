#include <catch2/catch_amalgamated.hpp>

#include "agalg/cli.hpp"
#include "oracles.hpp"

using namespace agalg;

namespace {

bool support_criterion(const MonomialIdeal& I, const ExponentVector& u) {
  const auto s = support_mask(u);
  for (const auto& g : I.generators())
    if ((support_mask(g) & s) == support_mask(g)) return true;
  return false;
}

Int max_generator_exponent(const MonomialIdeal& I) {
  Int m = 1;
  for (const auto& g : I.generators())
    for (Int x : g) m = std::max(m, x);
  return m;
}

}  // namespace

TEST_CASE("nilpotency by supports matches bounded powers on two censuses", "[structure][oracle]") {
  for (const auto& e : std::vector<std::vector<Int>>{{1, 3, 4, 7}, {2, 5, 7, 9}}) {
    const auto A = GradingSet::from_sorted_1d(e);
    const auto monomials = oracle::monomials_up_to(A, Degree{24});
    for (const auto& s : enumerate_mono_agas(A)) {
      const Int cap = 3 * max_generator_exponent(s.ideal);
      for (const auto& u : monomials) {
        INFO(A.bracket() << " " << s.ideal.str() << " " << monomial_string(u));
        REQUIRE(support_criterion(s.ideal, u) == nilpotent_by_powers(s.ideal, u, cap));
      }
    }
  }
}

TEST_CASE("cells are the supports of non-nilpotent multiples", "[structure][oracle]") {
  const auto A = GradingSet::from_sorted_1d({1, 3, 4, 7});
  const auto monomials = oracle::monomials_up_to(A, Degree{84});
  for (const auto& s : enumerate_mono_agas(A)) {
    const Int cap = 3 * max_generator_exponent(s.ideal);
    for (Int b = 1; b <= 7; ++b) {
      std::uint64_t seen = 0;
      for (const auto& u : monomials)
        if (A.degree_of(u)[0] % b == 0 && !u.is_zero() && !nilpotent_by_powers(s.ideal, u, cap))
          seen |= support_mask(u);
      std::uint64_t cell = 0;
      for (auto i : cell_of(s.ideal, Degree{b}).sigma) cell |= std::uint64_t{1} << i;
      INFO(s.ideal.str() << " degree " << b);
      REQUIRE(cell == seen);
    }
  }
}

TEST_CASE("radicals equal the Stanley intersection", "[structure][oracle]") {
  for (const auto& e : std::vector<std::vector<Int>>{{1, 3, 4, 7}, {2, 5, 7, 9}, {2, 3}}) {
    const auto A = GradingSet::from_sorted_1d(e);
    for (const auto& s : enumerate_mono_agas(A)) {
      const auto sub = subdivision_of(s.ideal);
      INFO(A.bracket() << " " << s.ideal.str());
      REQUIRE(sub.maximal_cells.size() == 1);
      REQUIRE(matches_stanley_radical(radical_mono(s.ideal), sub));
    }
  }
}

TEST_CASE("Stanley components are toric primes of the cells", "[structure]") {
  const auto A = GradingSet::from_sorted_1d({1, 3, 4, 7});
  Subdivision sub{A, {Cell{{1, 2}}}, false, false};
  const auto comps = stanley_components(sub);
  REQUIRE(comps.size() == 1);
  // x2^4 - x3^3 plus x1 and x4.
  CHECK(comps[0].generators.size() == 3);
  CHECK(comps[0].generators[0] == Binomial{{0, 4, 0, 0}, {0, 0, 3, 0}, 1, false});
}

TEST_CASE("octahedral subdivision", "[structure]") {
  const auto sub = subdivision_of(cli::octahedral_monomials());
  CHECK(sub.fan_checked);
  std::vector<std::string> cells;
  for (const auto& c : sub.maximal_cells) cells.push_back(c.str());
  CHECK(cells == std::vector<std::string>{"{1,2,4,5}", "{1,3,4,6}", "{2,3,5,6}", "{4,5,6}"});
  const auto heuristic = subdivision_of_binomial(cli::octahedral_family(2, 3, 5));
  CHECK(heuristic.heuristic);
  CHECK(heuristic.maximal_cells == sub.maximal_cells);
}

TEST_CASE("the toric ideal has one full cell", "[structure]") {
  const auto A = GradingSet::from_sorted_1d({2, 5, 7});
  const auto sub = subdivision_of_binomial(toric_gb(A, TermOrder::lex(3)));
  REQUIRE(sub.maximal_cells.size() == 1);
  CHECK(sub.maximal_cells[0].sigma == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("torus invariants", "[structure]") {
  auto rep = torus_invariants(cli::family_23(2, 3, 5));
  REQUIRE(rep.kernel_basis.size() == 1);
  CHECK(rep.kernel_basis[0] == std::vector<mpz_class>{1, -2, 1});
  CHECK(rep.invariant_values[0] == Rational(10, 9));

  rep = torus_invariants(cli::octahedral_family(2, 3, 5));
  REQUIRE(rep.kernel_basis.size() == 1);
  CHECK(rep.kernel_basis[0] == std::vector<mpz_class>{1, 1, 1});
  CHECK(rep.invariant_values[0] == 30);

  CHECK(torus_isomorphic(cli::family_23(1, 1, 1), cli::family_23(4, 2, 1)));
  CHECK_FALSE(torus_isomorphic(cli::family_23(1, 1, 1), cli::family_23(2, 1, 1)));
  CHECK(torus_isomorphic(cli::octahedral_family(1, 1, 1), cli::octahedral_family(2, 3, Rational(1, 6))));
  CHECK_FALSE(torus_isomorphic(cli::octahedral_family(1, 1, 1), cli::octahedral_family(2, 3, 1)));
}

TEST_CASE("torus isomorphism is invariant under random rescaling", "[structure][oracle]") {
  std::mt19937_64 rng(41);
  const auto J = cli::family_23(2, -3, 5);
  for (int t = 0; t < 10; ++t) {
    std::vector<Rational> lambda;
    for (int i = 0; i < 4; ++i) lambda.push_back(oracle::random_nonzero(rng, 7));
    CHECK(torus_isomorphic(J, torus_act(lambda, J)));
  }
}
