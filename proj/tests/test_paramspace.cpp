#include <catch2/catch_amalgamated.hpp>

#include "agalg/cli.hpp"
#include "oracles.hpp"

using namespace agalg;

TEST_CASE("zonotope membership", "[paramspace]") {
  const auto A = GradingSet::from_sorted_1d({2, 3});
  for (Int r = 1; r <= 3; ++r)
    for (Int b = 0; b <= 20; ++b) CHECK(zonotope_contains(A, r, Degree{b}) == (b <= 5 * r));
  const auto C = GradingSet::from_rows({{3, 2, 1, 0}, {0, 1, 2, 3}});
  CHECK(zonotope_contains(C, 1, Degree{6, 6}));
  CHECK(zonotope_contains(C, 1, Degree{3, 0}));
  CHECK_FALSE(zonotope_contains(C, 1, Degree{4, 0}));
  CHECK_FALSE(zonotope_contains(C, 1, Degree{6, 1}));
  CHECK(zonotope_contains(C, 1, Degree{5, 1}));
  CHECK_THROWS_AS(zonotope_contains(C, 0, Degree{1, 1}), InvalidInput);
}

TEST_CASE("truncation ideal", "[paramspace]") {
  const auto A = GradingSet::from_sorted_1d({2, 3});
  const auto M = truncation_ideal(A, 1);
  CHECK(M.generators() == std::vector<ExponentVector>{{0, 2}, {2, 1}, {3, 0}});
  for (const auto& u : oracle::monomials_up_to(A, Degree{12}))
    CHECK(in_truncation_ideal(A, 1, u) == (A.degree_of(u)[0] > 5));
}

TEST_CASE("scheme equations", "[paramspace]") {
  const auto A = GradingSet::from_sorted_1d({2, 3});
  CHECK(scheme_equations(A, 1).empty());
  const auto eqs = scheme_equations(A, 2);
  CHECK(eqs.size() == 4);
  CHECK(eqs.front().str() == "f[6](3,0) * f[8](1,2) = f[6](0,2) * f[8](4,0)");
  CHECK_THROWS_AS(scheme_equations(GradingSet::from_sorted_1d({1, 3, 4, 7}), 2, 1000), GuardExceeded);
  CHECK(default_radius(primitive_binomials(GradingSet::from_sorted_1d({1, 3, 4, 7}))) == 2);
}

TEST_CASE("unit point gives the toric ideal", "[paramspace]") {
  const auto A = GradingSet::from_sorted_1d({2, 5, 7});
  const Int r = default_radius(primitive_binomials(A));
  const auto f = unit_point(A, r);
  CHECK_FALSE(violated_equation(A, f));
  CHECK(point_to_ideal(A, f).generators == toric_gb(A, TermOrder::lex(3)).generators);
}

TEST_CASE("monomial ideals round trip through their points", "[paramspace][oracle]") {
  const auto A = GradingSet::from_sorted_1d({2, 5, 7});
  const Int r = default_radius(primitive_binomials(A));
  for (const auto& s : enumerate_mono_agas(A)) {
    BinomialIdeal J{A, {}};
    for (const auto& g : s.ideal.generators()) J.generators.push_back(monomial_generator(g));
    const auto f = ideal_to_point(J, r);
    for (const auto& [b, blk] : f.blocks)
      for (const auto& [u, x] : blk) REQUIRE(x == (s.ideal.contains(u) ? 0 : 1));
    const auto back = point_to_ideal(A, f);
    std::vector<ExponentVector> gens;
    for (const auto& g : back.generators) {
      REQUIRE(g.monomial);
      gens.push_back(g.u);
    }
    REQUIRE(MonomialIdeal(A, gens) == s.ideal);
  }
}

TEST_CASE("round trip and twist equivariance on twenty random twists", "[paramspace][oracle]") {
  std::mt19937_64 rng(51);
  const auto A = cli::grading_1347();
  const Int r = 2;
  const auto J = cli::family_23(Rational(-2, 3), 7, 5);
  const auto gb = buchberger(J, TermOrder::lex(4));
  const auto f = ideal_to_point(J, r);
  REQUIRE_FALSE(violated_equation(A, f));
  REQUIRE(point_to_ideal(A, f).generators == gb.generators);
  REQUIRE(ideal_to_point(gb, r) == f);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> lambda, inverse;
    for (int i = 0; i < 4; ++i) {
      lambda.push_back(oracle::random_nonzero(rng, 5));
      inverse.push_back(Rational(1) / lambda.back());
    }
    const auto g = twist(lambda, f);
    const auto moved = buchberger(torus_act(inverse, gb), TermOrder::lex(4));
    INFO("twist " << t);
    REQUIRE(point_to_ideal(A, g).generators == moved.generators);
    REQUIRE(ideal_to_point(moved, r) == g);
  }
}

TEST_CASE("perturbed points violate an equation", "[paramspace]") {
  const auto A = GradingSet::from_sorted_1d({2, 3});
  auto f = ideal_to_point(BinomialIdeal{A, {Binomial{{3, 0}, {0, 2}, 5, false}}}, 2);
  CHECK_FALSE(violated_equation(A, f));
  f.blocks.at(Degree{8}).at(ExponentVector{4, 0}) += 1;
  const auto bad = violated_equation(A, f);
  REQUIRE(bad);
  CHECK_THROWS_AS(point_to_ideal(A, f), InvalidInput);
  f.blocks.erase(Degree{8});
  CHECK_THROWS_AS(point_to_ideal(A, f), InvalidInput);
}

TEST_CASE("ideals that are not A-graded have no point", "[paramspace]") {
  const auto A = GradingSet::from_sorted_1d({2, 3});
  CHECK_THROWS_AS(ideal_to_point(BinomialIdeal{A, {monomial_generator({0, 2}), monomial_generator({3, 0})}}, 1),
                  InvalidInput);
}
