#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace agalg;

namespace {

std::set<std::vector<ExponentVector>> generator_sets(const std::vector<StandardSelection>& census) {
  std::set<std::vector<ExponentVector>> out;
  for (const auto& s : census) out.insert(s.ideal.generators());
  return out;
}

}  // namespace

TEST_CASE("census sizes", "[census]") {
  CHECK(enumerate_mono_agas(GradingSet::from_sorted_1d({1, 3, 4, 7})).size() == 53);
  CHECK(enumerate_mono_agas(GradingSet::from_sorted_1d({1, 2, 3, 4})).size() == 20);
  // A single generator: only x1^3 - x2^2 lives in the toric ideal of {2,3}.
  CHECK(enumerate_mono_agas(GradingSet::from_sorted_1d({2, 3})).size() == 2);
}

TEST_CASE("census is sound", "[census][oracle]") {
  for (const auto& e : std::vector<std::vector<Int>>{{1, 3, 4, 7}, {2, 5, 7}, {3, 4, 5}}) {
    const auto A = GradingSet::from_sorted_1d(e);
    const auto census = enumerate_mono_agas(A);
    REQUIRE(generator_sets(census).size() == census.size());
    const auto member = oracle::fiber_counts(A, Degree{60});
    for (const auto& s : census) {
      REQUIRE(s.certified);
      for (Int b = 0; b <= 60; ++b) {
        INFO(A.bracket() << " " << s.ideal.str() << " degree " << b);
        REQUIRE(oracle::standard_count(s.ideal, Degree{b}) == (member[b] > 0 ? 1u : 0u));
      }
    }
  }
}

TEST_CASE("census contains every initial ideal", "[census][oracle]") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> w(0, 100);
  for (const auto& e : std::vector<std::vector<Int>>{{1, 3, 4, 7}, {2, 5, 7}, {1, 7, 8, 9}}) {
    const auto A = GradingSet::from_sorted_1d(e);
    const auto P = primitive_binomials(A);
    const auto all = generator_sets(enumerate_mono_agas(P));
    for (int t = 0; t < 50; ++t) {
      std::vector<Rational> omega;
      for (std::size_t i = 0; i < A.n(); ++i) omega.emplace_back(w(rng));
      std::vector<std::size_t> perm(A.n());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto init = initial_monomial_ideal(A, omega, perm, &P);
      INFO(A.bracket() << " " << init.ideal.str());
      REQUIRE(all.count(init.ideal.generators()) == 1);
    }
  }
}

TEST_CASE("selections from ideals", "[census]") {
  const auto A = GradingSet::from_sorted_1d({1, 3, 4, 7});
  const auto P = primitive_binomials(A);
  const MonomialIdeal I(A, {{3, 0, 0, 0}, {1, 1, 0, 0}, {0, 2, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 1},
                            {2, 0, 2, 0}, {1, 0, 4, 0}, {0, 1, 0, 3}, {0, 0, 0, 4}});
  auto checked = verify_selection(P, selection_from_ideal(I, census_bound(P)));
  REQUIRE(std::holds_alternative<StandardSelection>(checked));
  const auto& sel = std::get<StandardSelection>(checked);
  CHECK(sel.ideal == I);
  CHECK(*sel.standard_at(Degree{17}) == ExponentVector{0, 1, 0, 2});

  auto choice = selection_from_ideal(I, census_bound(P));
  choice.erase(Degree{9});
  checked = verify_selection(P, choice);
  REQUIRE(std::holds_alternative<Rejection>(checked));
  CHECK(std::get<Rejection>(checked).degree == Degree{9});

  choice = selection_from_ideal(I, census_bound(P));
  choice[Degree{2}] = ExponentVector{0, 1, 0, 0};
  CHECK(std::holds_alternative<Rejection>(verify_selection(P, choice)));
}

TEST_CASE("standard monomials of a non-graded ideal are refused", "[census]") {
  const auto A = GradingSet::from_sorted_1d({2, 3});
  CHECK_THROWS_AS(standard_monomials(MonomialIdeal(A, {{0, 2}, {2, 1}, {3, 0}}), Degree{10}), InvalidInput);
  const auto table = standard_monomials(MonomialIdeal(A, {{3, 0}}), Degree{6});
  REQUIRE(table.size() == 6);  // degrees 0, 2, 3, 4, 5, 6
  CHECK(table.back().second == ExponentVector{0, 2});
}
