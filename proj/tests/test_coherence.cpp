#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace agalg;

TEST_CASE("coherent members carry a witnessing weight", "[coherence][oracle]") {
  for (const auto& e : std::vector<std::vector<Int>>{{1, 3, 4, 7}, {2, 5, 7}, {1, 2, 3, 4}}) {
    const auto A = GradingSet::from_sorted_1d(e);
    const auto P = primitive_binomials(A);
    std::size_t incoherent = 0;
    for (const auto& s : enumerate_mono_agas(P)) {
      const auto v = coherence_test(s, P);
      INFO(A.bracket() << " " << s.ideal.str());
      if (v.coherent) {
        REQUIRE(verify_coherent_witness(s, v, &P));
      } else {
        REQUIRE(verify_incoherence(v));
        ++incoherent;
      }
    }
    CHECK(incoherent == (e == std::vector<Int>{1, 3, 4, 7} ? 2u : 0u));
  }
}

TEST_CASE("incoherence certificate of the quartic example", "[coherence]") {
  const auto A = GradingSet::from_sorted_1d({1, 3, 4, 7});
  const auto P = primitive_binomials(A);
  const MonomialIdeal I(A, {{3, 0, 0, 0}, {1, 1, 0, 0}, {0, 2, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 1},
                            {2, 0, 2, 0}, {1, 0, 4, 0}, {0, 1, 0, 3}, {0, 0, 0, 4}});
  const auto sel = std::get<StandardSelection>(verify_selection(P, selection_from_ideal(I, census_bound(P))));
  const auto v = coherence_test(sel, P);
  REQUIRE_FALSE(v.coherent);
  REQUIRE(v.rows.size() == 3);
  CHECK(v.rows[0].degree == Degree{6});
  CHECK(v.rows[1].degree == Degree{17});
  CHECK(v.rows[2].degree == Degree{28});
  CHECK(v.multipliers == std::vector<mpz_class>{1, 2, 1});
  CHECK(verify_incoherence(v));

  // Tampering with a multiplier breaks the identity.
  auto broken = v;
  broken.multipliers[1] = 1;
  CHECK_FALSE(verify_incoherence(broken));
}

TEST_CASE("classification of single quadruples", "[coherence]") {
  auto check = [](std::vector<Int> e, std::size_t g, std::size_t c, std::size_t i) {
    const auto r = classify(GradingSet::from_sorted_1d(e));
    CHECK(r.graver == g);
    CHECK(r.census == c);
    CHECK(r.incoherent == i);
  };
  check({1, 3, 4, 7}, 27, 53, 2);
  check({1, 2, 3, 4}, 15, 20, 0);
  check({6, 7, 8, 9}, 37, 94, 6);
}

TEST_CASE("table rows are identical across thread counts", "[coherence]") {
  const auto one = table1(1, 6);
  const auto two = table1(3, 6);
  REQUIRE(one.size() == 15);
  REQUIRE(two.size() == one.size());
  for (std::size_t k = 0; k < one.size(); ++k) {
    CHECK(one[k].entries == two[k].entries);
    CHECK(one[k].result.graver == two[k].result.graver);
    CHECK(one[k].result.census == two[k].result.census);
    CHECK(one[k].result.incoherent == two[k].result.incoherent);
  }
}

TEST_CASE("triples are coherent", "[coherence]") {
  for (Int a = 1; a <= 7; ++a)
    for (Int b = a + 1; b <= 7; ++b)
      for (Int c = b + 1; c <= 7; ++c) {
        if (std::gcd(a, std::gcd(b, c)) != 1) continue;
        INFO(a << " " << b << " " << c);
        CHECK(classify(GradingSet::from_sorted_1d({a, b, c})).incoherent == 0);
      }
}
