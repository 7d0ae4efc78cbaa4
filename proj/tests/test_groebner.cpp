#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace agalg;

namespace {

std::vector<Rational> random_weight(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> w(0, 1000);
  std::vector<Rational> omega;
  for (std::size_t i = 0; i < n; ++i) omega.emplace_back(w(rng));
  return omega;
}

}  // namespace

TEST_CASE("term orders", "[groebner]") {
  const auto lex = TermOrder::lex(3);
  CHECK(lex.less(ExponentVector{0, 5, 5}, ExponentVector{1, 0, 0}));
  const auto rev = TermOrder::lex(std::vector<std::size_t>{2, 1, 0});
  CHECK(rev.less(ExponentVector{1, 0, 0}, ExponentVector{0, 0, 1}));
  const auto w = TermOrder::weight({1, 2, 3});
  CHECK(w.less(ExponentVector{2, 0, 0}, ExponentVector{0, 0, 1}));
  CHECK(w.less(ExponentVector{0, 1, 0}, ExponentVector{2, 0, 0}));
  CHECK_THROWS_AS(TermOrder::lex(std::vector<std::size_t>{0, 0}), InvalidInput);
}

TEST_CASE("toric bases reduce every fiber to one monomial", "[groebner][oracle]") {
  std::mt19937_64 rng(21);
  for (const auto& e : std::vector<std::vector<Int>>{{1, 3, 4, 7}, {2, 5, 9}, {3, 5, 7, 8}}) {
    const auto A = GradingSet::from_sorted_1d(e);
    for (int t = 0; t < 5; ++t) {
      const auto omega = random_weight(rng, A.n());
      const auto ord = TermOrder::weight(omega);
      const auto gb = toric_gb(A, ord);
      for (const auto& g : gb.generators) {
        REQUIRE_FALSE(g.monomial);
        REQUIRE(g.c == 1);
        REQUIRE(ord.less(g.v, g.u));
        REQUIRE(is_primitive(A, g.u, g.v));
      }
      for (Int b = 0; b <= 50; ++b) {
        const auto F = enumerate_fiber(A, Degree{b});
        if (F.points.empty()) continue;
        const ExponentVector smallest =
            *std::min_element(F.points.begin(), F.points.end(),
                              [&](const auto& x, const auto& y) { return ord.less(x, y); });
        for (const auto& u : F.points) {
          const auto [c, m] = normal_form_monomial(gb, u);
          REQUIRE(c == 1);
          REQUIRE(m == smallest);
        }
      }
    }
  }
}

TEST_CASE("initial ideals take the omega-maximal terms", "[groebner][oracle]") {
  std::mt19937_64 rng(22);
  const auto A = GradingSet::from_sorted_1d({1, 3, 4, 7});
  for (int t = 0; t < 10; ++t) {
    const auto omega = random_weight(rng, A.n());
    const auto init = initial_monomial_ideal(A, omega);
    const auto ord = TermOrder::weight(omega);
    for (Int b = 0; b <= 40; ++b) {
      const auto F = enumerate_fiber(A, Degree{b});
      std::size_t outside = 0;
      for (const auto& u : F.points) {
        bool is_min = true;
        for (const auto& v : F.points)
          if (ord.less(v, u)) is_min = false;
        REQUIRE(init.ideal.contains(u) == !is_min);
        if (!init.ideal.contains(u)) ++outside;
      }
      REQUIRE(outside == 1);
    }
  }
}

TEST_CASE("buchberger on coefficient ideals", "[groebner]") {
  const auto A = GradingSet::from_sorted_1d({1, 3, 4, 7});
  BinomialIdeal J{A, {Binomial{{2, 0, 1, 0}, {0, 2, 0, 0}, 2, false},
                      Binomial{{1, 0, 4, 0}, {0, 1, 0, 2}, 3, false},
                      Binomial{{0, 0, 7, 0}, {0, 0, 0, 4}, 5, false}}};
  const auto gb = buchberger(J, TermOrder::lex(4));
  for (const auto& g : gb.generators) {
    if (g.monomial) continue;
    CHECK(A.degree_of(g.u) == A.degree_of(g.v));
  }
  // A basis is its own basis.
  CHECK(buchberger(gb, TermOrder::lex(4)).generators == gb.generators);

  BinomialIdeal bad{A, {Binomial{{1, 0, 0, 0}, {0, 1, 0, 0}, 1, false}}};
  CHECK_THROWS_AS(bad.check(), InvalidInput);
  CHECK_THROWS_AS(buchberger(bad, TermOrder::lex(4)), InvalidInput);
}

TEST_CASE("torus action commutes with reduced bases", "[groebner]") {
  std::mt19937_64 rng(23);
  const auto A = GradingSet::from_sorted_1d({2, 5, 9});
  const auto gb = toric_gb(A, TermOrder::lex(3));
  for (int t = 0; t < 10; ++t) {
    std::vector<Rational> lambda, inverse;
    for (int i = 0; i < 3; ++i) {
      lambda.push_back(oracle::random_nonzero(rng, 6));
      inverse.push_back(Rational(1) / lambda.back());
    }
    const auto moved = torus_act(lambda, gb);
    CHECK(buchberger(moved, TermOrder::lex(3)).generators == moved.generators);
    CHECK(torus_act(inverse, moved).generators == gb.generators);
  }
}

TEST_CASE("Groebner degrees and edges", "[groebner]") {
  const auto A = GradingSet::from_sorted_1d({15, 20, 23, 24});
  const Binomial g{{2, 3, 0, 2}, {0, 0, 6, 0}, 1, false};
  CHECK_FALSE(in_some_reduced_gb(A, g));
  CHECK_FALSE(is_edge(enumerate_fiber(A, Degree{138}), g.u, g.v));
  CHECK_FALSE(is_groebner_degree(A, Degree{138}));

  // Every degree of a reduced basis element is a Groebner degree.
  std::mt19937_64 rng(24);
  const auto B = GradingSet::from_sorted_1d({1, 3, 4, 7});
  std::set<Degree> seen;
  for (int t = 0; t < 8; ++t)
    for (const auto& h : toric_gb(B, TermOrder::weight(random_weight(rng, 4))).generators) {
      const Degree b = B.degree_of(h.u);
      if (!seen.insert(b).second) continue;
      CHECK(is_groebner_degree(B, b));
      CHECK(in_some_reduced_gb(B, h));
    }
  CHECK_THROWS_AS(in_some_reduced_gb(B, Binomial{{0, 0, 14, 0}, {0, 0, 0, 8}, 1, false}), InvalidInput);
}
