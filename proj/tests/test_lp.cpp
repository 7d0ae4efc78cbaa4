#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace agalg;

namespace {

LinearConstraint ge(std::vector<Rational> a, Rational rhs) {
  return LinearConstraint{std::move(a), Relation::GreaterEqual, std::move(rhs)};
}
LinearConstraint eq(std::vector<Rational> a, Rational rhs) {
  return LinearConstraint{std::move(a), Relation::Equal, std::move(rhs)};
}

}  // namespace

TEST_CASE("small feasible and infeasible systems", "[lp]") {
  // x >= 1, y >= 1, x + y <= 1 has no solution.
  std::vector<LinearConstraint> cs{ge({1, 0}, 1), ge({0, 1}, 1), ge({-1, -1}, -1)};
  auto out = lp_feasible(cs, 2);
  REQUIRE_FALSE(out.feasible());
  CHECK(verify_certificate(cs, *out.certificate));
  const auto y = to_primitive_integers(out.certificate->multipliers);
  CHECK(y == std::vector<mpz_class>{1, 1, 1});

  cs.back() = ge({-1, -1}, -2);
  out = lp_feasible(cs, 2);
  REQUIRE(out.feasible());
  CHECK(verify_outcome(cs, out));

  // 2x = 1 forces a non-integer point.
  std::vector<LinearConstraint> half{eq({2}, 1)};
  out = lp_feasible(half, 1);
  REQUIRE(out.feasible());
  CHECK((*out.point)[0] == Rational(1, 2));

  CHECK(lp_feasible(std::vector<LinearConstraint>{}, 3).feasible());
  std::vector<LinearConstraint> bad{ge({1, 2}, 0)};
  CHECK_THROWS_AS(lp_feasible(bad, 3), DimensionMismatch);
}

TEST_CASE("strict inequality systems through the unit right-hand side", "[lp]") {
  // w.(v - u) >= 1 rows of the incoherent ideal over {1,3,4,7}.
  std::vector<LinearConstraint> cs{ge({-2, 2, -1, 0}, 1), ge({1, -1, 4, -2}, 1), ge({0, 0, -7, 4}, 1)};
  auto out = lp_feasible(cs, 4);
  REQUIRE_FALSE(out.feasible());
  CHECK(to_primitive_integers(out.certificate->multipliers) == std::vector<mpz_class>{1, 2, 1});
}

TEST_CASE("random systems verify exactly", "[lp][oracle]") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> dim(1, 4), rows(1, 8), entry(-5, 5), kind(0, 4);
  std::size_t feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    const int m = rows(rng);
    std::vector<LinearConstraint> cs;
    for (int k = 0; k < m; ++k) {
      std::vector<Rational> a(n);
      for (auto& x : a) x = entry(rng);
      cs.push_back(kind(rng) == 0 ? eq(a, entry(rng)) : ge(a, entry(rng)));
    }
    const auto out = lp_feasible(cs, n);
    INFO("trial " << trial);
    REQUIRE(verify_outcome(cs, out));
    REQUIRE(out.feasible() != out.certificate.has_value());
    if (out.feasible()) {
      ++feasible;
      for (const auto& c : cs) REQUIRE(satisfies(c, *out.point));
    } else {
      ++infeasible;
      REQUIRE(verify_certificate(cs, *out.certificate));
    }
  }
  CHECK(feasible > 100);
  CHECK(infeasible > 100);
}

TEST_CASE("planted solutions are always found", "[lp][oracle]") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> entry(-6, 6), slack(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3;
    std::vector<Rational> x0(n);
    for (auto& x : x0) x = oracle::random_rational(rng, 5);
    std::vector<LinearConstraint> cs;
    for (int k = 0; k < 6; ++k) {
      std::vector<Rational> a(n);
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = entry(rng);
        s += a[i] * x0[i];
      }
      cs.push_back(k == 0 ? eq(a, s) : ge(a, s - slack(rng)));
    }
    const auto out = lp_feasible(cs, n);
    REQUIRE(out.feasible());
    REQUIRE(verify_outcome(cs, out));
  }
}

TEST_CASE("vertex and edge tests on fibers", "[lp]") {
  const auto A = GradingSet::from_sorted_1d({3, 4, 5, 13, 14});
  const auto F = enumerate_fiber(A, Degree{15});
  REQUIRE(F.points.size() == 4);
  CHECK_FALSE(is_vertex(F, ExponentVector{2, 1, 1, 0, 0}));
  CHECK(is_vertex(F, ExponentVector{5, 0, 0, 0, 0}));
  CHECK(is_vertex(F, ExponentVector{0, 0, 3, 0, 0}));
  CHECK(is_vertex(F, ExponentVector{0, 0, 0, 0, 0} + ExponentVector{1, 3, 0, 0, 0}));

  // Points (4,0), (2,1), (0,2) are collinear: the segment holds a third point
  // and its halves are not faces.
  const auto G = enumerate_fiber(GradingSet::from_sorted_1d({1, 2}), Degree{4});
  CHECK_FALSE(is_edge(G, ExponentVector{4, 0}, ExponentVector{0, 2}));
  CHECK_FALSE(is_edge(G, ExponentVector{4, 0}, ExponentVector{2, 1}));

  const auto T = enumerate_fiber(GradingSet::from_sorted_1d({1, 2, 3}), Degree{3});
  REQUIRE(T.points.size() == 3);
  CHECK(is_edge(T, ExponentVector{3, 0, 0}, ExponentVector{0, 0, 1}));
  CHECK(is_edge(T, ExponentVector{1, 1, 0}, ExponentVector{0, 0, 1}));
}

TEST_CASE("relative interior of cones", "[lp]") {
  const std::vector<Degree> gens{{1, 0}, {0, 1}};
  CHECK(in_relative_interior(gens, Degree{1, 1}));
  CHECK_FALSE(in_relative_interior(gens, Degree{1, 0}));
  CHECK(in_relative_interior({Degree{1, 0}}, Degree{3, 0}));
  CHECK_FALSE(in_relative_interior({Degree{1, 0}}, Degree{3, 1}));
}
