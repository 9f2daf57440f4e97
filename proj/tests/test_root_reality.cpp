#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hlab/diagonal_operator.hpp"
#include "hlab/legendre.hpp"
#include "hlab/root_reality.hpp"
#include "support.hpp"

using namespace hlab;
using hlab::testing::Gen;
using hlab::testing::product_of_roots;

namespace {

struct Constructed {
  Poly poly;
  std::size_t distinct_real = 0;
  bool has_complex = false;
};

// Up to six rational linear factors (repeats allowed), optionally times an
// irreducible quadratic (x - u)^2 + v with v > 0.
Constructed construct(Gen& g) {
  std::vector<Rational> roots;
  const long count = g.integer(1, 6);
  for (long i = 0; i < count; ++i) {
    if (!roots.empty() && g.integer(0, 4) == 0) {
      roots.push_back(roots[static_cast<std::size_t>(g.integer(0, static_cast<long>(roots.size()) - 1))]);
    } else {
      roots.push_back(g.rational(10, 6));
    }
  }
  Constructed out;
  out.poly = product_of_roots(roots, g.nonzero_rational(5, 4));
  std::vector<Rational> distinct = roots;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  out.distinct_real = distinct.size();
  if (g.coin()) {
    const Rational u = g.rational(5, 3);
    Rational v = g.rational(5, 7).abs();
    if (v.is_zero()) v = Rational(1, 5);
    out.poly = out.poly * Poly({u * u + v, -Rational(2) * u, 1});
    out.has_complex = true;
  }
  return out;
}

// Real-rooted with p(0) != 0; symmetric root pairs produce interior zero coefficients.
Poly real_rooted_nonvanishing_at_zero(Gen& g) {
  std::vector<Rational> roots;
  const long count = g.integer(1, 7);
  for (long i = 0; i < count; ++i) {
    const Rational r = g.nonzero_rational(9, 5);
    roots.push_back(r);
    if (g.coin()) roots.push_back(-r);
  }
  return product_of_roots(roots, g.nonzero_rational(4, 3));
}

std::vector<Rational> sample_grid() {
  std::vector<Rational> xs;
  for (long i = -12; i <= 12; ++i) xs.emplace_back(i, 4);
  return xs;
}

}  // namespace

TEST_CASE("sturm chains") {
  const auto chain = sturm_sequence(Poly({-1, 0, 1}));
  REQUIRE(chain.size() == 3);
  CHECK(chain[0] == Poly({-1, 0, 1}));
  CHECK(chain[1] == Poly({0, 2}));
  CHECK(chain[2] == Poly::constant(1));
  CHECK(sturm_sequence(Poly({3, 2})).size() == 2);
  CHECK(sturm_sequence(Poly::constant(4)).size() == 1);
  CHECK_THROWS_AS(sturm_sequence(Poly()), std::invalid_argument);
}

TEST_CASE("root counts") {
  const auto none = count_real_roots(Poly({1, 0, 1}));
  CHECK(none.distinct_real_roots == 0);
  CHECK_FALSE(none.hyperbolic);
  const auto three = count_real_roots(Poly({0, -1, 0, 1}));
  CHECK(three.distinct_real_roots == 3);
  CHECK(three.hyperbolic);
  const auto le6 = count_real_roots(legendre(6));
  CHECK(le6.distinct_real_roots == 6);
  CHECK(le6.hyperbolic);
  const auto repeated = count_real_roots(Poly({1, 1}) * Poly({1, 1}) * Poly({1, 1}));
  CHECK(repeated.distinct_real_roots == 1);
  CHECK(repeated.degree_squarefree == 1);
  CHECK(repeated.hyperbolic);
  CHECK(count_real_roots(Poly::constant(5)).hyperbolic);
  CHECK_THROWS_AS(count_real_roots(Poly()), std::invalid_argument);
}

TEST_CASE("Legendre polynomials are hyperbolic with simple zeros") {
  for (std::size_t n = 1; n <= 25; ++n) {
    const auto r = count_real_roots(legendre(n));
    CHECK(r.distinct_real_roots == n);
    CHECK(r.hyperbolic);
  }
}

TEST_CASE("Sturm count matches constructed roots") {
  Gen g(20240601);
  for (int i = 0; i < 200; ++i) {
    const Constructed c = construct(g);
    const auto r = count_real_roots(c.poly);
    CAPTURE(i);
    REQUIRE(r.distinct_real_roots == c.distinct_real);
    REQUIRE(r.hyperbolic == !c.has_complex);
    REQUIRE(r.distinct_real_roots <= r.degree_squarefree);
    REQUIRE(r.hyperbolic == (r.distinct_real_roots == r.degree_squarefree));
  }
}

TEST_CASE("count is invariant under scaling") {
  Gen g(77);
  for (int i = 0; i < 100; ++i) {
    const Constructed c = construct(g);
    const Rational lambda = g.nonzero_rational(30, 11);
    const auto a = count_real_roots(c.poly);
    const auto b = count_real_roots(c.poly.scaled(lambda));
    REQUIRE(a.distinct_real_roots == b.distinct_real_roots);
    REQUIRE(a.hyperbolic == b.hyperbolic);
  }
}

TEST_CASE("derivatives of hyperbolic polynomials are hyperbolic") {
  Gen g(303);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const Constructed c = construct(g);
    if (c.has_complex || *c.poly.degree() < 2) continue;
    Poly p = c.poly;
    while (*p.degree() >= 1) {
      p = derivative(p);
      REQUIRE(count_real_roots(p).hyperbolic);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("gap condition") {
  const auto plus = gap_condition(Poly({1, 0, 1}));
  CHECK_FALSE(plus.satisfied);
  CHECK(plus.witness == 1u);
  const auto minus = gap_condition(Poly({1, 0, -1}));
  CHECK(minus.satisfied);
  CHECK_FALSE(minus.witness.has_value());
  CHECK(gap_condition(Poly({1, 3, 3, 1})).satisfied);
  CHECK_THROWS_AS(gap_condition(Poly({0, 1, 1})), std::invalid_argument);
}

TEST_CASE("real-rooted polynomials satisfy the gap condition") {
  Gen g(5150);
  int with_gaps = 0;
  for (int i = 0; i < 200; ++i) {
    const Poly p = real_rooted_nonvanishing_at_zero(g);
    REQUIRE(count_real_roots(p).hyperbolic);
    const auto gap = gap_condition(p);
    CAPTURE(i);
    REQUIRE(gap.satisfied);
    const auto& cs = p.coeffs();
    if (std::any_of(cs.begin() + 1, cs.end() - 1, [](const Rational& x) { return x.is_zero(); })) ++with_gaps;
  }
  CHECK(with_gaps > 20);
}

TEST_CASE("Laguerre expression") {
  const Poly p({2, -1, 3});
  CHECK(laguerre_expression(p, Rational(5, 3), 0) == pow(evaluate(p, Rational(5, 3)), 2));
  CHECK(laguerre_expression(Poly::monomial(1, 2), Rational(1), 1) == Rational(2));
  const auto d = f_series_data(3);
  const Poly truncated = Poly::constant(1) - Poly({0, d[0], d[1] / Rational(2), d[2] / Rational(6)}).scaled(Rational(4, 3));
  CHECK(laguerre_expression(derivative(truncated), Rational(0), 1) == Rational(16, 9) * Rational(-1, 80850));
}

TEST_CASE("Laguerre expressions are non-negative for hyperbolic polynomials") {
  Gen g(999);
  const auto grid = sample_grid();
  REQUIRE(grid.size() == 25);
  for (int i = 0; i < 60; ++i) {
    const Constructed c = construct(g);
    if (c.has_complex) continue;
    for (std::size_t n = 0; n <= 2; ++n) {
      for (const auto& x : grid) REQUIRE(laguerre_expression(c.poly, x, n).sign() >= 0);
    }
  }
  // x^2 + 1 fails at the origin for n = 1: (2x)^2 - 2(x^2 + 1) = -2.
  CHECK(laguerre_expression(Poly({1, 0, 1}), Rational(0), 1) == Rational(-2));
}

TEST_CASE("L-P+ membership") {
  CHECK(lp_plus_check(Poly({1, 4, 6, 4, 1})));
  CHECK(lp_plus_check(Poly({1, 4, 3})));
  CHECK_FALSE(lp_plus_check(Poly({1, 0, 1})));
  CHECK_FALSE(lp_plus_check(Poly({-1, 0, 1})));
  CHECK(lp_plus_check(Poly()));
}
