#include <doctest.h>

#include <stdexcept>
#include <thread>
#include <vector>

#include "hlab/hypergeom.hpp"
#include "hlab/legendre.hpp"
#include "hlab/multiplier.hpp"
#include "support.hpp"

using namespace hlab;
using hlab::testing::Gen;

namespace {

// Taylor coefficients in t of (1 - 2xt + t^2)^(-1/2) = sum_k (1/2)_k / k! (2xt - t^2)^k.
std::vector<Poly> generating_function_oracle(std::size_t max_n) {
  std::vector<Poly> out(max_n + 1);
  for (std::size_t k = 0; k <= max_n; ++k) {
    const Rational w = rising_factorial(Rational(1, 2), k) / Rational(factorial(k));
    // (2xt - t^2)^k = sum_i binom(k,i) (2x)^(k-i) (-1)^i t^(k+i)
    for (std::size_t i = 0; i <= k && k + i <= max_n; ++i) {
      Rational coeff = w * Rational(binomial(k, i)) * pow(Rational(2), static_cast<unsigned>(k - i));
      if (i % 2 == 1) coeff = -coeff;
      out[k + i] += Poly::monomial(coeff, k - i);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("first Legendre polynomials") {
  CHECK(legendre(0) == Poly::constant(1));
  CHECK(legendre(1) == Poly::x());
  CHECK(legendre(2) == Poly({Rational(-1, 2), 0, Rational(3, 2)}));
  CHECK(legendre(3) == Poly({0, Rational(-3, 2), 0, Rational(5, 2)}));
}

TEST_CASE("generating function oracle for small n") {
  const auto oracle = generating_function_oracle(10);
  for (std::size_t n = 0; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(legendre(n) == oracle[n]);
  }
}

TEST_CASE("three-term recurrence up to 30") {
  for (std::size_t n = 1; n < 30; ++n) {
    CAPTURE(n);
    const Poly lhs = legendre(n + 1).scaled(Rational(n + 1));
    const Poly rhs = (Poly::x() * legendre(n)).scaled(Rational(2 * n + 1)) - legendre(n - 1).scaled(Rational(n));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Le_n(1) = 1 and parity") {
  for (std::size_t n = 0; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(evaluate(legendre(n), Rational(1)) == Rational(1));
    CHECK(evaluate(legendre(n), Rational(-1)) == Rational(n % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("leading coefficient closed form") {
  for (std::size_t n = 0; n <= 30; ++n) CHECK(legendre(n).leading() == legendre_leading_coefficient(n));
  CHECK(legendre_leading_coefficient(3) == Rational(5, 2));
}

TEST_CASE("value at zero") {
  CHECK(legendre_value_at_zero(1) == Rational(0));
  CHECK(legendre_value_at_zero(2) == Rational(-1, 2));
  CHECK(legendre_value_at_zero(4) == Rational(3, 8));
  for (std::size_t n = 0; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(legendre_value_at_zero(n) == evaluate(legendre(n), Rational(0)));
  }
}

TEST_CASE("even derivatives at zero") {
  CHECK(legendre_deriv_at_zero(2, 0) == Rational(-1, 2));
  CHECK(legendre_deriv_at_zero(2, 1) == Rational(3));
  CHECK(legendre_deriv_at_zero(4, 1) == Rational(-15, 2));
  for (std::size_t n = 0; n <= 20; n += 2) {
    for (std::size_t j = 0; j <= n / 2; ++j) {
      CAPTURE(n);
      CAPTURE(j);
      CHECK(legendre_deriv_at_zero(n, j) == evaluate(derivative(legendre(n), 2 * j), Rational(0)));
    }
  }
  for (std::size_t n = 1; n <= 19; n += 2) {
    for (std::size_t j = 0; 2 * j <= n; ++j) CHECK(evaluate(derivative(legendre(n), 2 * j), Rational(0)).is_zero());
  }
  CHECK_THROWS_AS(legendre_deriv_at_zero(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(legendre_deriv_at_zero(4, 3), std::invalid_argument);
}

TEST_CASE("expansions of x^5 Le_3 and x^5 Le_5") {
  const LegendreExpansion e1 = to_legendre(cubic_test_poly_p1());
  const LegendreExpansion e2 = to_legendre(cubic_test_poly_p2());
  CHECK(e1 == LegendreExpansion({Rational(4, 63), 0, Rational(205, 693), 0, Rational(372, 1001), 0,
                                 Rational(152, 693), 0, Rational(64, 1287)}));
  CHECK(e2 == LegendreExpansion({Rational(8, 693), 0, Rational(1000, 9009), 0, Rational(291, 1001), 0,
                                 Rational(4078, 11781), 0, Rational(4816, 24453), 0, Rational(2016, 46189)}));
  CHECK(e1.size() == 9);
  CHECK(e2.size() == 11);
  CHECK(from_legendre(e1) == Poly({0, 0, 0, 0, 0, 0, Rational(-3, 2), 0, Rational(5, 2)}));
  Rational s1, s2;
  for (const auto& c : e1.coeffs()) s1 += c;
  for (const auto& c : e2.coeffs()) s2 += c;
  CHECK(s1 == Rational(1));
  CHECK(s2 == Rational(1));
}

TEST_CASE("basis elements and the empty expansion") {
  CHECK(to_legendre(legendre(7)) == LegendreExpansion::unit(7));
  for (std::size_t k = 0; k <= 12; ++k) CHECK(from_legendre(LegendreExpansion::unit(k)) == legendre(k));
  CHECK(from_legendre(LegendreExpansion()).is_zero());
  CHECK(to_legendre(Poly()).size() == 0);
}

TEST_CASE("roundtrip, top index and coefficient sum") {
  Gen g(1234);
  for (int i = 0; i < 150; ++i) {
    const Poly p = g.poly(15);
    const LegendreExpansion e = to_legendre(p);
    REQUIRE(from_legendre(e) == p);
    if (!p.is_zero()) REQUIRE(e.size() == *p.degree() + 1);
    Rational sum;
    for (const auto& c : e.coeffs()) sum += c;
    REQUIRE(sum == evaluate(p, Rational(1)));
  }
}

TEST_CASE("concurrent first access matches sequential results") {
  std::vector<std::thread> threads;
  std::vector<std::vector<Poly>> seen(8);
  for (std::size_t t = 0; t < seen.size(); ++t) {
    threads.emplace_back([t, &seen] {
      for (std::size_t n = 60; n > 40; --n) seen[t].push_back(legendre(n + t));
    });
  }
  for (auto& th : threads) th.join();
  for (std::size_t t = 0; t < seen.size(); ++t) {
    for (std::size_t i = 0; i < seen[t].size(); ++i) {
      const std::size_t n = 60 - i + t;
      const Poly rhs = ((Poly::x() * legendre(n - 1)).scaled(Rational(2 * n - 1)) -
                        legendre(n - 2).scaled(Rational(n - 1)))
                           .divided(Rational(n));
      REQUIRE(seen[t][i] == rhs);
    }
  }
}
