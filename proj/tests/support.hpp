#pragma once
// Fixed-seed generators for the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "hlab/poly.hpp"
#include "hlab/rational.hpp"

namespace hlab::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  bool coin() { return integer(0, 1) == 1; }

  /// Numerator in [-bound, bound], denominator in [1, max_den].
  Rational rational(long bound = 20, long max_den = 9) {
    return Rational(integer(-bound, bound), integer(1, max_den));
  }

  Rational nonzero_rational(long bound = 20, long max_den = 9) {
    for (;;) {
      Rational r = rational(bound, max_den);
      if (!r.is_zero()) return r;
    }
  }

  Poly poly(std::size_t max_degree) {
    const std::size_t deg = static_cast<std::size_t>(integer(0, static_cast<long>(max_degree)));
    std::vector<Rational> c;
    for (std::size_t i = 0; i <= deg; ++i) c.push_back(rational());
    return Poly(std::move(c));
  }

  ParamAffine affine() { return ParamAffine(rational(), rational(), rational(), rational()); }

  ParamPoly param_poly(std::size_t max_degree) {
    const std::size_t deg = static_cast<std::size_t>(integer(0, static_cast<long>(max_degree)));
    std::vector<ParamAffine> c;
    for (std::size_t i = 0; i <= deg; ++i) c.push_back(affine());
    return ParamPoly(std::move(c));
  }

 private:
  std::mt19937_64 rng_;
};

inline Poly linear_factor(const Rational& root) { return Poly({-root, Rational(1)}); }

inline Poly product_of_roots(const std::vector<Rational>& roots, const Rational& lead = Rational(1)) {
  Poly p = Poly::constant(lead);
  for (const auto& r : roots) p = p * linear_factor(r);
  return p;
}

inline bool is_canonical(const Rational& r) { return r.den() >= 1 && gcd(r.num(), r.den()) == 1; }

}  // namespace hlab::testing
