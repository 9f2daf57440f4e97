#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hlab/legendre.hpp"
#include "hlab/poly.hpp"
#include "hlab/root_reality.hpp"
#include "hlab/sequence.hpp"

namespace hlab {

struct PolyaSchurResult {
  bool passed = true;
  std::optional<std::size_t> first_failure;
};

/// Checks that sum_k binom(n,k) gamma_k x^k is in L-P+ for every n <= bound.
/// A necessary condition only. The sequence must be numeric with
/// gamma_k >= 0 for k <= bound, otherwise std::invalid_argument.
PolyaSchurResult polya_schur_test(const SequenceSpec& spec, std::size_t bound);

struct CubicCmsResult {
  bool admissible = false;  // a >= -3, a + b >= -1, c >= 0
  Poly exponential_factor;  // x^3 + (a+3) x^2 + (a+b+1) x + c
};

/// For gamma_k = k^3 + a k^2 + b k + c, T[e^x] = e^x p(x); the coefficients of
/// p must be non-negative for a classical multiplier sequence.
CubicCmsResult cubic_cms_necessary(const Rational& a, const Rational& b, const Rational& c);

/// x^5 Le_3 and x^5 Le_5, the two test polynomials of the cubic argument.
Poly cubic_test_poly_p1();
Poly cubic_test_poly_p2();

/// Reference Legendre coefficients of the two test polynomials.
LegendreExpansion known_p1_expansion();
LegendreExpansion known_p2_expansion();

inline constexpr long kP1Scale = 18018;
inline constexpr long kP2Scale = 23279256;

struct CubicCertificate {
  LegendreExpansion p1_expansion;
  LegendreExpansion p2_expansion;
  ParamPoly p1_image;  // 18018 * T_{a,b,c}[p1]
  ParamPoly p2_image;  // 23279256 * T_{a,b,c}[p2]
  std::array<ParamAffine, 5> q_forms;  // q_0, q_2, ..., q_8
  std::array<ParamAffine, 6> w_forms;  // w_0, w_2, ..., w_10
  Rational dagger_bound;   // q_0 >= 0  <=>  a - b >= dagger_bound
  Rational ddagger_bound;  // w_0 <= 0  <=>  a - b <= ddagger_bound
  bool infeasible = false;  // dagger_bound > ddagger_bound
};

/// Builds the symbolic images of both test polynomials under
/// {k^3 + a k^2 + b k + c} without comparing against reference values.
CubicCertificate compute_cubic_forms();

/// Every disagreement between a computed certificate and the reference
/// forms, as human-readable lines. Empty means the certificate reproduces them.
std::vector<std::string> certificate_mismatches(const CubicCertificate& cert);

/// compute_cubic_forms() checked against the reference forms; throws
/// CertificateError on the first mismatch.
CubicCertificate cubic_certificate();

enum class TestPolynomial { p1, p2 };
enum class WitnessPath { direct, reversed_and_differentiated };

const char* to_string(TestPolynomial t);
const char* to_string(WitnessPath p);

struct CounterexampleWitness {
  Rational a, b, c;
  TestPolynomial test_poly = TestPolynomial::p1;
  WitnessPath path = WitnessPath::direct;
  Poly image;  // the polynomial whose zeros were counted
  RootCountReport report;
};

/// Follows the case split of the cubic argument at a numeric triple: the p1
/// image when q_2 vanishes or q_0 < 0, the p2 image when w_2 vanishes or
/// w_0 > 0. A vanishing q_2 (w_2) routes through reverse-then-D^4 first.
/// Throws CertificateError if no branch yields non-real zeros.
CounterexampleWitness cubic_counterexample(const Rational& a, const Rational& b, const Rational& c);

struct LinearCertificate {
  Rational c;
  std::array<Rational, 3> d;  // d_1, d_2, d_3
  Rational discriminant;      // d_2^2 - d_3 d_1
  Poly truncated;             // c - 4/3 (d_1 x + d_2 x^2/2 + d_3 x^3/6)
  Rational laguerre_l1;       // L_1(0, truncated')
  bool violated = false;      // laguerre_l1 < 0
};

/// The Laguerre-inequality obstruction for {k + c}. Throws CertificateError
/// if the discriminant is not -1/80850 or L_1 != 16/9 * discriminant.
LinearCertificate linear_nonms_certificate(const Rational& c);

}  // namespace hlab
