#include <doctest.h>

#include <stdexcept>

#include "hlab/diagonal_operator.hpp"
#include "hlab/hypergeom.hpp"
#include "hlab/legendre.hpp"
#include "hlab/poly_text.hpp"
#include "support.hpp"

using namespace hlab;

namespace {

const ParamAffine c_slot = ParamAffine::param(Param::c);

SequenceSpec constant_one() { return SequenceSpec::interpolated(ParamPoly::constant(ParamAffine(1)), "1"); }

void check_diagonal(const DiagonalOperator& op) {
  for (std::size_t n = 0; n <= op.order(); ++n) {
    CAPTURE(n);
    const ParamPoly lhs = op.apply(legendre(n));
    const ParamPoly rhs = to_param(legendre(n)).scaled(op.spec().gamma(n));
    CHECK(lhs == rhs);
  }
}

}  // namespace

TEST_CASE("linear family, first four coefficients") {
  const auto op = operator_coefficients(SequenceSpec::linear(), 3);
  CHECK(op.coefficient(0) == ParamPoly::constant(c_slot));
  CHECK(op.coefficient(1) == to_param(Poly::x()));
  CHECK(op.coefficient(2) == to_param(Poly::constant(Rational(-1, 3))));
  CHECK(op.coefficient(3) == to_param(Poly::monomial(Rational(2, 15), 1)));
}

TEST_CASE("quadratic family display") {
  const auto op = operator_coefficients(SequenceSpec::quadratic(), 4);
  CHECK(op.coefficient(2) == parse_param_poly("(-1/3)*(2+a-3*x^2)"));
  CHECK(op.coefficient(4) == parse_param_poly("(-1/105)*(a-1)*(1+4*x^2)"));
  CHECK_FALSE(check_monotone(op).monotone);
}

TEST_CASE("constant sequence is the identity") {
  const auto op = operator_coefficients(constant_one(), 8);
  CHECK(op.coefficient(0) == ParamPoly::constant(ParamAffine(1)));
  for (std::size_t k = 1; k <= 8; ++k) CHECK(op.coefficient(k).is_zero());
}

TEST_CASE("closed form for T_k(0)") {
  CHECK(tk_zero_closed(3, 5) == Rational(0));
  CHECK(tk_zero_closed(2, 5) == Rational(-1, 3));
  CHECK(tk_zero_closed(4, 5) == Rational(-1, 105));
  CHECK(tk_zero_closed(0, Rational(7, 2)) == Rational(7, 2));
  const auto op = operator_coefficients(SequenceSpec::linear(), 24);
  for (std::size_t k = 0; k <= 24; ++k) {
    CAPTURE(k);
    const ParamAffine at_zero = op.coefficient(k).coeff(0);
    CHECK(at_zero == (k == 0 ? c_slot : ParamAffine(tk_zero_closed(k, 0))));
    CHECK(at_zero.eval(0, 0, Rational(3, 4)) == tk_zero_closed(k, Rational(3, 4)));
  }
}

TEST_CASE("monotonicity") {
  const auto lin = check_monotone(operator_coefficients(SequenceSpec::linear(), 4));
  CHECK_FALSE(lin.monotone);
  CHECK(lin.first_violation == 2u);

  const auto alpha_one = SequenceSpec::quadratic().specialize(1, Rational(1, 3), 0);
  const auto quad = check_monotone(operator_coefficients(alpha_one, 4));
  CHECK_FALSE(quad.monotone);
  CHECK(quad.first_violation == 3u);

  const auto trivial = check_monotone(operator_coefficients(constant_one(), 0));
  CHECK(trivial.monotone);
  CHECK_FALSE(trivial.first_violation.has_value());
}

TEST_CASE("diagonality of the truncated operator") {
  SUBCASE("k + 1 up to order 10") {
    const auto spec = SequenceSpec::linear().specialize(0, 0, 1);
    const auto op = operator_coefficients(spec, 10);
    for (std::size_t n = 0; n <= 10; ++n) {
      CHECK(eval_params(op.apply(legendre(n)), 0, 0, 0) == legendre(n).scaled(Rational(n + 1)));
    }
  }
  SUBCASE("symbolic families") {
    check_diagonal(operator_coefficients(SequenceSpec::linear(), 12));
    check_diagonal(operator_coefficients(SequenceSpec::quadratic(), 12));
    check_diagonal(operator_coefficients(SequenceSpec::cubic(), 12));
  }
  SUBCASE("explicit list") {
    const auto spec = SequenceSpec::explicit_list({ParamAffine(2), ParamAffine(0), ParamAffine(Rational(5, 3))}, "2,0,5/3");
    check_diagonal(operator_coefficients(spec, 6));
  }
}

TEST_CASE("quadratic family at alpha = 1 stops after T_2") {
  const auto spec = SequenceSpec::quadratic().specialize(1, Rational(-2, 7), 0);
  const auto op = operator_coefficients(spec, 8);
  CHECK_FALSE(op.coefficient(2).is_zero());
  for (std::size_t k = 3; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(op.coefficient(k).is_zero());
  }
}

TEST_CASE("apply_to_monomial") {
  const auto lin = SequenceSpec::linear();
  CHECK(apply_to_monomial(lin, 0) == ParamPoly::constant(c_slot));
  CHECK(apply_to_monomial(lin, 1) == ParamPoly({ParamAffine(), ParamAffine(1) + c_slot}));
  CHECK(apply_to_monomial(lin, 2).coeff(0) == ParamAffine(Rational(-2, 3)));
  for (std::size_t n = 1; n <= 12; ++n) {
    CHECK(apply_to_monomial(lin, n).coeff(0) == ParamAffine(Rational(factorial(n)) * tk_zero_closed(n, 0)));
  }
}

TEST_CASE("operator applied to monomials agrees with the Legendre path") {
  const auto op = operator_coefficients(SequenceSpec::cubic(), 10);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(op.apply(Poly::monomial(1, n)) == apply_to_monomial(SequenceSpec::cubic(), n));
}

TEST_CASE("symbol constant series") {
  const auto lin = SequenceSpec::linear().specialize(0, 0, 2);
  const ParamPoly f = symbol_constant_series(lin, 16);
  CHECK(f.coeff(2) == ParamAffine(Rational(-1, 3)));
  CHECK(f.coeff(3).is_zero());
  CHECK(f.coeff(4) == ParamAffine(Rational(-1, 105)));
  for (std::size_t n = 0; n <= 16; ++n) {
    CAPTURE(n);
    const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
    CHECK(f.coeff(n) == ParamAffine(sign * tk_zero_closed(n, 2)));
  }
  const ParamPoly symbolic = symbol_constant_series(SequenceSpec::linear(), 6);
  CHECK(symbolic.coeff(0) == c_slot);
}

TEST_CASE("f-series data") {
  const auto d = f_series_data(8);
  CHECK(d[0] == Rational(1, 4));
  CHECK(d[1] == Rational(1, 70));
  CHECK(d[1] * d[1] - d[2] * d[0] == Rational(-1, 80850));
  CHECK_THROWS_AS(f_series_data(0), std::invalid_argument);
  const ParamPoly f = symbol_constant_series(SequenceSpec::linear().specialize(0, 0, 0), 16);
  for (std::size_t k = 1; k <= 8; ++k) {
    CAPTURE(k);
    const Rational via_d = -Rational(4, 3) * d[k - 1] / Rational(factorial(k));
    const Rational closed = -Rational(catalan(k - 1)) /
                            (Rational(3) * pow(Rational(2), static_cast<unsigned>(2 * k - 2)) *
                             rising_factorial(Rational(5, 2), 2 * k - 2));
    CHECK(via_d == closed);
    CHECK(f.coeff(2 * k) == ParamAffine(closed));
  }
}
