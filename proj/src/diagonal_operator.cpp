#include "hlab/diagonal_operator.hpp"

#include <stdexcept>

#include "hlab/hypergeom.hpp"
#include "hlab/legendre.hpp"

namespace hlab {

ParamPoly DiagonalOperator::apply(const Poly& p) const {
  ParamPoly out;
  for (std::size_t k = 0; k < tks_.size(); ++k) {
    Poly dk = derivative(p, k);
    if (dk.is_zero()) break;
    out += tks_[k] * dk;
  }
  return out;
}

DiagonalOperator operator_coefficients(const SequenceSpec& spec, std::size_t order) {
  std::vector<ParamPoly> tks;
  tks.reserve(order + 1);
  tks.push_back(ParamPoly::constant(spec.gamma(0)));
  for (std::size_t k = 1; k <= order; ++k) {
    const Poly& le = legendre(k);
    ParamPoly acc = to_param(le).scaled(spec.gamma(k));
    for (std::size_t j = 0; j < k; ++j) acc -= tks[j] * derivative(le, j);
    // D^k Le_k is the constant k! * lead(Le_k) = 2^k (1/2)_k.
    const Rational norm = pow(Rational(2), static_cast<unsigned>(k)) * rising_factorial(Rational(1, 2), k);
    tks.push_back(acc.divided(norm));
  }
  return DiagonalOperator(spec, std::move(tks));
}

Rational tk_zero_closed(std::size_t k, const Rational& c) {
  if (k == 0) return c;
  if (k % 2 == 1) return Rational(0);
  const std::size_t n = k / 2;
  const Rational denom = Rational(3) * pow(Rational(2), static_cast<unsigned>(2 * n - 2)) *
                         rising_factorial(Rational(5, 2), 2 * n - 2);
  return -Rational(catalan(n - 1)) / denom;
}

MonotonicityResult check_monotone(const DiagonalOperator& op) {
  const auto& tks = op.coefficients();
  for (std::size_t k = 1; k < tks.size(); ++k) {
    // std::optional orders nullopt (the zero polynomial) below every value.
    if (tks[k].degree() < tks[k - 1].degree()) return {false, k};
  }
  return {};
}

ParamPoly apply_to_monomial(const SequenceSpec& spec, std::size_t n) {
  const LegendreExpansion e = to_legendre(Poly::monomial(Rational(1), n));
  return from_legendre(apply_sequence(spec, e));
}

ParamPoly symbol_constant_series(const SequenceSpec& spec, std::size_t cutoff) {
  std::vector<ParamAffine> coeffs;
  coeffs.reserve(cutoff + 1);
  for (std::size_t n = 0; n <= cutoff; ++n) {
    ParamAffine at_zero = apply_to_monomial(spec, n).coeff(0) / Rational(factorial(n));
    coeffs.push_back(n % 2 == 0 ? at_zero : -at_zero);
  }
  return ParamPoly(std::move(coeffs));
}

std::vector<Rational> f_series_data(std::size_t count) {
  if (count == 0) throw std::invalid_argument("f_series_data: need at least one term");
  std::vector<Rational> d;
  d.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) {
    Rational v = Rational(mpz_class(factorial(k) * catalan(k - 1)));
    v /= pow(Rational(2), static_cast<unsigned>(2 * k)) * rising_factorial(Rational(5, 2), 2 * k - 2);
    d.push_back(std::move(v));
  }
  return d;
}

}  // namespace hlab
