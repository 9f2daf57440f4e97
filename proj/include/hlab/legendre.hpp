#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hlab/poly.hpp"

namespace hlab {

/// Coefficients in the Legendre basis: coeffs()[k] multiplies Le_k.
/// Trailing zeros are dropped, so the last index equals the degree of the
/// represented polynomial.
template <class C>
class LegendreSeries {
 public:
  LegendreSeries() = default;
  explicit LegendreSeries(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  static LegendreSeries unit(std::size_t k) {
    std::vector<C> v(k + 1);
    v[k] = C(1);
    return LegendreSeries(std::move(v));
  }

  const std::vector<C>& coeffs() const { return coeffs_; }
  C coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : C(); }
  std::size_t size() const { return coeffs_.size(); }

  friend LegendreSeries operator+(const LegendreSeries& l, const LegendreSeries& r) {
    std::vector<C> v(std::max(l.size(), r.size()));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = l.coeff(k) + r.coeff(k);
    return LegendreSeries(std::move(v));
  }

  friend bool operator==(const LegendreSeries&, const LegendreSeries&) = default;

 private:
  std::vector<C> coeffs_;
};

using LegendreExpansion = LegendreSeries<Rational>;
using ParamLegendreExpansion = LegendreSeries<ParamAffine>;

/// n-th Legendre polynomial from the three-term recurrence
/// (n+1) Le_{n+1} = (2n+1) x Le_n - n Le_{n-1}.
///
/// Results are cached for the life of the process; the returned reference
/// never dangles. Safe to call concurrently.
const Poly& legendre(std::size_t n);

/// 2^n (1/2)_n / n!
Rational legendre_leading_coefficient(std::size_t n);

/// Le_n(0): zero for odd n, (-1)^m (1/2)_m / m! for n = 2m.
Rational legendre_value_at_zero(std::size_t n);

/// D^{2j} Le_n at 0 for even n = 2m and 0 <= j <= m:
///   (-1)^{m-j} (1/2)_{m+j} 2^{2j} / (m-j)!
/// Throws std::invalid_argument for odd n or j > m.
Rational legendre_deriv_at_zero(std::size_t n, std::size_t j);

/// Exact change of basis by peeling off leading terms from the top degree down.
LegendreExpansion to_legendre(const Poly& p);

Poly from_legendre(const LegendreExpansion& e);
ParamPoly from_legendre(const ParamLegendreExpansion& e);

}  // namespace hlab
