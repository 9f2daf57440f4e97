#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hlab/poly.hpp"
#include "hlab/sequence.hpp"

namespace hlab {

/// Truncation T = sum_{k<=K} T_k(x) D^k of the operator acting diagonally on
/// the Legendre basis: T[Le_n] = gamma_n Le_n for every n <= K.
class DiagonalOperator {
 public:
  DiagonalOperator(SequenceSpec spec, std::vector<ParamPoly> coefficients)
      : spec_(std::move(spec)), tks_(std::move(coefficients)) {}

  const SequenceSpec& spec() const { return spec_; }
  std::size_t order() const { return tks_.size() - 1; }
  const std::vector<ParamPoly>& coefficients() const { return tks_; }
  const ParamPoly& coefficient(std::size_t k) const { return tks_.at(k); }

  /// sum_k T_k(x) D^k[p]. Exact on polynomials of degree <= order().
  ParamPoly apply(const Poly& p) const;

 private:
  SequenceSpec spec_;
  std::vector<ParamPoly> tks_;
};

/// T_0 = gamma_0 and
///   T_k = (gamma_k Le_k - sum_{j<k} T_j D^j Le_k) / (2^k (1/2)_k).
DiagonalOperator operator_coefficients(const SequenceSpec& spec, std::size_t order);

/// Closed form of T_k(0) for the sequence {k + c}: c at k = 0, zero for odd
/// k, and -C_{n-1} / (3 * 2^{2n-2} (5/2)_{2n-2}) for k = 2n.
Rational tk_zero_closed(std::size_t k, const Rational& c);

struct MonotonicityResult {
  bool monotone = true;
  std::optional<std::size_t> first_violation;
};

/// Monotone means deg T_k >= deg T_{k-1} for 1 <= k <= order, with the zero
/// polynomial below every degree. A zero-order operator is trivially monotone.
MonotonicityResult check_monotone(const DiagonalOperator& op);

/// T[x^n] via to_legendre, termwise scaling and from_legendre. Does not touch
/// the T_k recursion.
ParamPoly apply_to_monomial(const SequenceSpec& spec, std::size_t n);

/// sum_{n<=N} (-1)^n T[x^n](0) y^n / n!, the x-free part of the truncated
/// symbol, as a polynomial in y.
ParamPoly symbol_constant_series(const SequenceSpec& spec, std::size_t cutoff);

/// d_k = k! C_{k-1} / (2^{2k} (5/2)_{2k-2}) for k = 1..K (index 0 holds d_1).
std::vector<Rational> f_series_data(std::size_t count);

}  // namespace hlab
