#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hlab/legendre.hpp"
#include "hlab/poly.hpp"

namespace hlab {

/// A sequence gamma_k, either interpolated by a polynomial in k whose
/// coefficients are affine in (a, b, c), or given as an explicit finite list
/// (gamma_k = 0 past its end).
class SequenceSpec {
 public:
  static SequenceSpec interpolated(ParamPoly in_k, std::string label);
  static SequenceSpec explicit_list(std::vector<ParamAffine> terms, std::string label);

  /// {k + c}
  static SequenceSpec linear();
  /// {k^2 + alpha k + beta}, alpha and beta in slots a and b.
  static SequenceSpec quadratic();
  /// {k^3 + a k^2 + b k + c}
  static SequenceSpec cubic();

  ParamAffine gamma(std::size_t k) const;

  /// True when no term depends on a parameter.
  bool is_numeric() const;

  /// Same family with the parameters replaced by numbers.
  SequenceSpec specialize(const Rational& a, const Rational& b, const Rational& c) const;

  /// Termwise product gamma_k * delta_k. At most one side may carry parameters.
  friend SequenceSpec operator*(const SequenceSpec& lhs, const SequenceSpec& rhs);

  const std::string& label() const { return label_; }
  const std::optional<ParamPoly>& interpolant() const { return interp_; }
  const std::optional<std::vector<ParamAffine>>& terms() const { return terms_; }

 private:
  SequenceSpec() = default;

  std::optional<ParamPoly> interp_;
  std::optional<std::vector<ParamAffine>> terms_;
  std::string label_;
};

/// Multiply the k-th Legendre coefficient by gamma_k.
ParamLegendreExpansion apply_sequence(const SequenceSpec& spec, const LegendreExpansion& e);
ParamLegendreExpansion apply_sequence(const SequenceSpec& spec, const ParamLegendreExpansion& e);

LegendreExpansion eval_params(const ParamLegendreExpansion& e, const Rational& a, const Rational& b,
                              const Rational& c);

}  // namespace hlab
