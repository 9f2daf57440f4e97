#include "hlab/sequence.hpp"

#include <algorithm>
#include <stdexcept>


namespace hlab {

SequenceSpec SequenceSpec::interpolated(ParamPoly in_k, std::string label) {
  SequenceSpec s;
  s.interp_ = std::move(in_k);
  s.label_ = std::move(label);
  return s;
}

SequenceSpec SequenceSpec::explicit_list(std::vector<ParamAffine> terms, std::string label) {
  SequenceSpec s;
  s.terms_ = std::move(terms);
  s.label_ = std::move(label);
  return s;
}

SequenceSpec SequenceSpec::linear() {
  return interpolated(ParamPoly({ParamAffine::param(Param::c), ParamAffine(1)}), "k + c");
}

SequenceSpec SequenceSpec::quadratic() {
  return interpolated(
      ParamPoly({ParamAffine::param(Param::b), ParamAffine::param(Param::a), ParamAffine(1)}),
      "k^2 + a*k + b");
}

SequenceSpec SequenceSpec::cubic() {
  return interpolated(ParamPoly({ParamAffine::param(Param::c), ParamAffine::param(Param::b),
                                 ParamAffine::param(Param::a), ParamAffine(1)}),
                      "k^3 + a*k^2 + b*k + c");
}

ParamAffine SequenceSpec::gamma(std::size_t k) const {
  if (interp_) return evaluate(*interp_, Rational(k));
  return k < terms_->size() ? (*terms_)[k] : ParamAffine();
}

bool SequenceSpec::is_numeric() const {
  const auto& cs = interp_ ? interp_->coeffs() : *terms_;
  return std::all_of(cs.begin(), cs.end(), [](const ParamAffine& c) { return c.is_constant(); });
}

SequenceSpec SequenceSpec::specialize(const Rational& a, const Rational& b,
                                      const Rational& c) const {
  const std::string suffix =
      " at (a,b,c)=(" + a.to_string() + "," + b.to_string() + "," + c.to_string() + ")";
  if (interp_) return interpolated(to_param(eval_params(*interp_, a, b, c)), label_ + suffix);
  std::vector<ParamAffine> v;
  v.reserve(terms_->size());
  for (const auto& t : *terms_) v.emplace_back(t.eval(a, b, c));
  return explicit_list(std::move(v), label_ + suffix);
}

SequenceSpec operator*(const SequenceSpec& lhs, const SequenceSpec& rhs) {
  const std::string label = "(" + lhs.label_ + ")*(" + rhs.label_ + ")";
  if (lhs.interp_ && rhs.interp_) return SequenceSpec::interpolated(*lhs.interp_ * *rhs.interp_, label);
  // An explicit list is finitely supported, so the product is too.
  const std::size_t n = std::max(lhs.terms_ ? lhs.terms_->size() : 0,
                                 rhs.terms_ ? rhs.terms_->size() : 0);
  std::vector<ParamAffine> v;
  v.reserve(n);
  for (std::size_t k = 0; k < n; ++k) v.push_back(lhs.gamma(k) * rhs.gamma(k));
  return SequenceSpec::explicit_list(std::move(v), label);
}

ParamLegendreExpansion apply_sequence(const SequenceSpec& spec, const ParamLegendreExpansion& e) {
  std::vector<ParamAffine> v;
  v.reserve(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) v.push_back(e.coeffs()[k] * spec.gamma(k));
  return ParamLegendreExpansion(std::move(v));
}

ParamLegendreExpansion apply_sequence(const SequenceSpec& spec, const LegendreExpansion& e) {
  std::vector<ParamAffine> v(e.coeffs().begin(), e.coeffs().end());
  return apply_sequence(spec, ParamLegendreExpansion(std::move(v)));
}

LegendreExpansion eval_params(const ParamLegendreExpansion& e, const Rational& a, const Rational& b,
                              const Rational& c) {
  std::vector<Rational> v;
  v.reserve(e.size());
  for (const auto& coeff : e.coeffs()) v.push_back(coeff.eval(a, b, c));
  return LegendreExpansion(std::move(v));
}

}  // namespace hlab
