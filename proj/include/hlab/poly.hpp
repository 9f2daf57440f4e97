#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hlab/rational.hpp"

namespace hlab {

/// Formal parameter slots of a ParamAffine.
enum class Param { a, b, c };

/// c0 + ca*a + cb*b + cc*c, affine in three formal parameters.
///
/// Products are only defined when at least one factor is a plain constant, so
/// the degree in the parameters never exceeds one. Anything else throws
/// std::domain_error.
class ParamAffine {
 public:
  ParamAffine() = default;
  ParamAffine(Rational constant) : c0_(std::move(constant)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  ParamAffine(I constant) : c0_(constant) {}  // NOLINT(google-explicit-constructor)
  ParamAffine(Rational c0, Rational ca, Rational cb, Rational cc)
      : c0_(std::move(c0)), ca_(std::move(ca)), cb_(std::move(cb)), cc_(std::move(cc)) {}

  static ParamAffine param(Param p, Rational coeff = Rational(1));

  const Rational& constant() const { return c0_; }
  const Rational& coeff(Param p) const;

  bool is_zero() const { return c0_.is_zero() && is_constant(); }
  bool is_constant() const { return ca_.is_zero() && cb_.is_zero() && cc_.is_zero(); }

  Rational eval(const Rational& a, const Rational& b, const Rational& c) const;

  /// "2/3 - 1/3*a + c"; "0" for zero.
  std::string to_string() const;

  ParamAffine& operator+=(const ParamAffine& rhs);
  ParamAffine& operator-=(const ParamAffine& rhs);
  ParamAffine& operator*=(const ParamAffine& rhs);
  ParamAffine& operator/=(const Rational& rhs);

  friend ParamAffine operator+(ParamAffine l, const ParamAffine& r) { return l += r; }
  friend ParamAffine operator-(ParamAffine l, const ParamAffine& r) { return l -= r; }
  friend ParamAffine operator*(ParamAffine l, const ParamAffine& r) { return l *= r; }
  friend ParamAffine operator/(ParamAffine l, const Rational& r) { return l /= r; }
  ParamAffine operator-() const { return ParamAffine(-c0_, -ca_, -cb_, -cc_); }

  friend bool operator==(const ParamAffine&, const ParamAffine&) = default;

 private:
  Rational c0_, ca_, cb_, cc_;
};

/// Dense univariate polynomial; coeffs()[i] multiplies x^i.
///
/// The highest stored coefficient is never zero. The zero polynomial has an
/// empty coefficient list and degree() == std::nullopt, which orders below
/// every real degree.
template <class C>
class BasicPoly {
 public:
  using coeff_type = C;

  BasicPoly() = default;
  explicit BasicPoly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static BasicPoly constant(C c) { return BasicPoly(std::vector<C>{std::move(c)}); }

  static BasicPoly monomial(C c, std::size_t power) {
    std::vector<C> v(power + 1);
    v[power] = std::move(c);
    return BasicPoly(std::move(v));
  }

  static BasicPoly x() { return monomial(C(1), 1); }

  const std::vector<C>& coeffs() const { return coeffs_; }

  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^i; zero past the degree.
  C coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C(); }

  /// Zero for the zero polynomial.
  C leading() const { return coeffs_.empty() ? C() : coeffs_.back(); }

  BasicPoly& operator+=(const BasicPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
  }

  BasicPoly& operator-=(const BasicPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
  }

  friend BasicPoly operator+(BasicPoly l, const BasicPoly& r) { return l += r; }
  friend BasicPoly operator-(BasicPoly l, const BasicPoly& r) { return l -= r; }

  BasicPoly operator-() const {
    BasicPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  /// Multiply every coefficient by a scalar.
  template <class S>
  BasicPoly scaled(const S& s) const {
    std::vector<C> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c * s);
    return BasicPoly(std::move(v));
  }

  BasicPoly divided(const Rational& s) const {
    std::vector<C> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c / s);
    return BasicPoly(std::move(v));
  }

  friend bool operator==(const BasicPoly&, const BasicPoly&) = default;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

using Poly = BasicPoly<Rational>;
using ParamPoly = BasicPoly<ParamAffine>;

inline ParamAffine operator*(const ParamAffine& l, const Rational& r) { return l * ParamAffine(r); }
inline ParamAffine operator*(const Rational& l, const ParamAffine& r) { return ParamAffine(l) * r; }

/// Convolution product. Mixed Poly/ParamPoly products yield a ParamPoly.
template <class A, class B>
auto operator*(const BasicPoly<A>& p, const BasicPoly<B>& q) {
  using R = decltype(std::declval<A>() * std::declval<B>());
  if (p.is_zero() || q.is_zero()) return BasicPoly<R>();
  const auto& pc = p.coeffs();
  const auto& qc = q.coeffs();
  std::vector<R> out(pc.size() + qc.size() - 1);
  for (std::size_t i = 0; i < pc.size(); ++i) {
    if (pc[i].is_zero()) continue;
    for (std::size_t j = 0; j < qc.size(); ++j) out[i + j] += pc[i] * qc[j];
  }
  return BasicPoly<R>(std::move(out));
}

/// k-th formal derivative.
template <class C>
BasicPoly<C> derivative(const BasicPoly<C>& p, std::size_t k = 1) {
  const auto& c = p.coeffs();
  if (c.size() <= k) return {};
  std::vector<C> out(c.size() - k);
  for (std::size_t i = k; i < c.size(); ++i) {
    // falling factorial i (i-1) ... (i-k+1)
    Rational f(1);
    for (std::size_t t = 0; t < k; ++t) f *= Rational(i - t);
    out[i - k] = c[i] * f;
  }
  return BasicPoly<C>(std::move(out));
}

/// Horner evaluation at a rational point.
template <class C>
C evaluate(const BasicPoly<C>& p, const Rational& x) {
  C acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// x^deg * p(1/x): coefficient list reversed, then renormalized.
template <class C>
BasicPoly<C> reverse(const BasicPoly<C>& p) {
  return BasicPoly<C>(std::vector<C>(p.coeffs().rbegin(), p.coeffs().rend()));
}

ParamPoly to_param(const Poly& p);

/// Substitute numeric values for the formal parameters.
Poly eval_params(const ParamPoly& p, const Rational& a, const Rational& b, const Rational& c);

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);

/// Monic greatest common divisor (zero iff both inputs are zero).
Poly gcd(const Poly& p, const Poly& q);

Poly monic(const Poly& p);

}  // namespace hlab
