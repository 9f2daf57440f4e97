#include "hlab/poly.hpp"

#include <stdexcept>

namespace hlab {

// ---------------------------------------------------------------------------
// ParamAffine

ParamAffine ParamAffine::param(Param p, Rational coeff) {
  ParamAffine out;
  switch (p) {
    case Param::a: out.ca_ = std::move(coeff); break;
    case Param::b: out.cb_ = std::move(coeff); break;
    case Param::c: out.cc_ = std::move(coeff); break;
  }
  return out;
}

const Rational& ParamAffine::coeff(Param p) const {
  switch (p) {
    case Param::a: return ca_;
    case Param::b: return cb_;
    case Param::c: return cc_;
  }
  return cc_;
}

Rational ParamAffine::eval(const Rational& a, const Rational& b, const Rational& c) const {
  return c0_ + ca_ * a + cb_ * b + cc_ * c;
}

std::string ParamAffine::to_string() const {
  std::string out;
  auto append = [&out](const Rational& coeff, const char* name) {
    if (coeff.is_zero()) return;
    const bool first = out.empty();
    if (coeff.sign() < 0) {
      out += first ? "-" : " - ";
    } else if (!first) {
      out += " + ";
    }
    const Rational mag = coeff.abs();
    if (name == nullptr) {
      out += mag.to_string();
    } else {
      if (mag != Rational(1)) out += mag.to_string() + "*";
      out += name;
    }
  };
  append(c0_, nullptr);
  append(ca_, "a");
  append(cb_, "b");
  append(cc_, "c");
  return out.empty() ? "0" : out;
}

ParamAffine& ParamAffine::operator+=(const ParamAffine& rhs) {
  c0_ += rhs.c0_;
  ca_ += rhs.ca_;
  cb_ += rhs.cb_;
  cc_ += rhs.cc_;
  return *this;
}

ParamAffine& ParamAffine::operator-=(const ParamAffine& rhs) {
  c0_ -= rhs.c0_;
  ca_ -= rhs.ca_;
  cb_ -= rhs.cb_;
  cc_ -= rhs.cc_;
  return *this;
}

ParamAffine& ParamAffine::operator*=(const ParamAffine& rhs) {
  if (rhs.is_constant()) {
    const Rational& s = rhs.c0_;
    c0_ *= s;
    ca_ *= s;
    cb_ *= s;
    cc_ *= s;
    return *this;
  }
  if (!is_constant()) {
    throw std::domain_error("product of two parameter-dependent affine forms is not affine");
  }
  const Rational s = c0_;
  *this = rhs;
  c0_ *= s;
  ca_ *= s;
  cb_ *= s;
  cc_ *= s;
  return *this;
}

ParamAffine& ParamAffine::operator/=(const Rational& rhs) {
  c0_ /= rhs;
  ca_ /= rhs;
  cb_ /= rhs;
  cc_ /= rhs;
  return *this;
}

// ---------------------------------------------------------------------------
// Poly helpers

ParamPoly to_param(const Poly& p) {
  std::vector<ParamAffine> v(p.coeffs().begin(), p.coeffs().end());
  return ParamPoly(std::move(v));
}

Poly eval_params(const ParamPoly& p, const Rational& a, const Rational& b, const Rational& c) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& coeff : p.coeffs()) v.push_back(coeff.eval(a, b, c));
  return Poly(std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  const std::size_t dd = *divisor.degree();
  const Rational lead = divisor.leading();
  std::vector<Rational> rem = dividend.coeffs();
  if (rem.size() <= dd) return {Poly(), dividend};
  std::vector<Rational> quot(rem.size() - dd);
  const auto& dc = divisor.coeffs();
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i].is_zero()) continue;
    const Rational q = rem[i] / lead;
    quot[i - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * dc[j];
  }
  rem.resize(dd);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.divided(p.leading());
}

Poly gcd(const Poly& p, const Poly& q) {
  Poly a = p;
  Poly b = q;
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

}  // namespace hlab
