#include "hlab/poly_text.hpp"

#include <cctype>
#include <stdexcept>

#include "hlab/error.hpp"

namespace hlab {

namespace {

class Parser {
 public:
  Parser(std::string_view text, char var) : var_(var) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
    }
    original_ = std::string(text);
  }

  ParamPoly parse() {
    if (src_.empty()) fail("empty polynomial");
    ParamPoly p = expr();
    if (pos_ != src_.size()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse polynomial '" + original_ + "': " + what);
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  ParamPoly expr() {
    ParamPoly acc;
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = src_[pos_++] == '-';
    ParamPoly t = term();
    acc = negate ? -t : t;
    while (peek() == '+' || peek() == '-') {
      negate = src_[pos_++] == '-';
      t = term();
      if (negate) {
        acc -= t;
      } else {
        acc += t;
      }
    }
    return acc;
  }

  ParamPoly term() {
    ParamPoly acc = factor();
    while (peek() == '*' || peek() == '/') {
      if (src_[pos_++] == '/') {
        const std::string d = digits();
        if (d.empty()) fail("expected an integer divisor after '/'");
        const Rational divisor{mpz_class(d)};
        if (divisor.is_zero()) fail("division by zero");
        acc = acc.divided(divisor);
        continue;
      }
      ParamPoly f = factor();
      try {
        acc = acc * f;
      } catch (const std::domain_error&) {
        fail("coefficients must stay affine in the parameters");
      }
    }
    return acc;
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(src_[pos_++]);
    return out;
  }

  std::size_t exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    const std::string d = digits();
    if (d.empty()) fail("missing exponent after '^'");
    if (d.size() > 4) fail("exponent too large");
    return std::stoul(d);
  }

  ParamPoly factor() {
    const char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num = digits();
      if (peek() == '/') {
        ++pos_;
        const std::string den = digits();
        if (den.empty()) fail("missing denominator");
        num += "/" + den;
      }
      return ParamPoly::constant(Rational::parse(num));
    }
    if (ch == '(') {
      ++pos_;
      ParamPoly inner = expr();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (ch == var_) {
      ++pos_;
      return ParamPoly::monomial(ParamAffine(1), exponent());
    }
    if (ch == 'a' || ch == 'b' || ch == 'c') {
      ++pos_;
      if (exponent() != 1) fail("parameters may only appear linearly");
      const Param p = ch == 'a' ? Param::a : (ch == 'b' ? Param::b : Param::c);
      return ParamPoly::constant(ParamAffine::param(p));
    }
    if (at_end()) fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, ch) + "'");
  }

  std::string src_;
  std::string original_;
  std::size_t pos_ = 0;
  char var_;
};

struct Term {
  bool negative;
  std::string magnitude;  // already parenthesised when it has several parts
};

Term split(const Rational& r) { return {r.sign() < 0, r.abs().to_string()}; }

Term split(const ParamAffine& a) {
  int parts = a.constant().is_zero() ? 0 : 1;
  for (Param p : {Param::a, Param::b, Param::c}) parts += a.coeff(p).is_zero() ? 0 : 1;
  if (parts > 1) return {false, "(" + a.to_string() + ")"};
  if (!a.is_constant()) {
    // single parameter term
    const std::string s = a.to_string();
    if (s.front() == '-') return {true, s.substr(1)};
    return {false, s};
  }
  return split(a.constant());
}

template <class C>
std::string render(const BasicPoly<C>& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    Term t = split(c[i]);
    if (out.empty()) {
      if (t.negative) out += "-";
    } else {
      out += t.negative ? " - " : " + ";
    }
    if (i == 0) {
      out += t.magnitude;
    } else {
      if (t.magnitude != "1") out += t.magnitude + "*";
      out += std::string(1, var) + "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace

ParamPoly parse_param_poly(std::string_view text, char var) { return Parser(text, var).parse(); }

Poly parse_poly(std::string_view text, char var) {
  const ParamPoly p = parse_param_poly(text, var);
  for (const auto& c : p.coeffs()) {
    if (!c.is_constant()) {
      throw ParseError("cannot parse polynomial '" + std::string(text) +
                       "': parameters are not allowed here");
    }
  }
  return eval_params(p, 0, 0, 0);
}

std::string to_string(const Poly& p, char var) { return render(p, var); }
std::string to_string(const ParamPoly& p, char var) { return render(p, var); }

}  // namespace hlab
