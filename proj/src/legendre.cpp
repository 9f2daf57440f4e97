#include "hlab/legendre.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "hlab/hypergeom.hpp"

namespace hlab {

namespace {

class LegendreCache {
 public:
  const Poly& get(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < table_.size()) return table_[n];
    }
    std::unique_lock lock(mutex_);
    if (table_.empty()) table_.push_back(Poly::constant(1));
    if (table_.size() == 1) table_.push_back(Poly::x());
    while (table_.size() <= n) {
      const std::size_t k = table_.size() - 1;  // build Le_{k+1}
      Poly next = (Poly::x() * table_[k]).scaled(Rational(2 * k + 1)) -
                  table_[k - 1].scaled(Rational(k));
      table_.push_back(next.divided(Rational(k + 1)));
    }
    return table_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<Poly> table_;  // deque: push_back keeps references valid
};

LegendreCache& cache() {
  static LegendreCache instance;
  return instance;
}

Rational half_rising(std::size_t n) { return rising_factorial(Rational(1, 2), n); }

}  // namespace

const Poly& legendre(std::size_t n) { return cache().get(n); }

Rational legendre_leading_coefficient(std::size_t n) {
  return pow(Rational(2), static_cast<unsigned>(n)) * half_rising(n) / Rational(factorial(n));
}

Rational legendre_value_at_zero(std::size_t n) {
  if (n % 2 == 1) return Rational(0);
  const std::size_t m = n / 2;
  Rational v = half_rising(m) / Rational(factorial(m));
  return m % 2 == 0 ? v : -v;
}

Rational legendre_deriv_at_zero(std::size_t n, std::size_t j) {
  if (n % 2 == 1) throw std::invalid_argument("legendre_deriv_at_zero: odd index (value is 0)");
  const std::size_t m = n / 2;
  if (j > m) throw std::invalid_argument("legendre_deriv_at_zero: j exceeds n/2");
  Rational v = half_rising(m + j) * pow(Rational(2), static_cast<unsigned>(2 * j)) /
               Rational(factorial(m - j));
  return (m - j) % 2 == 0 ? v : -v;
}

LegendreExpansion to_legendre(const Poly& p) {
  if (p.is_zero()) return {};
  const std::size_t deg = *p.degree();
  std::vector<Rational> out(deg + 1);
  Poly rest = p;
  for (std::size_t d = deg + 1; d-- > 0;) {
    const Rational top = rest.coeff(d);
    if (top.is_zero()) continue;
    const Rational c = top / legendre_leading_coefficient(d);
    out[d] = c;
    rest -= legendre(d).scaled(c);
  }
  return LegendreExpansion(std::move(out));
}

Poly from_legendre(const LegendreExpansion& e) {
  Poly out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (!e.coeffs()[k].is_zero()) out += legendre(k).scaled(e.coeffs()[k]);
  }
  return out;
}

ParamPoly from_legendre(const ParamLegendreExpansion& e) {
  ParamPoly out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (!e.coeffs()[k].is_zero()) out += to_param(legendre(k)).scaled(e.coeffs()[k]);
  }
  return out;
}

}  // namespace hlab
