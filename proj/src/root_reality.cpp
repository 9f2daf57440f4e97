#include "hlab/root_reality.hpp"

#include <algorithm>
#include <stdexcept>

#include "hlab/hypergeom.hpp"

namespace hlab {

namespace {

std::size_t sign_variations(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

std::vector<Poly> sturm_sequence(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_sequence: zero polynomial");
  std::vector<Poly> chain{p};
  if (*p.degree() == 0) return chain;
  chain.push_back(derivative(p));
  while (*chain.back().degree() > 0) {
    Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  return monic(divmod(p, gcd(p, derivative(p))).first);
}

RootCountReport count_real_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  const Poly sf = squarefree_part(p);
  const auto chain = sturm_sequence(sf);
  std::vector<int> at_neg_inf;
  std::vector<int> at_pos_inf;
  for (const Poly& q : chain) {
    const int lead = q.leading().sign();
    at_pos_inf.push_back(lead);
    at_neg_inf.push_back(*q.degree() % 2 == 0 ? lead : -lead);
  }
  RootCountReport r;
  r.poly = p;
  r.degree_squarefree = *sf.degree();
  r.distinct_real_roots = sign_variations(at_neg_inf) - sign_variations(at_pos_inf);
  r.hyperbolic = r.distinct_real_roots == r.degree_squarefree;
  return r;
}

GapResult gap_condition(const Poly& p) {
  if (p.coeff(0).is_zero()) throw std::invalid_argument("gap_condition: requires p(0) != 0");
  const auto& c = p.coeffs();
  for (std::size_t q = 1; q + 1 < c.size(); ++q) {
    if (c[q].is_zero() && (c[q - 1] * c[q + 1]).sign() >= 0) return {false, q};
  }
  return {};
}

Rational laguerre_expression(const Poly& p, const Rational& x, std::size_t n) {
  std::vector<Rational> derivs;
  derivs.reserve(2 * n + 1);
  for (std::size_t j = 0; j <= 2 * n; ++j) derivs.push_back(evaluate(derivative(p, j), x));
  Rational sum;
  for (std::size_t j = 0; j <= 2 * n; ++j) {
    Rational term = Rational(binomial(2 * n, j)) * derivs[j] * derivs[2 * n - j];
    sum += (j + n) % 2 == 0 ? term : -term;
  }
  return sum / Rational(factorial(2 * n));
}

bool lp_plus_check(const Poly& p) {
  if (p.is_zero()) return true;
  const auto& c = p.coeffs();
  if (std::any_of(c.begin(), c.end(), [](const Rational& r) { return r.sign() < 0; })) return false;
  return count_real_roots(p).hyperbolic;
}

}  // namespace hlab
