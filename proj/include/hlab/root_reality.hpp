#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hlab/poly.hpp"

namespace hlab {

/// p, p', then negated remainders -rem(p_{i-1}, p_i) until the chain reaches
/// a constant or the remainder vanishes. Throws std::invalid_argument on the
/// zero polynomial.
std::vector<Poly> sturm_sequence(const Poly& p);

/// p / gcd(p, p'), monic.
Poly squarefree_part(const Poly& p);

struct RootCountReport {
  Poly poly;
  std::size_t distinct_real_roots = 0;
  std::size_t degree_squarefree = 0;
  bool hyperbolic = false;  // every zero is real

  friend bool operator==(const RootCountReport&, const RootCountReport&) = default;
};

/// Distinct real roots over all of R, from sign variations of the Sturm chain
/// of the squarefree part at -inf and +inf. Throws std::invalid_argument on the
/// zero polynomial.
RootCountReport count_real_roots(const Poly& p);

struct GapResult {
  bool satisfied = true;
  std::optional<std::size_t> witness;
};

/// For each interior zero coefficient c_q (0 < q < deg) require
/// c_{q-1} c_{q+1} < 0. A failure proves p has non-real zeros.
/// Throws std::invalid_argument when p(0) == 0.
GapResult gap_condition(const Poly& p);

/// L_n(x, p) = sum_{j=0}^{2n} (-1)^{j+n} / (2n)! binom(2n, j) p^{(j)}(x) p^{(2n-j)}(x)
Rational laguerre_expression(const Poly& p, const Rational& x, std::size_t n);

/// Polynomial member of L-P+: only real zeros and no negative coefficient.
/// The zero polynomial is accepted.
bool lp_plus_check(const Poly& p);

}  // namespace hlab
