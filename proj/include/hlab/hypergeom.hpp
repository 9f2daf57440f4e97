#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "hlab/rational.hpp"

namespace hlab {

/// (base)_n = base (base+1) ... (base+n-1); (base)_0 = 1. Memoized per base.
Rational rising_factorial(const Rational& base, std::size_t n);

mpz_class factorial(std::size_t n);
mpz_class binomial(std::size_t n, std::size_t k);

/// C_n = binom(2n, n) / (n+1).
mpz_class catalan(std::size_t n);

/// Psi_n(x) = sum_{j=1}^{n} binom(n,j) (2j-2)!/(j-1)! (1/2+2j)_{n-j} / (1/2)_n x^j.
/// Requires n >= 1.
Rational psi(std::size_t n, const Rational& x);

/// 3F2(-1/2, -n, 1/2+n; 1/4, 3/4; -x). The (-n)_k factor terminates the sum
/// at k = n. Requires n >= 1.
Rational terminating_3f2(std::size_t n, const Rational& x);

/// Evaluates
///   2n (-1)^n (1/2)_n / n! + sum_{j=1}^{n} C_{j-1} (-1)^{n-j} (1/2)_{n+j} / ((1/2)_{2j} (n-j)!)
/// and reports whether it vanishes exactly. Requires n >= 1.
bool catalan_identity_holds(std::size_t n);

/// The left-hand bracket of the identity above, exposed for diagnostics.
Rational catalan_identity_residual(std::size_t n);

struct IdentityRow {
  std::size_t n = 0;
  Rational f32_at_minus_one;  // expected 4n+1
  Rational psi_at_minus_one;  // expected -2n
  bool catalan_identity = false;
  bool passed = false;
};

/// Runs the three checks for every 1 <= n <= max_n.
std::vector<IdentityRow> identity_sweep(std::size_t max_n);

}  // namespace hlab
