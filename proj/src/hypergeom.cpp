#include "hlab/hypergeom.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hlab {

namespace {

// Prefix products are append-only, so a plain mutex around extension is enough.
std::mutex factorial_mutex;
std::vector<mpz_class> factorial_table{mpz_class(1)};

std::mutex rising_mutex;
std::map<Rational, std::vector<Rational>> rising_table;

void require_positive(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

}  // namespace

mpz_class factorial(std::size_t n) {
  std::lock_guard lock(factorial_mutex);
  while (factorial_table.size() <= n) {
    const std::size_t k = factorial_table.size();
    factorial_table.push_back(factorial_table.back() * static_cast<unsigned long>(k));
  }
  return factorial_table[n];
}

Rational rising_factorial(const Rational& base, std::size_t n) {
  std::lock_guard lock(rising_mutex);
  auto& row = rising_table[base];
  if (row.empty()) row.emplace_back(1);
  while (row.size() <= n) {
    const std::size_t k = row.size() - 1;
    row.push_back(row.back() * (base + Rational(k)));
  }
  return row[n];
}

mpz_class binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class catalan(std::size_t n) { return binomial(2 * n, n) / static_cast<unsigned long>(n + 1); }

Rational psi(std::size_t n, const Rational& x) {
  require_positive(n, "psi");
  const Rational half_n = rising_factorial(Rational(1, 2), n);
  Rational sum;
  Rational xj(1);
  for (std::size_t j = 1; j <= n; ++j) {
    xj *= x;
    Rational term(binomial(n, j) * factorial(2 * j - 2), factorial(j - 1));
    term *= rising_factorial(Rational(1, 2) + Rational(2 * j), n - j);
    term /= half_n;
    sum += term * xj;
  }
  return sum;
}

Rational terminating_3f2(std::size_t n, const Rational& x) {
  require_positive(n, "terminating_3f2");
  const Rational minus_n = -Rational(n);
  const Rational upper = Rational(1, 2) + Rational(n);
  Rational sum;
  Rational power(1);  // (-x)^k
  for (std::size_t k = 0; k <= n; ++k) {
    Rational term = rising_factorial(Rational(-1, 2), k) * rising_factorial(minus_n, k) *
                    rising_factorial(upper, k);
    term /= rising_factorial(Rational(1, 4), k) * rising_factorial(Rational(3, 4), k) *
            Rational(factorial(k));
    sum += term * power;
    power *= -x;
  }
  return sum;
}

Rational catalan_identity_residual(std::size_t n) {
  require_positive(n, "catalan_identity_residual");
  const Rational half(1, 2);
  Rational lead = Rational(2 * n) * rising_factorial(half, n) / Rational(factorial(n));
  if (n % 2 == 1) lead = -lead;
  Rational sum = lead;
  for (std::size_t j = 1; j <= n; ++j) {
    Rational term = Rational(catalan(j - 1)) * rising_factorial(half, n + j);
    term /= rising_factorial(half, 2 * j) * Rational(factorial(n - j));
    sum += (n - j) % 2 == 0 ? term : -term;
  }
  return sum;
}

bool catalan_identity_holds(std::size_t n) { return catalan_identity_residual(n).is_zero(); }

std::vector<IdentityRow> identity_sweep(std::size_t max_n) {
  std::vector<IdentityRow> rows;
  rows.reserve(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) {
    IdentityRow row;
    row.n = n;
    row.f32_at_minus_one = terminating_3f2(n, Rational(-1));
    row.psi_at_minus_one = psi(n, Rational(-1));
    row.catalan_identity = catalan_identity_holds(n);
    row.passed = row.f32_at_minus_one == Rational(4 * n + 1) &&
                 row.psi_at_minus_one == -Rational(2 * n) && row.catalan_identity;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hlab
