#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hlab/legendre.hpp"
#include "hlab/rational.hpp"

namespace hlab {

enum class CheckStatus { pass, fail };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  std::string expected;
  std::string actual;
  std::string ref;  // which claim this row reproduces

  friend bool operator==(const Check&, const Check&) = default;
};

struct VerificationReport {
  std::vector<Check> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerifyOptions {
  std::size_t max_tk = 24;            // T_k(0) rows for k = 1..max_tk
  std::size_t max_identity_n = 50;    // hypergeometric identities for n = 1..max_identity_n
  std::size_t symbol_cutoff = 16;     // symbol cross-check for n <= symbol_cutoff
  std::size_t legendre_max = 20;      // closed-form Legendre facts for indices <= legendre_max

  // Expected expansions; the reference values unless overridden. Overrides
  // exist so a harness can check that a wrong constant is reported.
  std::optional<LegendreExpansion> p1_expected;
  std::optional<LegendreExpansion> p2_expected;

  /// Defaults, with HLAB_MAX_ORDER (when set to a positive integer)
  /// replacing both max_tk and max_identity_n.
  static VerifyOptions from_environment();
};

/// 100 rational triples with a >= -3, a + b >= -1, c >= 0.
std::vector<std::array<Rational, 3>> admissible_grid();

/// Runs every check group. Groups execute concurrently; rows come back in a
/// fixed order.
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace hlab
