#include "hlab/verify.hpp"

#include <cstdlib>
#include <functional>
#include <future>
#include <sstream>

#include "hlab/diagonal_operator.hpp"
#include "hlab/error.hpp"
#include "hlab/hypergeom.hpp"
#include "hlab/multiplier.hpp"
#include "hlab/poly_text.hpp"
#include "hlab/root_reality.hpp"

namespace hlab {

namespace {

using Rows = std::vector<Check>;

Check row(std::string name, std::string expected, std::string actual, std::string ref) {
  Check c{std::move(name), CheckStatus::fail, std::move(expected), std::move(actual), std::move(ref)};
  c.status = c.expected == c.actual ? CheckStatus::pass : CheckStatus::fail;
  return c;
}

/// Row for a property that must hold for every index in [lo, hi]; `holds`
/// is probed in order and the first failing index is reported.
Check sweep_row(std::string name, std::size_t lo, std::size_t hi,
                const std::function<bool(std::size_t)>& holds, std::string ref) {
  const std::string expected = "holds for " + std::to_string(lo) + " <= n <= " + std::to_string(hi);
  std::string actual = expected;
  for (std::size_t n = lo; n <= hi; ++n) {
    bool ok = false;
    try {
      ok = holds(n);
    } catch (const std::exception& e) {
      actual = "error at n = " + std::to_string(n) + ": " + e.what();
      break;
    }
    if (!ok) {
      actual = "fails at n = " + std::to_string(n);
      break;
    }
  }
  return row(std::move(name), expected, actual, std::move(ref));
}

std::string render(const LegendreExpansion& e) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < e.size(); ++k) os << (k ? ", " : "") << e.coeffs()[k];
  os << "]";
  return os.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Rows legendre_facts(const VerifyOptions& opt) {
  const std::size_t n_max = opt.legendre_max;
  Rows rows;
  rows.push_back(sweep_row(
      "Le_n leading coefficient is 2^n (1/2)_n / n!", 0, n_max,
      [](std::size_t n) { return legendre(n).leading() == legendre_leading_coefficient(n); },
      "leading coefficient of Le_n"));
  rows.push_back(sweep_row(
      "Le_n(0) = 0 for odd n", 0, n_max,
      [](std::size_t n) { return n % 2 == 0 || evaluate(legendre(n), Rational(0)).is_zero(); },
      "parity of Le_n"));
  rows.push_back(sweep_row(
      "Le_{2m}(0) = (-1)^m (1/2)_m / m!", 0, n_max,
      [](std::size_t n) { return evaluate(legendre(n), Rational(0)) == legendre_value_at_zero(n); },
      "Le_n at the origin"));
  rows.push_back(sweep_row(
      "D^{2j} Le_n(0) closed form, zero for odd n", 0, n_max,
      [](std::size_t n) {
        for (std::size_t j = 0; 2 * j <= n; ++j) {
          const Rational direct = evaluate(derivative(legendre(n), 2 * j), Rational(0));
          const Rational closed = n % 2 == 1 ? Rational(0) : legendre_deriv_at_zero(n, j);
          if (direct != closed) return false;
        }
        return true;
      },
      "even derivatives of Le_n at the origin"));
  return rows;
}

Rows expansions(const VerifyOptions& opt) {
  const LegendreExpansion want1 = opt.p1_expected.value_or(known_p1_expansion());
  const LegendreExpansion want2 = opt.p2_expected.value_or(known_p2_expansion());
  return {
      row("expansion p1 = x^5*Le_3 in the Legendre basis", render(want1),
          render(to_legendre(cubic_test_poly_p1())), "cubic argument, test polynomial p1"),
      row("expansion p2 = x^5*Le_5 in the Legendre basis", render(want2),
          render(to_legendre(cubic_test_poly_p2())), "cubic argument, test polynomial p2"),
  };
}

Rows linear_operator(const VerifyOptions& opt) {
  const SequenceSpec spec = SequenceSpec::linear();
  const std::size_t order = std::max<std::size_t>(opt.max_tk, 3);
  const DiagonalOperator op = operator_coefficients(spec, order);
  Rows rows;
  rows.push_back(row("{k+c}: T_0, T_1, T_2, T_3", "c | x^1 | -1/3 | 2/15*x^1",
                     to_string(op.coefficient(0)) + " | " + to_string(op.coefficient(1)) + " | " +
                         to_string(op.coefficient(2)) + " | " + to_string(op.coefficient(3)),
                     "linear sequence, first operator coefficients"));
  for (std::size_t k = 1; k <= opt.max_tk; ++k) {
    rows.push_back(row("{k+c}: T_" + std::to_string(k) + "(0) recursion vs Catalan closed form",
                       ParamAffine(tk_zero_closed(k, Rational(0))).to_string(),
                       evaluate(op.coefficient(k), Rational(0)).to_string(),
                       "linear sequence, T_k(0) closed form"));
  }
  rows.push_back(sweep_row(
      "{k+c}: sum_k T_k D^k Le_n = (n+c) Le_n", 0, order,
      [&](std::size_t n) { return op.apply(legendre(n)) == to_param(legendre(n)).scaled(spec.gamma(n)); },
      "linear sequence, diagonality of the truncated operator"));
  return rows;
}

Rows symbol_rows(const VerifyOptions& opt) {
  const SequenceSpec spec = SequenceSpec::linear();
  const std::size_t cutoff = opt.symbol_cutoff;
  const DiagonalOperator op = operator_coefficients(spec, cutoff);
  const ParamPoly symbol = symbol_constant_series(spec, cutoff);
  return {sweep_row(
      "{k+c}: symbol y^n coefficient equals (-1)^n T_n(0) via monomial images", 0, cutoff,
      [&](std::size_t n) {
        const ParamAffine tn = evaluate(op.coefficient(n), Rational(0));
        return symbol.coeff(n) == (n % 2 == 0 ? tn : -tn);
      },
      "linear sequence, constant term f(y) of the symbol")};
}

Rows identities(const VerifyOptions& opt) {
  const std::size_t n_max = opt.max_identity_n;
  Rows rows;
  rows.push_back(sweep_row(
      "3F2(-1/2,-n,1/2+n; 1/4,3/4; 1) = 4n+1", 1, n_max,
      [](std::size_t n) { return terminating_3f2(n, Rational(-1)) == Rational(4 * n + 1); },
      "terminating 3F2 evaluation"));
  rows.push_back(sweep_row(
      "3F2(-1/2,-n,1/2+n; 1/4,3/4; -x) = 1 - 2 Psi_n(x) at x in {-1, 1/3, 2}", 1, n_max,
      [](std::size_t n) {
        for (const Rational& x : {Rational(-1), Rational(1, 3), Rational(2)}) {
          if (terminating_3f2(n, x) != Rational(1) - Rational(2) * psi(n, x)) return false;
        }
        return true;
      },
      "3F2 in terms of Psi_n"));
  rows.push_back(sweep_row("Psi_n(-1) = -2n", 1, n_max,
                           [](std::size_t n) { return psi(n, Rational(-1)) == -Rational(2 * n); },
                           "Catalan identity, Psi form"));
  rows.push_back(sweep_row("Catalan binomial identity vanishes", 1, n_max,
                           [](std::size_t n) { return catalan_identity_holds(n); },
                           "Catalan identity, binomial form"));
  return rows;
}

Rows laguerre_rows() {
  Rows rows;
  try {
    const LinearCertificate cert = linear_nonms_certificate(Rational(0));
    rows.push_back(row("d_2^2 - d_3 d_1", "-1/80850", cert.discriminant.to_string(),
                       "f~ is not in L-P"));
    rows.push_back(row("L_1(0, f~') = 16/9 (d_2^2 - d_3 d_1) < 0", "-8/363825 (violated)",
                       cert.laguerre_l1.to_string() + (cert.violated ? " (violated)" : " (satisfied)"),
                       "Laguerre inequality for the truncated f~'"));
  } catch (const std::exception& e) {
    rows.push_back(row("d_2^2 - d_3 d_1", "-1/80850", std::string("error: ") + e.what(), "f~ is not in L-P"));
  }
  return rows;
}

Rows spot_checks() {
  Rows rows;
  auto cms = [](long a, long b, long c) { return yes_no(cubic_cms_necessary(a, b, c).admissible); };
  rows.push_back(row("cubic CMS bounds at (0,0,0), (-4,0,0), (6,11,6), (0,-2,0), (0,0,-1)",
                     "true false true false false",
                     cms(0, 0, 0) + " " + cms(-4, 0, 0) + " " + cms(6, 11, 6) + " " + cms(0, -2, 0) + " " +
                         cms(0, 0, -1),
                     "coefficient bounds for cubic classical multiplier sequences"));
  rows.push_back(row("(k+1)(k+2)(k+3): T[e^x] = e^x p(x)", "x^3 + 9*x^2 + 18*x^1 + 6",
                     to_string(cubic_cms_necessary(6, 11, 6).exponential_factor),
                     "coefficient bounds for cubic classical multiplier sequences"));
  auto gap = [](const char* text) {
    const GapResult g = gap_condition(parse_poly(text));
    return g.satisfied ? std::string("ok") : "gap@" + std::to_string(*g.witness);
  };
  rows.push_back(row("zero-coefficient sign test on 1+x^2, 1-x^2, (1+x)^3, 1+x^3",
                     "gap@1 ok ok gap@1",
                     gap("1+x^2") + " " + gap("1-x^2") + " " + gap("(1+x)*(1+x)*(1+x)") + " " + gap("1+x^3"),
                     "zero coefficients of real-rooted polynomials"));
  return rows;
}

Rows cubic_rows() {
  Rows rows;
  CubicCertificate cert;
  try {
    cert = compute_cubic_forms();
  } catch (const std::exception& e) {
    rows.push_back(row("cubic certificate", "computed", std::string("error: ") + e.what(), "cubic argument"));
    return rows;
  }
  const std::string ref = "cubic argument, affine coefficient forms";
  rows.push_back(row("q_0 = 16(-121+46a-46b)", "-1936 + 736*a - 736*b", cert.q_forms[0].to_string(), ref));
  rows.push_back(row("q_4 = 630(15724+1226a+61b)", "9906120 + 772380*a + 38430*b", cert.q_forms[2].to_string(), ref));
  rows.push_back(row("w_0 = 16(-641+806a-806b)", "-10256 + 12896*a - 12896*b", cert.w_forms[0].to_string(), ref));
  rows.push_back(row("w_4 = -630(38840980+2015774a+62731b)", "-24469817400 - 1269937620*a - 39520530*b",
                     cert.w_forms[2].to_string(), ref));
  bool odd_zero = true;
  for (const ParamPoly* img : {&cert.p1_image, &cert.p2_image}) {
    for (std::size_t i = 1; i < img->coeffs().size(); i += 2) odd_zero = odd_zero && img->coeffs()[i].is_zero();
  }
  rows.push_back(row("both scaled images are even polynomials", "true", yes_no(odd_zero), ref));
  rows.push_back(row("c enters q_6, q_8 only through c*p1", "-27027 45045 0 0 0",
                     cert.q_forms[3].coeff(Param::c).to_string() + " " + cert.q_forms[4].coeff(Param::c).to_string() +
                         " " + cert.q_forms[0].coeff(Param::c).to_string() + " " +
                         cert.q_forms[1].coeff(Param::c).to_string() + " " +
                         cert.q_forms[2].coeff(Param::c).to_string(),
                     ref));
  rows.push_back(row("a-b >= 121/46 and a-b <= 641/806 are incompatible", "121/46 > 641/806",
                     cert.dagger_bound.to_string() + (cert.infeasible ? " > " : " <= ") +
                         cert.ddagger_bound.to_string(),
                     "cubic argument, final contradiction"));

  const auto grid = admissible_grid();
  std::string actual = "non-real zeros at all " + std::to_string(grid.size()) + " triples";
  const std::string expected = actual;
  for (const auto& t : grid) {
    try {
      const CounterexampleWitness w = cubic_counterexample(t[0], t[1], t[2]);
      if (w.report.hyperbolic) throw CertificateError("hyperbolic witness");
    } catch (const std::exception& e) {
      actual = "no witness at (" + t[0].to_string() + "," + t[1].to_string() + "," + t[2].to_string() +
               "): " + e.what();
      break;
    }
  }
  rows.push_back(row("counterexample witnesses on the admissible grid", expected, actual,
                     "cubic argument at sample triples"));
  return rows;
}

Rows monotone_rows() {
  auto describe = [](const MonotonicityResult& m) {
    return m.monotone ? std::string("monotone") : "non-monotone at k=" + std::to_string(*m.first_violation);
  };
  return {
      row("{k+c} operator is not monotone", "non-monotone at k=2",
          describe(check_monotone(operator_coefficients(SequenceSpec::linear(), 4))), "monotone operators"),
      row("{k^2+a*k+b} operator is not monotone", "non-monotone at k=3",
          describe(check_monotone(operator_coefficients(SequenceSpec::quadratic(), 4))), "monotone operators"),
      row("{k^2+a*k+b}: T_2 and T_4",
          to_string(parse_param_poly("(-1/3)*(2+a-3*x^2)")) + " | " +
              to_string(parse_param_poly("(-1/105)*(a-1)*(1+4*x^2)")),
          [] {
            const DiagonalOperator op = operator_coefficients(SequenceSpec::quadratic(), 4);
            return to_string(op.coefficient(2)) + " | " + to_string(op.coefficient(4));
          }(),
          "monotone operators, quadratic display"),
  };
}

}  // namespace

std::size_t VerificationReport::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == CheckStatus::pass ? 1 : 0;
  return n;
}

std::size_t VerificationReport::failed() const { return checks.size() - passed(); }

VerifyOptions VerifyOptions::from_environment() {
  VerifyOptions opt;
  if (const char* env = std::getenv("HLAB_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      opt.max_tk = v;
      opt.max_identity_n = v;
    }
  }
  return opt;
}

std::vector<std::array<Rational, 3>> admissible_grid() {
  const Rational as[] = {Rational(-3), Rational(-1), Rational(0), Rational(1, 2), Rational(2)};
  const Rational slack[] = {Rational(0), Rational(1, 3), Rational(2), Rational(7), Rational(20)};
  const Rational cs[] = {Rational(0), Rational(1), Rational(5, 2), Rational(10)};
  std::vector<std::array<Rational, 3>> out;
  for (const auto& a : as) {
    for (const auto& s : slack) {
      for (const auto& c : cs) out.push_back({a, s - Rational(1) - a, c});  // a + b = s - 1
    }
  }
  return out;
}

VerificationReport run_verification(const VerifyOptions& options) {
  std::vector<std::function<Rows()>> groups = {
      [&] { return legendre_facts(options); },
      [&] { return expansions(options); },
      [&] { return linear_operator(options); },
      [&] { return symbol_rows(options); },
      [&] { return identities(options); },
      [] { return laguerre_rows(); },
      [] { return spot_checks(); },
      [] { return cubic_rows(); },
      [] { return monotone_rows(); },
  };
  std::vector<std::future<Rows>> pending;
  pending.reserve(groups.size());
  for (auto& g : groups) pending.push_back(std::async(std::launch::async, g));
  VerificationReport report;
  for (auto& f : pending) {
    Rows rows = f.get();
    report.checks.insert(report.checks.end(), rows.begin(), rows.end());
  }
  return report;
}

}  // namespace hlab
