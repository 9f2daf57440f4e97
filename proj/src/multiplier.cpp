#include "hlab/multiplier.hpp"

#include <stdexcept>

#include "hlab/diagonal_operator.hpp"
#include "hlab/error.hpp"
#include "hlab/hypergeom.hpp"

namespace hlab {

namespace {

LegendreExpansion even_expansion(std::initializer_list<Rational> even_coeffs) {
  std::vector<Rational> v;
  for (const auto& c : even_coeffs) {
    if (!v.empty()) v.emplace_back(0);
    v.push_back(c);
  }
  return LegendreExpansion(std::move(v));
}

ParamAffine affine(long c0, long ca, long cb, long cc) {
  return ParamAffine(Rational(c0), Rational(ca), Rational(cb), Rational(cc));
}

/// -c0/ca for a form c0 + ca*(a - b): the value of a - b where it vanishes.
Rational threshold(const ParamAffine& form) {
  if (form.coeff(Param::a).is_zero() || form.coeff(Param::a) != -form.coeff(Param::b)) {
    throw CertificateError("form " + form.to_string() + " is not a function of a - b");
  }
  return -form.constant() / form.coeff(Param::a);
}

const CubicCertificate& cached_certificate() {
  static const CubicCertificate cert = cubic_certificate();
  return cert;
}

}  // namespace

PolyaSchurResult polya_schur_test(const SequenceSpec& spec, std::size_t bound) {
  if (!spec.is_numeric()) throw std::invalid_argument("polya_schur_test: sequence has free parameters");
  std::vector<Rational> gamma;
  gamma.reserve(bound + 1);
  for (std::size_t k = 0; k <= bound; ++k) {
    gamma.push_back(spec.gamma(k).constant());
    if (gamma.back().sign() < 0) {
      throw std::invalid_argument("polya_schur_test: gamma_" + std::to_string(k) + " is negative");
    }
  }
  for (std::size_t n = 0; n <= bound; ++n) {
    std::vector<Rational> coeffs;
    coeffs.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) coeffs.push_back(Rational(binomial(n, k)) * gamma[k]);
    if (!lp_plus_check(Poly(std::move(coeffs)))) return {false, n};
  }
  return {};
}

CubicCmsResult cubic_cms_necessary(const Rational& a, const Rational& b, const Rational& c) {
  CubicCmsResult r;
  r.exponential_factor = Poly({c, a + b + Rational(1), a + Rational(3), Rational(1)});
  r.admissible = a >= Rational(-3) && a + b >= Rational(-1) && c >= Rational(0);
  return r;
}

Poly cubic_test_poly_p1() { return Poly::monomial(Rational(1), 5) * legendre(3); }
Poly cubic_test_poly_p2() { return Poly::monomial(Rational(1), 5) * legendre(5); }

LegendreExpansion known_p1_expansion() {
  return even_expansion({Rational(4, 63), Rational(205, 693), Rational(372, 1001), Rational(152, 693),
                         Rational(64, 1287)});
}

LegendreExpansion known_p2_expansion() {
  return even_expansion({Rational(8, 693), Rational(1000, 9009), Rational(291, 1001),
                         Rational(4078, 11781), Rational(4816, 24453), Rational(2016, 46189)});
}

CubicCertificate compute_cubic_forms() {
  const SequenceSpec cubic = SequenceSpec::cubic();
  CubicCertificate cert;
  cert.p1_expansion = to_legendre(cubic_test_poly_p1());
  cert.p2_expansion = to_legendre(cubic_test_poly_p2());
  cert.p1_image = from_legendre(apply_sequence(cubic, cert.p1_expansion)).scaled(Rational(kP1Scale));
  cert.p2_image = from_legendre(apply_sequence(cubic, cert.p2_expansion)).scaled(Rational(kP2Scale));
  for (std::size_t k = 0; k < cert.q_forms.size(); ++k) cert.q_forms[k] = cert.p1_image.coeff(2 * k);
  for (std::size_t k = 0; k < cert.w_forms.size(); ++k) cert.w_forms[k] = cert.p2_image.coeff(2 * k);
  cert.dagger_bound = threshold(cert.q_forms[0]);
  cert.ddagger_bound = threshold(cert.w_forms[0]);
  cert.infeasible = cert.dagger_bound > cert.ddagger_bound;
  return cert;
}

std::vector<std::string> certificate_mismatches(const CubicCertificate& cert) {
  std::vector<std::string> out;
  auto expect = [&out](const std::string& what, const auto& actual, const auto& expected) {
    if (!(actual == expected)) out.push_back(what + ": got " + actual.to_string() + ", expected " + expected.to_string());
  };
  if (cert.p1_expansion != known_p1_expansion()) out.emplace_back("expansion of p1 differs");
  if (cert.p2_expansion != known_p2_expansion()) out.emplace_back("expansion of p2 differs");
  for (std::size_t i = 1; i < cert.p1_image.coeffs().size(); i += 2) {
    if (!cert.p1_image.coeffs()[i].is_zero()) out.push_back("p1 image has odd coefficient at x^" + std::to_string(i));
  }
  for (std::size_t i = 1; i < cert.p2_image.coeffs().size(); i += 2) {
    if (!cert.p2_image.coeffs()[i].is_zero()) out.push_back("p2 image has odd coefficient at x^" + std::to_string(i));
  }
  expect("q_0", cert.q_forms[0], affine(16 * -121, 16 * 46, 16 * -46, 0));
  expect("q_4", cert.q_forms[2], affine(630 * 15724, 630 * 1226, 630 * 61, 0));
  expect("w_0", cert.w_forms[0], affine(16 * -641, 16 * 806, 16 * -806, 0));
  expect("w_4", cert.w_forms[2], affine(-630L * 38840980, -630L * 2015774, -630 * 62731, 0));
  expect("dagger bound", cert.dagger_bound, Rational(121, 46));
  expect("ddagger bound", cert.ddagger_bound, Rational(641, 806));
  if (!cert.infeasible) out.emplace_back("bounds are compatible; no contradiction");
  return out;
}

CubicCertificate cubic_certificate() {
  CubicCertificate cert = compute_cubic_forms();
  if (auto problems = certificate_mismatches(cert); !problems.empty()) {
    throw CertificateError("cubic certificate mismatch: " + problems.front());
  }
  return cert;
}

const char* to_string(TestPolynomial t) { return t == TestPolynomial::p1 ? "p1" : "p2"; }

const char* to_string(WitnessPath p) {
  return p == WitnessPath::direct ? "direct" : "reversed-and-differentiated";
}

CounterexampleWitness cubic_counterexample(const Rational& a, const Rational& b, const Rational& c) {
  const CubicCertificate& cert = cached_certificate();

  struct Branch {
    TestPolynomial tag;
    Poly image;
    bool middle_vanishes;  // q_2 (w_2) == 0
    bool triggered;
  };
  const Poly img1 = eval_params(cert.p1_image, a, b, c);
  const Poly img2 = eval_params(cert.p2_image, a, b, c);
  const bool q2_zero = cert.q_forms[1].eval(a, b, c).is_zero();
  const bool w2_zero = cert.w_forms[1].eval(a, b, c).is_zero();
  const Branch branches[] = {
      {TestPolynomial::p1, img1, q2_zero, q2_zero || cert.q_forms[0].eval(a, b, c).sign() < 0},
      {TestPolynomial::p2, img2, w2_zero, w2_zero || cert.w_forms[0].eval(a, b, c).sign() > 0},
  };

  auto examine = [&](const Branch& br) -> std::optional<CounterexampleWitness> {
    CounterexampleWitness w{a, b, c, br.tag, WitnessPath::direct, br.image, {}};
    if (br.middle_vanishes) {
      w.path = WitnessPath::reversed_and_differentiated;
      w.image = derivative(reverse(br.image), 4);
    }
    if (w.image.is_zero()) return std::nullopt;
    w.report = count_real_roots(w.image);
    if (w.report.hyperbolic) return std::nullopt;
    return w;
  };

  // Branches the case split selects come first; the rest are a fallback.
  for (bool want_triggered : {true, false}) {
    for (const Branch& br : branches) {
      if (br.triggered != want_triggered) continue;
      if (auto w = examine(br)) return *w;
    }
  }
  throw CertificateError("no witness found along the case split at (a,b,c)=(" + a.to_string() + "," +
                         b.to_string() + "," + c.to_string() + ")");
}

LinearCertificate linear_nonms_certificate(const Rational& c) {
  LinearCertificate cert;
  cert.c = c;
  const auto d = f_series_data(3);
  cert.d = {d[0], d[1], d[2]};
  cert.discriminant = d[1] * d[1] - d[2] * d[0];
  const Rational k = Rational(-4, 3);
  cert.truncated = Poly({c, k * d[0], k * d[1] / Rational(2), k * d[2] / Rational(6)});
  cert.laguerre_l1 = laguerre_expression(derivative(cert.truncated), Rational(0), 1);
  cert.violated = cert.laguerre_l1.sign() < 0;
  if (cert.discriminant != Rational(-1, 80850)) {
    throw CertificateError("d_2^2 - d_3 d_1 = " + cert.discriminant.to_string() + ", expected -1/80850");
  }
  if (cert.laguerre_l1 != Rational(16, 9) * cert.discriminant) {
    throw CertificateError("L_1(0, f') = " + cert.laguerre_l1.to_string() + " is not 16/9 (d_2^2 - d_3 d_1)");
  }
  return cert;
}

}  // namespace hlab
