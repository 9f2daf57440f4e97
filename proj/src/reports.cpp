#include "hlab/reports.hpp"

#include <iomanip>
#include <sstream>

#include "hlab/poly_text.hpp"

namespace hlab {

void to_json(json& j, const Rational& r) { j = r.to_string(); }
void from_json(const json& j, Rational& r) { r = Rational::parse(j.get<std::string>()); }

void to_json(json& j, const Poly& p) { j = to_string(p); }
void from_json(const json& j, Poly& p) { p = parse_poly(j.get<std::string>()); }

void to_json(json& j, const ParamPoly& p) { j = to_string(p); }
void from_json(const json& j, ParamPoly& p) { p = parse_param_poly(j.get<std::string>()); }

void to_json(json& j, const ParamAffine& a) {
  j = json{{"c0", a.constant()}, {"a", a.coeff(Param::a)}, {"b", a.coeff(Param::b)}, {"c", a.coeff(Param::c)}};
}

void from_json(const json& j, ParamAffine& a) {
  a = ParamAffine(j.at("c0").get<Rational>(), j.at("a").get<Rational>(), j.at("b").get<Rational>(),
                  j.at("c").get<Rational>());
}

void to_json(json& j, const LegendreExpansion& e) { j = json{{"basis", "legendre"}, {"coeffs", e.coeffs()}}; }

void from_json(const json& j, LegendreExpansion& e) {
  if (j.at("basis").get<std::string>() != "legendre") throw json::other_error::create(501, "not a Legendre expansion", &j);
  e = LegendreExpansion(j.at("coeffs").get<std::vector<Rational>>());
}

void to_json(json& j, const RootCountReport& r) {
  j = json{{"poly", r.poly},
           {"distinct_real_roots", r.distinct_real_roots},
           {"degree_squarefree", r.degree_squarefree},
           {"hyperbolic", r.hyperbolic}};
}

void from_json(const json& j, RootCountReport& r) {
  r.poly = j.at("poly").get<Poly>();
  r.distinct_real_roots = j.at("distinct_real_roots").get<std::size_t>();
  r.degree_squarefree = j.at("degree_squarefree").get<std::size_t>();
  r.hyperbolic = j.at("hyperbolic").get<bool>();
}

void to_json(json& j, const Check& c) {
  j = json{{"name", c.name},
           {"status", c.status == CheckStatus::pass ? "pass" : "fail"},
           {"expected", c.expected},
           {"actual", c.actual},
           {"ref", c.ref}};
}

void from_json(const json& j, Check& c) {
  c.name = j.at("name").get<std::string>();
  c.status = j.at("status").get<std::string>() == "pass" ? CheckStatus::pass : CheckStatus::fail;
  c.expected = j.at("expected").get<std::string>();
  c.actual = j.at("actual").get<std::string>();
  c.ref = j.at("ref").get<std::string>();
}

void to_json(json& j, const VerificationReport& r) {
  j = json{{"checks", r.checks},
           {"summary", {{"total", r.checks.size()}, {"passed", r.passed()}, {"failed", r.failed()}}}};
}

void from_json(const json& j, VerificationReport& r) { r.checks = j.at("checks").get<std::vector<Check>>(); }

void to_json(json& j, const CubicCertificate& c) {
  j = json{{"p1_expansion", c.p1_expansion},
           {"p2_expansion", c.p2_expansion},
           {"p1_image", c.p1_image},
           {"p2_image", c.p2_image},
           {"p1_scale", kP1Scale},
           {"p2_scale", kP2Scale},
           {"q_forms", c.q_forms},
           {"w_forms", c.w_forms},
           {"dagger_bound", c.dagger_bound},
           {"ddagger_bound", c.ddagger_bound},
           {"infeasible", c.infeasible}};
}

void from_json(const json& j, CubicCertificate& c) {
  c.p1_expansion = j.at("p1_expansion").get<LegendreExpansion>();
  c.p2_expansion = j.at("p2_expansion").get<LegendreExpansion>();
  c.p1_image = j.at("p1_image").get<ParamPoly>();
  c.p2_image = j.at("p2_image").get<ParamPoly>();
  c.q_forms = j.at("q_forms").get<std::array<ParamAffine, 5>>();
  c.w_forms = j.at("w_forms").get<std::array<ParamAffine, 6>>();
  c.dagger_bound = j.at("dagger_bound").get<Rational>();
  c.ddagger_bound = j.at("ddagger_bound").get<Rational>();
  c.infeasible = j.at("infeasible").get<bool>();
}

void to_json(json& j, const CounterexampleWitness& w) {
  j = json{{"triple", {{"a", w.a}, {"b", w.b}, {"c", w.c}}},
           {"test_poly", to_string(w.test_poly)},
           {"path", to_string(w.path)},
           {"image", w.image},
           {"report", w.report}};
}

void from_json(const json& j, CounterexampleWitness& w) {
  const json& t = j.at("triple");
  w.a = t.at("a").get<Rational>();
  w.b = t.at("b").get<Rational>();
  w.c = t.at("c").get<Rational>();
  w.test_poly = j.at("test_poly").get<std::string>() == "p1" ? TestPolynomial::p1 : TestPolynomial::p2;
  w.path = j.at("path").get<std::string>() == "direct" ? WitnessPath::direct
                                                       : WitnessPath::reversed_and_differentiated;
  w.image = j.at("image").get<Poly>();
  w.report = j.at("report").get<RootCountReport>();
}

void to_json(json& j, const LinearCertificate& c) {
  j = json{{"c", c.c},
           {"d", c.d},
           {"discriminant", c.discriminant},
           {"truncated", c.truncated},
           {"laguerre_l1", c.laguerre_l1},
           {"violated", c.violated}};
}

void from_json(const json& j, LinearCertificate& c) {
  c.c = j.at("c").get<Rational>();
  c.d = j.at("d").get<std::array<Rational, 3>>();
  c.discriminant = j.at("discriminant").get<Rational>();
  c.truncated = j.at("truncated").get<Poly>();
  c.laguerre_l1 = j.at("laguerre_l1").get<Rational>();
  c.violated = j.at("violated").get<bool>();
}

void to_json(json& j, const IdentityRow& r) {
  j = json{{"n", r.n},
           {"f32_at_minus_one", r.f32_at_minus_one},
           {"psi_at_minus_one", r.psi_at_minus_one},
           {"catalan_identity", r.catalan_identity},
           {"passed", r.passed}};
}

void from_json(const json& j, IdentityRow& r) {
  r.n = j.at("n").get<std::size_t>();
  r.f32_at_minus_one = j.at("f32_at_minus_one").get<Rational>();
  r.psi_at_minus_one = j.at("psi_at_minus_one").get<Rational>();
  r.catalan_identity = j.at("catalan_identity").get<bool>();
  r.passed = j.at("passed").get<bool>();
}

void to_json(json& j, const DiagonalOperator& op) {
  json tks = json::array();
  for (std::size_t k = 0; k < op.coefficients().size(); ++k) {
    const ParamPoly& tk = op.coefficient(k);
    const ParamAffine at_zero = evaluate(tk, Rational(0));
    tks.push_back({{"k", k}, {"poly", to_string(tk)}, {"at_zero", at_zero.to_string()}});
  }
  j = json{{"sequence", op.spec().label()}, {"order", op.order()}, {"tks", std::move(tks)}};
}

// ---------------------------------------------------------------------------
// text

std::string render_text(const LegendreExpansion& e) {
  std::ostringstream os;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e.coeffs()[k].is_zero()) continue;
    os << "Le_" << k << "  " << e.coeffs()[k] << "\n";
  }
  if (e.size() == 0) os << "0\n";
  return os.str();
}

std::string render_text(const DiagonalOperator& op) {
  std::ostringstream os;
  os << "sequence: " << op.spec().label() << "\n";
  for (std::size_t k = 0; k < op.coefficients().size(); ++k) {
    const ParamPoly& tk = op.coefficient(k);
    os << "T_" << std::left << std::setw(3) << k << " = " << to_string(tk) << "    T_" << k
       << "(0) = " << evaluate(tk, Rational(0)).to_string() << "\n";
  }
  return os.str();
}

std::string render_text(const RootCountReport& r) {
  std::ostringstream os;
  os << "poly:                " << to_string(r.poly) << "\n"
     << "distinct real roots: " << r.distinct_real_roots << "\n"
     << "squarefree degree:   " << r.degree_squarefree << "\n"
     << "hyperbolic:          " << (r.hyperbolic ? "true" : "false") << "\n";
  return os.str();
}

std::string render_text(const std::vector<IdentityRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(5) << "n" << std::setw(14) << "3F2(1)" << std::setw(14) << "Psi_n(-1)"
     << std::setw(10) << "catalan" << "status\n";
  for (const auto& r : rows) {
    os << std::setw(5) << r.n << std::setw(14) << r.f32_at_minus_one.to_string() << std::setw(14)
       << r.psi_at_minus_one.to_string() << std::setw(10) << (r.catalan_identity ? "0" : "nonzero")
       << (r.passed ? "pass" : "FAIL") << "\n";
  }
  return os.str();
}

std::string render_text(const CubicCertificate& c) {
  std::ostringstream os;
  os << "18018 * T[x^5 Le_3] even coefficients:\n";
  for (std::size_t k = 0; k < c.q_forms.size(); ++k) os << "  q_" << 2 * k << " = " << c.q_forms[k].to_string() << "\n";
  os << "23279256 * T[x^5 Le_5] even coefficients:\n";
  for (std::size_t k = 0; k < c.w_forms.size(); ++k) os << "  w_" << 2 * k << " = " << c.w_forms[k].to_string() << "\n";
  os << "q_0 >= 0  <=>  a - b >= " << c.dagger_bound << "\n"
     << "w_0 <= 0  <=>  a - b <= " << c.ddagger_bound << "\n"
     << "infeasible: " << (c.infeasible ? "true" : "false") << "\n";
  return os.str();
}

std::string render_text(const CounterexampleWitness& w) {
  std::ostringstream os;
  os << "triple:     (" << w.a << ", " << w.b << ", " << w.c << ")\n"
     << "test poly:  " << to_string(w.test_poly) << "\n"
     << "path:       " << to_string(w.path) << "\n"
     << "image:      " << to_string(w.image) << "\n"
     << render_text(w.report);
  return os.str();
}

std::string render_text(const LinearCertificate& c) {
  std::ostringstream os;
  os << "c:                     " << c.c << "\n"
     << "d_1, d_2, d_3:         " << c.d[0] << ", " << c.d[1] << ", " << c.d[2] << "\n"
     << "d_2^2 - d_3 d_1:       " << c.discriminant << "\n"
     << "truncated f~:          " << to_string(c.truncated) << "\n"
     << "L_1(0, f~'):           " << c.laguerre_l1 << "\n"
     << "Laguerre inequality:   " << (c.violated ? "violated" : "satisfied") << "\n";
  return os.str();
}

std::string render_text(const VerificationReport& r) {
  std::size_t width = 0;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << (c.status == CheckStatus::pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width))
       << c.name << "  " << c.actual;
    if (c.status == CheckStatus::fail) os << "  (expected " << c.expected << ")";
    os << "\n";
  }
  os << r.passed() << "/" << r.checks.size() << " checks passed\n";
  return os.str();
}

}  // namespace hlab
