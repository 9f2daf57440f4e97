#include "hlab/hlab.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "hlab/diagonal_operator.hpp"
#include "hlab/error.hpp"
#include "hlab/hypergeom.hpp"
#include "hlab/legendre.hpp"
#include "hlab/multiplier.hpp"
#include "hlab/poly_text.hpp"
#include "hlab/reports.hpp"
#include "hlab/root_reality.hpp"
#include "hlab/verify.hpp"

struct hlab_poly {
  hlab::Poly value;
};

struct hlab_doc {
  std::string json;
  std::string text;
  int verdict = 1;
};

namespace {

thread_local std::string last_error;

template <class F>
hlab_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return HLAB_OK;
  } catch (const hlab::ParseError& e) {
    last_error = e.what();
    return HLAB_ERR_PARSE;
  } catch (const hlab::CertificateError& e) {
    last_error = e.what();
    return HLAB_ERR_CERTIFICATE;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return HLAB_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    last_error = e.what();
    return HLAB_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HLAB_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return HLAB_ERR_INTERNAL;
  }
}

hlab_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return HLAB_ERR_NULL_ARGUMENT;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class T>
hlab_doc* make_doc(const T& value, std::string text, bool verdict) {
  hlab::json j = value;
  return new hlab_doc{j.dump(2), std::move(text), verdict ? 1 : 0};
}

hlab::Rational parse_or(const char* text, const hlab::Rational& fallback) {
  return text == nullptr ? fallback : hlab::Rational::parse(text);
}

hlab::LegendreExpansion parse_expansion(const std::string& csv) {
  std::vector<hlab::Rational> v;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const std::size_t end = comma == std::string::npos ? csv.size() : comma;
    v.push_back(hlab::Rational::parse(csv.substr(start, end - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return hlab::LegendreExpansion(std::move(v));
}

}  // namespace

extern "C" {

const char* hlab_last_error(void) { return last_error.c_str(); }

const char* hlab_status_string(hlab_status status) {
  switch (status) {
    case HLAB_OK: return "ok";
    case HLAB_ERR_NULL_ARGUMENT: return "null argument";
    case HLAB_ERR_PARSE: return "parse error";
    case HLAB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HLAB_ERR_CERTIFICATE: return "certificate error";
    case HLAB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* hlab_version(void) { return "1.0.0"; }

hlab_status hlab_poly_parse(const char* text, hlab_poly** out) {
  if (text == nullptr) return null_argument("text");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new hlab_poly{hlab::parse_poly(text)}; });
}

void hlab_poly_free(hlab_poly* poly) { delete poly; }

hlab_status hlab_poly_degree(const hlab_poly* poly, long* out) {
  if (poly == nullptr) return null_argument("poly");
  if (out == nullptr) return null_argument("out");
  const auto d = poly->value.degree();
  *out = d ? static_cast<long>(*d) : -1;
  return HLAB_OK;
}

hlab_status hlab_poly_to_text(const hlab_poly* poly, char** out) {
  if (poly == nullptr) return null_argument("poly");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = duplicate(hlab::to_string(poly->value)); });
}

hlab_status hlab_poly_eval(const hlab_poly* poly, const char* x, char** out) {
  if (poly == nullptr) return null_argument("poly");
  if (x == nullptr) return null_argument("x");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = duplicate(hlab::evaluate(poly->value, hlab::Rational::parse(x)).to_string()); });
}

void hlab_string_free(char* str) { std::free(str); }

const char* hlab_doc_json(const hlab_doc* doc) { return doc ? doc->json.c_str() : ""; }
const char* hlab_doc_text(const hlab_doc* doc) { return doc ? doc->text.c_str() : ""; }
int hlab_doc_verdict(const hlab_doc* doc) { return doc ? doc->verdict : 0; }
void hlab_doc_free(hlab_doc* doc) { delete doc; }

hlab_status hlab_expand(unsigned power, unsigned index, hlab_doc** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const hlab::Poly p = hlab::Poly::monomial(hlab::Rational(1), power) * hlab::legendre(index);
    const hlab::LegendreExpansion e = hlab::to_legendre(p);
    *out = make_doc(e, hlab::render_text(e), true);
  });
}

hlab_status hlab_op_coeffs(const char* sequence, unsigned order, const char* a, const char* b, const char* c,
                           hlab_doc** out) {
  if (sequence == nullptr) return null_argument("sequence");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    hlab::ParamPoly interp = hlab::parse_param_poly(sequence, 'k');
    // Substitute only the parameters that were given.
    std::vector<hlab::ParamAffine> coeffs;
    for (const auto& coeff : interp.coeffs()) {
      hlab::ParamAffine v(coeff.constant());
      const char* given[] = {a, b, c};
      const hlab::Param slots[] = {hlab::Param::a, hlab::Param::b, hlab::Param::c};
      for (int i = 0; i < 3; ++i) {
        const hlab::Rational& slot = coeff.coeff(slots[i]);
        if (given[i] != nullptr) {
          v += hlab::ParamAffine(slot * hlab::Rational::parse(given[i]));
        } else {
          v += hlab::ParamAffine::param(slots[i], slot);
        }
      }
      coeffs.push_back(v);
    }
    const auto spec = hlab::SequenceSpec::interpolated(hlab::ParamPoly(std::move(coeffs)), sequence);
    const hlab::DiagonalOperator op = hlab::operator_coefficients(spec, order);
    *out = make_doc(op, hlab::render_text(op), true);
  });
}

hlab_status hlab_hyperbolic(const hlab_poly* poly, hlab_doc** out) {
  if (poly == nullptr) return null_argument("poly");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const hlab::RootCountReport r = hlab::count_real_roots(poly->value);
    *out = make_doc(r, hlab::render_text(r), r.hyperbolic);
  });
}

hlab_status hlab_identities(unsigned max_n, hlab_doc** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const auto rows = hlab::identity_sweep(max_n);
    bool all = true;
    for (const auto& r : rows) all = all && r.passed;
    hlab::json j{{"max_n", max_n}, {"rows", rows}, {"all_passed", all}};
    *out = new hlab_doc{j.dump(2), hlab::render_text(rows), all ? 1 : 0};
  });
}

hlab_status hlab_cubic_cert(hlab_doc** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const hlab::CubicCertificate cert = hlab::cubic_certificate();
    *out = make_doc(cert, hlab::render_text(cert), cert.infeasible);
  });
}

hlab_status hlab_cubic_witness(const char* a, const char* b, const char* c, hlab_doc** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const hlab::Rational zero(0);
    const hlab::CounterexampleWitness w =
        hlab::cubic_counterexample(parse_or(a, zero), parse_or(b, zero), parse_or(c, zero));
    *out = make_doc(w, hlab::render_text(w), !w.report.hyperbolic);
  });
}

hlab_status hlab_linear_cert(const char* c, hlab_doc** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const hlab::LinearCertificate cert = hlab::linear_nonms_certificate(parse_or(c, hlab::Rational(0)));
    *out = make_doc(cert, hlab::render_text(cert), cert.violated);
  });
}

hlab_status hlab_verify(const hlab_verify_options* options, hlab_doc** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    hlab::VerifyOptions opt = hlab::VerifyOptions::from_environment();
    if (options != nullptr) {
      if (options->max_tk != 0) opt.max_tk = options->max_tk;
      if (options->max_identity_n != 0) opt.max_identity_n = options->max_identity_n;
      if (options->p1_expected != nullptr) opt.p1_expected = parse_expansion(options->p1_expected);
    }
    const hlab::VerificationReport report = hlab::run_verification(opt);
    *out = make_doc(report, hlab::render_text(report), report.ok());
  });
}

}  // extern "C"
