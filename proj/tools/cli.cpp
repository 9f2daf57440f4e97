#include "cli.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "hlab/hlab.h"

namespace hlab::cli {

namespace {

enum class Format { json, text };

struct OutputFlags {
  bool json = false;
  bool text = false;

  Format resolve(Format fallback) const {
    if (json) return Format::json;
    if (text) return Format::text;
    return fallback;
  }
};

void add_format_flags(CLI::App* cmd, OutputFlags& flags) {
  auto* j = cmd->add_flag("--json", flags.json, "Emit JSON");
  auto* t = cmd->add_flag("--text", flags.text, "Emit aligned text");
  j->excludes(t);
}

unsigned default_order(unsigned fallback) {
  if (const char* env = std::getenv("HLAB_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return fallback;
}

/// "a=1/2,b=3" -> {a: "1/2", b: "3"}; unknown keys are a usage error.
std::map<char, std::string> parse_params(const std::string& spec) {
  std::map<char, std::string> out;
  std::size_t start = 0;
  while (start < spec.size()) {
    std::size_t comma = spec.find(',', start);
    if (comma == std::string::npos) comma = spec.size();
    const std::string item = spec.substr(start, comma - start);
    const auto eq = item.find('=');
    if (eq != 1 || (item[0] != 'a' && item[0] != 'b' && item[0] != 'c') || item.size() < 3) {
      throw CLI::ValidationError("--params", "expected a=<rational>,b=<rational>,c=<rational>, got '" + item + "'");
    }
    out[item[0]] = item.substr(2);
    start = comma + 1;
  }
  return out;
}

class DocGuard {
 public:
  ~DocGuard() { hlab_doc_free(doc); }
  hlab_doc* doc = nullptr;
};

int emit(hlab_status status, const DocGuard& result, Format format, const CLI::App& cmd, std::ostream& out,
         std::ostream& err) {
  switch (status) {
    case HLAB_OK:
      break;
    case HLAB_ERR_PARSE:
    case HLAB_ERR_INVALID_ARGUMENT:
    case HLAB_ERR_NULL_ARGUMENT:
      err << "error: " << hlab_last_error() << "\n\n" << cmd.help();
      return kExitUsage;
    default:
      err << "error: " << hlab_last_error() << "\n";
      return kExitNegative;
  }
  if (format == Format::json) {
    out << hlab_doc_json(result.doc) << "\n";
  } else {
    out << hlab_doc_text(result.doc);
  }
  return hlab_doc_verdict(result.doc) == 1 ? kExitOk : kExitNegative;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Legendre multiplier sequence computations"};
  app.name("hlab");
  app.require_subcommand(1);

  // expand
  unsigned power = 0;
  unsigned index = 0;
  OutputFlags expand_fmt;
  auto* expand = app.add_subcommand("expand", "Legendre expansion of x^power * Le_index");
  expand->add_option("--power", power, "Power of x")->required();
  expand->add_option("--index", index, "Legendre index")->required();
  add_format_flags(expand, expand_fmt);

  // op-coeffs
  std::string seq;
  unsigned order = 0;
  std::string params;
  OutputFlags op_fmt;
  auto* op = app.add_subcommand("op-coeffs", "Coefficient polynomials T_k of the Legendre-diagonal operator");
  op->add_option("--seq", seq, "Sequence as a polynomial in k, e.g. \"k^3 + a*k^2 + b*k + c\"")->required();
  op->add_option("--order", order, "Highest k to compute")->required();
  op->add_option("--params", params, "Numeric parameters, e.g. a=1/2,b=0,c=1");
  add_format_flags(op, op_fmt);

  // hyperbolic
  std::string poly_text;
  OutputFlags hyp_fmt;
  auto* hyp = app.add_subcommand("hyperbolic", "Sturm count of distinct real roots; exit 0 iff all zeros are real");
  hyp->add_option("--poly", poly_text, "Polynomial, e.g. \"x^2 - 1\"")->required();
  add_format_flags(hyp, hyp_fmt);

  // identities
  unsigned max_n = 0;
  OutputFlags id_fmt;
  auto* ids = app.add_subcommand("identities", "Terminating 3F2, Psi_n and Catalan identities for 1 <= n <= N");
  ids->add_option("--max-n", max_n, "Largest n (default 50, or HLAB_MAX_ORDER)");
  add_format_flags(ids, id_fmt);

  // cubic-cert
  OutputFlags cert_fmt;
  auto* cert = app.add_subcommand("cubic-cert", "Symbolic certificate for k^3 + a k^2 + b k + c");
  add_format_flags(cert, cert_fmt);

  // cubic-witness
  std::string wa = "0", wb = "0", wc = "0";
  OutputFlags wit_fmt;
  auto* wit = app.add_subcommand("cubic-witness", "Test polynomial image with non-real zeros at a numeric triple");
  wit->add_option("--a", wa, "Rational a")->required();
  wit->add_option("--b", wb, "Rational b")->required();
  wit->add_option("--c", wc, "Rational c")->required();
  add_format_flags(wit, wit_fmt);

  // linear-cert
  std::string lc = "0";
  OutputFlags lin_fmt;
  auto* lin = app.add_subcommand("linear-cert", "Laguerre-inequality obstruction for k + c");
  lin->add_option("--c", lc, "Rational c")->required();
  add_format_flags(lin, lin_fmt);

  // verify
  unsigned max_tk = 0;
  unsigned verify_max_n = 0;
  std::string p1_expected;
  OutputFlags ver_fmt;
  auto* ver = app.add_subcommand("verify", "Run every reproduction check");
  ver->add_option("--max-tk", max_tk, "Number of T_k(0) rows (default 24, or HLAB_MAX_ORDER)");
  ver->add_option("--max-n", verify_max_n, "Largest n for the identities (default 50, or HLAB_MAX_ORDER)");
  ver->add_option("--p1-expected", p1_expected,
                  "Comma-separated expected Legendre coefficients of x^5 Le_3 (overrides the reference values)");
  add_format_flags(ver, ver_fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  DocGuard result;
  if (expand->parsed()) {
    return emit(hlab_expand(power, index, &result.doc), result, expand_fmt.resolve(Format::json), *expand, out, err);
  }
  if (op->parsed()) {
    std::map<char, std::string> given;
    try {
      if (!params.empty()) given = parse_params(params);
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n\n" << op->help();
      return kExitUsage;
    }
    auto slot = [&given](char key) -> const char* {
      auto it = given.find(key);
      return it == given.end() ? nullptr : it->second.c_str();
    };
    return emit(hlab_op_coeffs(seq.c_str(), order, slot('a'), slot('b'), slot('c'), &result.doc), result,
                op_fmt.resolve(Format::text), *op, out, err);
  }
  if (hyp->parsed()) {
    hlab_poly* poly = nullptr;
    if (hlab_poly_parse(poly_text.c_str(), &poly) != HLAB_OK) {
      err << "error: " << hlab_last_error() << "\n\n" << hyp->help();
      return kExitUsage;
    }
    const hlab_status st = hlab_hyperbolic(poly, &result.doc);
    hlab_poly_free(poly);
    return emit(st, result, hyp_fmt.resolve(Format::json), *hyp, out, err);
  }
  if (ids->parsed()) {
    const unsigned n = max_n != 0 ? max_n : default_order(50);
    return emit(hlab_identities(n, &result.doc), result, id_fmt.resolve(Format::json), *ids, out, err);
  }
  if (cert->parsed()) {
    return emit(hlab_cubic_cert(&result.doc), result, cert_fmt.resolve(Format::text), *cert, out, err);
  }
  if (wit->parsed()) {
    return emit(hlab_cubic_witness(wa.c_str(), wb.c_str(), wc.c_str(), &result.doc), result,
                wit_fmt.resolve(Format::text), *wit, out, err);
  }
  if (lin->parsed()) {
    return emit(hlab_linear_cert(lc.c_str(), &result.doc), result, lin_fmt.resolve(Format::text), *lin, out, err);
  }
  if (ver->parsed()) {
    hlab_verify_options options{max_tk, verify_max_n, p1_expected.empty() ? nullptr : p1_expected.c_str()};
    return emit(hlab_verify(&options, &result.doc), result, ver_fmt.resolve(Format::text), *ver, out, err);
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace hlab::cli
