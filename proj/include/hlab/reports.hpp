#pragma once

// JSON and plain-text renderings of every result type. Rationals are always
// written as exact "p/q" strings, polynomials in the text syntax of
// poly_text.hpp.

#include <string>
#include <vector>

#include <json.hpp>

#include "hlab/diagonal_operator.hpp"
#include "hlab/hypergeom.hpp"
#include "hlab/legendre.hpp"
#include "hlab/multiplier.hpp"
#include "hlab/root_reality.hpp"
#include "hlab/verify.hpp"

namespace hlab {

using nlohmann::json;

void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);
void to_json(json& j, const Poly& p);
void from_json(const json& j, Poly& p);
void to_json(json& j, const ParamPoly& p);
void from_json(const json& j, ParamPoly& p);
void to_json(json& j, const ParamAffine& a);
void from_json(const json& j, ParamAffine& a);
void to_json(json& j, const LegendreExpansion& e);
void from_json(const json& j, LegendreExpansion& e);
void to_json(json& j, const RootCountReport& r);
void from_json(const json& j, RootCountReport& r);
void to_json(json& j, const Check& c);
void from_json(const json& j, Check& c);
void to_json(json& j, const VerificationReport& r);
void from_json(const json& j, VerificationReport& r);
void to_json(json& j, const CubicCertificate& c);
void from_json(const json& j, CubicCertificate& c);
void to_json(json& j, const CounterexampleWitness& w);
void from_json(const json& j, CounterexampleWitness& w);
void to_json(json& j, const LinearCertificate& c);
void from_json(const json& j, LinearCertificate& c);
void to_json(json& j, const IdentityRow& r);
void from_json(const json& j, IdentityRow& r);
void to_json(json& j, const DiagonalOperator& op);

std::string render_text(const LegendreExpansion& e);
std::string render_text(const DiagonalOperator& op);
std::string render_text(const RootCountReport& r);
std::string render_text(const std::vector<IdentityRow>& rows);
std::string render_text(const CubicCertificate& c);
std::string render_text(const CounterexampleWitness& w);
std::string render_text(const LinearCertificate& c);
std::string render_text(const VerificationReport& r);

}  // namespace hlab
