#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "posring/laurent.hpp"
#include "posring/nxsolve.hpp"
#include "posring/wreath.hpp"

namespace posring {

struct EquationProblem {
  std::vector<IntPoly> hs;
};

struct WreathProblem {
  GeneratorSet gens;
};

using ProblemFile = std::variant<EquationProblem, WreathProblem>;

/// Parses a JSON problem file, or the text format (one line of ascending
/// integer coefficients per h_i). Throws Errc::schema with the offending
/// location in the message.
ProblemFile parse_input(const std::string& bytes);

/// Accepts [c0, c1, ...] or {"coeffs": [...], "lowest": k}; coefficients may
/// be JSON integers or decimal strings. `where` prefixes error messages.
LaurentPoly parse_poly(const nlohmann::json& j, const std::string& where);
BigInt parse_bigint(const nlohmann::json& j, const std::string& where);
BigRat parse_bigrat(const nlohmann::json& j, const std::string& where);

/// Numbers inside the 53-bit safe range, decimal strings beyond it.
nlohmann::json to_json(const BigInt& v);
/// Plain coefficient array.
nlohmann::json to_json(const IntPoly& p);
/// {"coeffs": [...], "lowest": k}
nlohmann::json to_json(const LaurentPoly& p);
/// Rational and exact-root samples become strings such as "3/2"; other
/// roots become {"lo", "hi", "owners"}.
nlohmann::json to_json(const SignVector& v);
nlohmann::json to_json(const SignCertificate& c);

SignVector sign_vector_from_json(const nlohmann::json& j);
std::vector<IntPoly> poly_list_from_json(const nlohmann::json& j, const std::string& where);

enum class OutputFormat { json, text };

/// Serializes a report; the text form lists top-level fields one per line.
std::string emit_output(const nlohmann::json& report, OutputFormat format);

}  // namespace posring
