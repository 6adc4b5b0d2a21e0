#include "posring/io.hpp"

#include <sstream>

namespace posring {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(Errc::schema, where + ": " + what);
}

bool valid_integer_text(const std::string& s) {
  std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') return false;
  }
  return true;
}

const BigInt kSafe = (BigInt(1) << 53) - 1;

std::vector<IntPoly> parse_text(const std::string& bytes) {
  std::vector<IntPoly> hs;
  std::istringstream in(bytes);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<BigInt> coeffs;
    std::string w;
    while (words >> w) {
      if (!valid_integer_text(w)) schema_error("line " + std::to_string(lineno), "not an integer: '" + w + "'");
      coeffs.emplace_back(w[0] == '+' ? w.substr(1) : w);
    }
    if (coeffs.empty()) continue;
    hs.emplace_back(std::move(coeffs));
  }
  if (hs.empty()) schema_error("input", "no polynomials");
  return hs;
}

}  // namespace

BigInt parse_bigint(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
    return BigInt(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (!valid_integer_text(s)) schema_error(where, "not a decimal integer: \"" + s + "\"");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  }
  schema_error(where, "expected an integer or a decimal string");
}

BigRat parse_bigrat(const json& j, const std::string& where) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(parse_bigint(j, where));
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den)) schema_error(where, "not a rational: \"" + s + "\"");
    BigInt d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0) schema_error(where, "zero denominator");
    return make_rat(BigInt(num[0] == '+' ? num.substr(1) : num), d);
  }
  return BigRat(parse_bigint(j, where));
}

LaurentPoly parse_poly(const json& j, const std::string& where) {
  const json* coeffs = &j;
  long lowest = 0;
  if (j.is_object()) {
    if (!j.contains("coeffs")) schema_error(where, "missing \"coeffs\"");
    for (const auto& [key, _] : j.items()) {
      if (key != "coeffs" && key != "lowest") schema_error(where, "unknown field \"" + key + "\"");
    }
    coeffs = &j["coeffs"];
    if (j.contains("lowest")) {
      if (!j["lowest"].is_number_integer()) schema_error(where + ".lowest", "expected an integer");
      lowest = j["lowest"].get<long>();
    }
  }
  if (!coeffs->is_array()) schema_error(where, "expected a coefficient array");
  std::vector<BigInt> c;
  for (std::size_t k = 0; k < coeffs->size(); ++k) {
    c.push_back(parse_bigint((*coeffs)[k], where + ".coeffs[" + std::to_string(k) + "]"));
  }
  return LaurentPoly::from_coeffs(std::move(c), lowest);
}

std::vector<IntPoly> poly_list_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of polynomials");
  std::vector<IntPoly> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string at = where + "[" + std::to_string(k) + "]";
    const json& p = j[k];
    if (p.is_object() && p.contains("lowest") && p["lowest"].is_number_integer() && p["lowest"].get<long>() < 0) {
      schema_error(at + ".lowest", "negative exponents are not allowed here");
    }
    out.push_back(to_polynomial(parse_poly(p, at)));
  }
  return out;
}

ProblemFile parse_input(const std::string& bytes) {
  auto first = bytes.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) schema_error("input", "empty input");
  if (bytes[first] != '{') return EquationProblem{parse_text(bytes)};

  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    schema_error("input", std::string("malformed JSON: ") + e.what());
  }
  const bool eq = doc.contains("equation");
  const bool wr = doc.contains("wreath");
  if (eq == wr) schema_error("input", "expected exactly one of \"equation\" or \"wreath\"");

  if (eq) {
    const json& body = doc["equation"];
    if (!body.is_object() || !body.contains("h")) schema_error("equation", "missing \"h\"");
    EquationProblem p{poly_list_from_json(body["h"], "equation.h")};
    if (p.hs.empty()) schema_error("equation.h", "empty polynomial list");
    return p;
  }

  const json& body = doc["wreath"];
  if (!body.is_object() || !body.contains("generators")) schema_error("wreath", "missing \"generators\"");
  const json& gens = body["generators"];
  if (!gens.is_array()) schema_error("wreath.generators", "expected an array");
  WreathProblem p;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::string at = "wreath.generators[" + std::to_string(k) + "]";
    const json& g = gens[k];
    if (!g.is_object() || !g.contains("H") || !g.contains("b")) schema_error(at, "expected {\"H\": poly, \"b\": 1|-1}");
    if (!g["b"].is_number_integer()) schema_error(at + ".b", "expected 1 or -1");
    long b = g["b"].get<long>();
    if (b != 1 && b != -1) schema_error(at + ".b", "expected 1 or -1, got " + std::to_string(b));
    (b == 1 ? p.gens.plus : p.gens.minus).push_back(parse_poly(g["H"], at + ".H"));
  }
  if (p.gens.size() == 0) schema_error("wreath.generators", "no generators");
  return p;
}

json to_json(const BigInt& v) {
  if (abs(v) <= kSafe) return json(v.get_si());
  return json(v.get_str());
}

json to_json(const IntPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

json to_json(const LaurentPoly& p) {
  return json{{"coeffs", to_json(p.body())}, {"lowest", p.lowest()}};
}

json to_json(const SignVector& v) {
  json out;
  if (const auto* t = std::get_if<BigRat>(&v.sample)) {
    out["sample"] = t->get_str();
  } else if (const auto& iv = std::get<IsolatingInterval>(v.sample); iv.is_exact()) {
    out["sample"] = iv.lo.get_str();
  } else {
    json owners = json::array();
    for (auto o : iv.owners) owners.push_back(o);
    out["sample"] = json{{"lo", iv.lo.get_str()}, {"hi", iv.hi.get_str()}, {"owners", owners}};
  }
  out["signs"] = v.signs;
  return out;
}

json to_json(const SignCertificate& c) {
  json out = to_json(c.vector);
  json reduced = json::array();
  for (const auto& h : c.normalization.hs) reduced.push_back(to_json(h));
  out["reduced_h"] = reduced;
  out["kept"] = c.kept;
  return out;
}

SignVector sign_vector_from_json(const json& j) {
  if (!j.is_object() || !j.contains("sample") || !j.contains("signs")) schema_error("certificate", "missing sample or signs");
  SignVector v;
  const json& s = j["sample"];
  if (s.is_object()) {
    IsolatingInterval iv;
    iv.lo = parse_bigrat(s.at("lo"), "certificate.sample.lo");
    iv.hi = parse_bigrat(s.at("hi"), "certificate.sample.hi");
    for (const auto& o : s.at("owners")) iv.owners.push_back(o.get<std::size_t>());
    v.sample = iv;
  } else {
    v.sample = parse_bigrat(s, "certificate.sample");
  }
  for (const auto& x : j["signs"]) v.signs.push_back(x.get<int>());
  return v;
}

std::string emit_output(const json& report, OutputFormat format) {
  if (format == OutputFormat::json) return report.dump(2) + "\n";
  std::ostringstream os;
  for (const auto& [key, value] : report.items()) {
    os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  return os.str();
}

}  // namespace posring
