#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "frl/eigenfunction.hpp"
#include "frl/errors.hpp"

namespace frl {

namespace {

using nlohmann::json;

double parse_number(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw DomainError("coeffs: cannot parse \"" + text + "\" as a number");
  return value;
}

// "p/q", a decimal string, or a JSON number
double parse_coefficient(const json& item) {
  if (item.is_number()) return item.get<double>();
  if (!item.is_string()) throw DomainError("coeffs: entries must be numbers or strings");
  const auto text = item.get<std::string>();
  const auto slash = text.find('/');
  if (slash == std::string::npos) return parse_number(text);
  const double q = parse_number(text.substr(slash + 1));
  if (q == 0.0) throw DomainError("coeffs: zero denominator in \"" + text + "\"");
  return parse_number(text.substr(0, slash)) / q;
}

}  // namespace

EigenPlusFunction parse_coefficient_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("coefficient file: ") + e.what());
  }
  if (!doc.is_object()) throw DomainError("coefficient file: top level must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "coeffs" && key != "basis" && key != "normalized")
      throw DomainError("coefficient file: unknown key \"" + key + "\"");
  }
  if (!doc.contains("coeffs") || !doc["coeffs"].is_array() || doc["coeffs"].empty())
    throw DomainError("coeffs: a non-empty array is required");
  std::vector<double> coeffs;
  for (const auto& item : doc["coeffs"]) coeffs.push_back(parse_coefficient(item));

  CoefficientBasis basis = CoefficientBasis::UnnormalizedH4n;
  if (doc.contains("basis")) {
    if (!doc["basis"].is_string()) throw DomainError("basis: must be a string");
    const auto name = doc["basis"].get<std::string>();
    if (name == "psi") {
      basis = CoefficientBasis::Psi;
    } else if (name != "unnormalized-H4n") {
      throw DomainError("basis: expected \"unnormalized-H4n\" or \"psi\", got \"" + name + "\"");
    }
  }
  bool normalized = false;
  if (doc.contains("normalized")) {
    if (!doc["normalized"].is_boolean()) throw DomainError("normalized: must be a boolean");
    normalized = doc["normalized"].get<bool>();
  }
  return basis == CoefficientBasis::Psi ? EigenPlusFunction::from_psi(coeffs, normalized)
                                        : EigenPlusFunction(std::move(coeffs), normalized);
}

EigenPlusFunction load_coefficient_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("coefficient file: cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_coefficient_json(buffer.str());
}

std::string coefficient_json(const EigenPlusFunction& f) {
  json doc;
  doc["basis"] = "unnormalized-H4n";
  doc["coeffs"] = f.coeffs();
  doc["normalized"] = f.normalized();
  return doc.dump(2);
}

}  // namespace frl
