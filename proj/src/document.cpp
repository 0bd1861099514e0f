#include "cuspchar/document.hpp"

#include <sstream>
#include <string>

#include "cuspchar/errors.hpp"
#include "cuspchar/parser.hpp"

namespace cuspchar {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::int64_t parse_int(const std::string& text, const std::string& key) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw InputError("'" + key + "' expects an integer, got '" + text + "'");
  }
}

std::optional<Exponent> truncation_from(const json& j) {
  if (j.is_string() && j.get<std::string>() == "exact") return std::nullopt;
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return j.get<std::int64_t>();
  throw InputError("'truncation' must be a non-negative integer or \"exact\"");
}

InputDocument document_from_text(std::string_view text) {
  InputDocument doc;
  bool have_x = false;
  bool have_y = false;
  std::istringstream lines{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError("line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "x") {
      doc.x = parse_series_expression(value);
      have_x = true;
    } else if (key == "y") {
      doc.y = parse_series_expression(value);
      have_y = true;
    } else if (key == "truncation") {
      doc.truncation = value == "exact" ? std::nullopt : std::optional<Exponent>(parse_int(value, key));
    } else if (key == "max_steps") {
      doc.max_steps = parse_int(value, key);
    } else {
      throw InputError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!have_x || !have_y) throw InputError("input must define both x and y");
  return doc;
}

}  // namespace

json series_to_json(const TruncSeries& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(json::array({e, to_string(c)}));
  return terms;
}

TruncSeries series_from_json(const json& j) {
  if (j.is_string()) return parse_series_expression(j.get<std::string>());
  if (!j.is_array()) throw InputError("a series must be an expression string or a list of [exp, \"coef\"] pairs");
  TruncSeries::Terms terms;
  std::optional<Exponent> previous;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer()) {
      throw InputError("term list entries must be [exp, \"coef\"]");
    }
    const auto e = pair[0].get<Exponent>();
    if (e < 0) throw InputError("negative exponent in term list");
    if (previous && e <= *previous) throw InputError("term list exponents must be strictly increasing");
    previous = e;
    const json& c = pair[1];
    Rational coef;
    if (c.is_string()) {
      coef = parse_rational(c.get<std::string>());
    } else if (c.is_number_integer()) {
      coef = parse_rational(c.dump());
    } else {
      throw InputError("coefficients must be exact: \"num/den\" or an integer, never a float");
    }
    terms.emplace(e, std::move(coef));
  }
  return TruncSeries(std::move(terms));
}

InputDocument document_from_json(const json& j) {
  if (!j.is_object()) throw InputError("input document must be a JSON object");
  if (!j.contains("x") || !j.contains("y")) throw InputError("input must define both x and y");
  InputDocument doc;
  doc.x = series_from_json(j.at("x"));
  doc.y = series_from_json(j.at("y"));
  if (j.contains("truncation")) doc.truncation = truncation_from(j.at("truncation"));
  if (j.contains("max_steps")) {
    if (!j.at("max_steps").is_number_integer()) throw InputError("'max_steps' must be an integer");
    doc.max_steps = j.at("max_steps").get<std::int64_t>();
  }
  if (j.contains("coeffs")) doc.report_coefficients = j.at("coeffs").get<bool>();
  if (j.contains("format")) {
    const auto f = j.at("format").get<std::string>();
    if (f == "json") {
      doc.format = OutputFormat::Json;
    } else if (f == "human") {
      doc.format = OutputFormat::Human;
    } else {
      throw InputError("'format' must be \"human\" or \"json\"");
    }
  }
  return doc;
}

json document_to_json(const InputDocument& doc) {
  json j;
  j["x"] = series_to_json(doc.x);
  j["y"] = series_to_json(doc.y);
  j["truncation"] = doc.truncation ? json(*doc.truncation) : json("exact");
  if (doc.max_steps) j["max_steps"] = *doc.max_steps;
  j["coeffs"] = doc.report_coefficients;
  j["format"] = doc.format == OutputFormat::Json ? "json" : "human";
  return j;
}

InputDocument parse_document(std::string_view text) {
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    json j;
    try {
      j = json::parse(body);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("invalid JSON: ") + e.what());
    }
    try {
      return document_from_json(j);
    } catch (const json::exception& e) {
      throw InputError(std::string("malformed input document: ") + e.what());
    }
  }
  return document_from_text(body);
}

std::pair<TruncSeries, TruncSeries> effective_series(const InputDocument& doc) {
  if (!doc.truncation) return {doc.x, doc.y};
  return {truncate(doc.x, *doc.truncation), truncate(doc.y, *doc.truncation)};
}

}  // namespace cuspchar
