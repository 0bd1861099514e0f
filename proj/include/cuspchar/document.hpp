#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include <json.hpp>

#include "cuspchar/series.hpp"

namespace cuspchar {

enum class OutputFormat { Human, Json };

/// What the CLI reads: the two series plus run options.
///
/// Accepted encodings:
///   - JSON: {"x": <series>, "y": <series>, "truncation": int|"exact",
///            "max_steps": int, "coeffs": bool, "format": "human"|"json"}
///     where <series> is an expression string or [[exp, "coef"], ...]
///     with strictly increasing exponents.
///   - Plain text: lines "x = <expr>", "y = <expr>", optional
///     "truncation = <n>|exact" and "max_steps = <n>"; '#' starts a comment.
struct InputDocument {
  TruncSeries x;
  TruncSeries y;
  std::optional<Exponent> truncation;  // nullopt: exact
  std::optional<std::int64_t> max_steps;
  bool report_coefficients = false;
  OutputFormat format = OutputFormat::Human;
};

/// Throws InputError, SyntaxError or ZeroDenominator.
InputDocument parse_document(std::string_view text);

InputDocument document_from_json(const nlohmann::json& j);
nlohmann::json document_to_json(const InputDocument& doc);

/// [[exp, "coef"], ...] in increasing exponent order.
nlohmann::json series_to_json(const TruncSeries& f);
/// Accepts an expression string or a term list.
TruncSeries series_from_json(const nlohmann::json& j);

/// x and y with the document's truncation applied.
std::pair<TruncSeries, TruncSeries> effective_series(const InputDocument& doc);

}  // namespace cuspchar
