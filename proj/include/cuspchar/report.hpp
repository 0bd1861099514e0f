#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cuspchar/newton_puiseux.hpp"
#include "cuspchar/pk_engine.hpp"
#include "cuspchar/status.hpp"

namespace cuspchar {

/// Per-step diagnostics of the P_k engine (k >= 1).
struct StepRow {
  std::int64_t k = 0;
  Exponent order = 0;
  Exponent rk = 0;
  Rational leading;
  Rational c_tilde;
  friend bool operator==(const StepRow&, const StepRow&) = default;
};

struct Report {
  std::string engine;  // "pk" or "oracle"
  Status status = status::Ok{};
  bool swapped = false;
  Exponent p = 0;
  Exponent q = 0;
  Exponent running_gcd = 0;
  std::vector<Exponent> r_sequence;
  std::optional<CharSequence> char_seq;
  std::vector<Exponent> inessential;
  std::vector<std::pair<Exponent, Rational>> coefficients;  // (s, c~_s) over r_sequence
  std::vector<StepRow> steps;
  friend bool operator==(const Report&, const Report&) = default;
};

Report make_report(const Parametrization& par, const EngineResult& result);
Report make_report(const Parametrization& par, const OracleResult& result);

nlohmann::json status_to_json(const Status& s);
Status status_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const Report& r);
/// Inverse of report_to_json. Throws InputError on a malformed report.
Report report_from_json(const nlohmann::json& j);

/// Multi-line text; coefficients only when `coefficients` is set.
std::string render_human(const Report& r, bool coefficients);

/// One row of the leading(P_k) = prod(r_k - r_j) p^{k-1} c~ a0^{2k-1} check.
struct Lemma2Row {
  std::int64_t k = 0;
  Exponent rk = 0;
  Rational leading;    // from P_k
  Rational predicted;  // from the oracle's c~_{r_k}
  bool holds = false;
  friend bool operator==(const Lemma2Row&, const Lemma2Row&) = default;
};

struct CheckReport {
  Report engine;
  Report oracle;
  bool agree = false;
  std::string mismatch;  // first disagreeing quantity, empty when agree
  std::vector<Lemma2Row> lemma2;
  std::optional<double> engine_ms;
  std::optional<double> oracle_ms;
};

nlohmann::json check_report_to_json(const CheckReport& r);
std::string render_human(const CheckReport& r, bool coefficients);

}  // namespace cuspchar
