#include "cuspchar/commands.hpp"

#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cuspchar/errors.hpp"

namespace cuspchar {

using nlohmann::json;

namespace {

Parametrization parametrization_of(const InputDocument& doc) {
  const auto [x, y] = effective_series(doc);
  return validate(x, y);
}

template <class F>
auto timed(F&& f, double& ms) {
  const auto start = std::chrono::steady_clock::now();
  auto value = f();
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return value;
}

bool statuses_consistent(const Status& a, const Status& b) {
  if (a == b) return true;
  // The oracle cannot certify non-injectivity from a truncated expansion; it
  // agrees when it stalls on the same covering degree.
  const auto* ni = std::get_if<status::NonInjective>(&a);
  const auto* inc = std::get_if<status::IncompleteSequence>(&b);
  return ni && inc && ni->covering_degree == inc->running_gcd;
}

}  // namespace

Report cmd_analyze(const InputDocument& doc) {
  const Parametrization par = parametrization_of(doc);
  return make_report(par, run_algorithm(par, doc.max_steps));
}

Report cmd_oracle(const InputDocument& doc, const OracleOptions& options) {
  const Parametrization par = parametrization_of(doc);
  return make_report(par, run_oracle(par, options));
}

std::string first_mismatch(const Report& engine, const Report& oracle) {
  if (!statuses_consistent(engine.status, oracle.status)) {
    return "status (" + describe(engine.status) + " vs " + describe(oracle.status) + ")";
  }
  if (engine.p != oracle.p || engine.q != oracle.q || engine.swapped != oracle.swapped) return "orders";
  const bool stalled = std::holds_alternative<status::IncompleteSequence>(oracle.status);
  if (!stalled && engine.r_sequence != oracle.r_sequence) return "r_sequence";
  if (engine.char_seq != oracle.char_seq) return "char_seq";
  if (!stalled && engine.coefficients != oracle.coefficients) return "coefficients";
  if (engine.running_gcd != oracle.running_gcd) return "running_gcd";
  return {};
}

CheckReport cmd_check(const InputDocument& doc, bool time, const OracleOptions& options) {
  const Parametrization par = parametrization_of(doc);

  double engine_ms = 0;
  double oracle_ms = 0;
  auto oracle_future = std::async(std::launch::async, [&] { return timed([&] { return run_oracle(par, options); }, oracle_ms); });
  const EngineResult engine = timed([&] { return run_algorithm(par, doc.max_steps); }, engine_ms);
  const OracleResult oracle = oracle_future.get();

  CheckReport report;
  report.engine = make_report(par, engine);
  report.oracle = make_report(par, oracle);
  if (time) {
    report.engine_ms = engine_ms;
    report.oracle_ms = oracle_ms;
  }

  std::vector<Exponent> earlier;
  for (const auto& trace : engine.traces) {
    if (trace.k >= 1) {
      const auto it = oracle.coefficients.find(trace.rk);
      if (it == oracle.coefficients.end()) break;
      Rational predicted = it->second * pow(Rational(static_cast<long>(par.p)), trace.k - 1) *
                           pow(par.a0, 2 * trace.k - 1);
      for (const Exponent r : earlier) predicted *= Rational(static_cast<long>(trace.rk - r));
      report.lemma2.push_back({trace.k, trace.rk, trace.leading, predicted, predicted == trace.leading});
    }
    earlier.push_back(trace.rk);
  }

  report.mismatch = first_mismatch(report.engine, report.oracle);
  if (report.mismatch.empty()) {
    for (const auto& row : report.lemma2) {
      if (!row.holds) {
        report.mismatch = "Lemma 2 identity at k = " + std::to_string(row.k);
        break;
      }
    }
  }
  report.agree = report.mismatch.empty();
  return report;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characteristic sequence of a cuspidal plane curve germ t -> (x(t), y(t))", "cusp-char"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format;
  std::string truncation;
  std::int64_t max_steps = 0;
  bool coeffs = false;
  bool time = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", input, "Input file, or - for stdin")->capture_default_str();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}));
    sub->add_option("--truncation", truncation, "Truncate both series at degree N, or 'exact'");
    sub->add_option("--max-steps", max_steps, "Maximal number of P_k steps")->check(CLI::PositiveNumber);
    sub->add_flag("--coeffs", coeffs, "Report normalized Puiseux coefficients");
  };
  CLI::App* analyze = app.add_subcommand("analyze", "Run the P_k recursion");
  CLI::App* oracle = app.add_subcommand("oracle", "Run the Newton-Puiseux expansion");
  CLI::App* check = app.add_subcommand("check", "Run both and compare");
  add_common(analyze);
  add_common(oracle);
  add_common(check);
  check->add_flag("--time", time, "Report wall-clock time of each engine");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "cusp-char: " << e.what() << '\n';
    return 1;
  }

  OutputFormat out_format = format == "json" ? OutputFormat::Json : OutputFormat::Human;
  try {
    std::string text;
    if (input == "-") {
      text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
      std::ifstream file(input);
      if (!file) throw InputError("cannot open '" + input + "'");
      text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    InputDocument doc = parse_document(text);
    if (!truncation.empty()) {
      if (truncation == "exact") {
        doc.truncation.reset();
      } else {
        try {
          std::size_t used = 0;
          const long long k = std::stoll(truncation, &used);
          if (used != truncation.size() || k < 0) throw std::invalid_argument(truncation);
          doc.truncation = k;
        } catch (const std::logic_error&) {
          throw InputError("--truncation expects a non-negative integer or 'exact'");
        }
      }
    }
    if (max_steps > 0) doc.max_steps = max_steps;
    if (coeffs) doc.report_coefficients = true;
    if (!format.empty()) doc.format = format == "json" ? OutputFormat::Json : OutputFormat::Human;
    out_format = doc.format;
    const bool as_json = doc.format == OutputFormat::Json;

    if (check->parsed()) {
      const CheckReport report = cmd_check(doc, time);
      out << (as_json ? check_report_to_json(report).dump(2) + "\n" : render_human(report, doc.report_coefficients));
      return report.agree ? 0 : 4;
    }
    const Report report = analyze->parsed() ? cmd_analyze(doc) : cmd_oracle(doc);
    out << (as_json ? report_to_json(report).dump(2) + "\n" : render_human(report, doc.report_coefficients));
    return exit_code(report.status);
  } catch (const Error& e) {
    if (out_format == OutputFormat::Json) {
      out << json{{"status", {{"kind", "InputError"}, {"message", e.what()}}}}.dump(2) << '\n';
    }
    err << "cusp-char: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cuspchar
