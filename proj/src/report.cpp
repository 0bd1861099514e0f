#include "cuspchar/report.hpp"

#include <sstream>

#include "cuspchar/errors.hpp"

namespace cuspchar {

using nlohmann::json;

namespace {

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

json char_seq_to_json(const std::optional<CharSequence>& cs) {
  if (!cs) return nullptr;
  return {{"text", cs->to_string()}, {"p", cs->p}, {"q", cs->q_list}, {"gcd_chain", cs->gcd_chain}};
}

std::optional<CharSequence> char_seq_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  CharSequence cs;
  cs.p = j.at("p").get<Exponent>();
  cs.q_list = j.at("q").get<std::vector<Exponent>>();
  cs.gcd_chain = j.at("gcd_chain").get<std::vector<Exponent>>();
  return cs;
}

}  // namespace

Report make_report(const Parametrization& par, const EngineResult& result) {
  Report r;
  r.engine = "pk";
  r.status = result.status;
  r.swapped = par.swapped;
  r.p = par.p;
  r.q = par.q;
  r.running_gcd = result.running_gcd;
  r.r_sequence = result.r_sequence;
  r.char_seq = result.char_seq;
  r.inessential = result.inessential;
  for (const auto& t : result.traces) {
    r.coefficients.emplace_back(t.rk, t.c_tilde);
    if (t.k >= 1) r.steps.push_back({t.k, t.order, t.rk, t.leading, t.c_tilde});
  }
  return r;
}

Report make_report(const Parametrization& par, const OracleResult& result) {
  Report r;
  r.engine = "oracle";
  r.status = result.status;
  r.swapped = par.swapped;
  r.p = par.p;
  r.q = par.q;
  r.running_gcd = result.running_gcd;
  r.r_sequence = result.r_sequence;
  r.char_seq = result.char_seq;
  r.inessential = result.inessential;
  for (const Exponent s : result.r_sequence) r.coefficients.emplace_back(s, result.coefficients.at(s));
  return r;
}

json status_to_json(const Status& s) {
  json j{{"kind", status_name(s)}};
  if (const auto* v = std::get_if<status::NonInjective>(&s)) j["covering_degree"] = v->covering_degree;
  if (const auto* v = std::get_if<status::InsufficientPrecision>(&s)) {
    j["needed_bound"] = v->needed_bound;
    j["running_gcd"] = v->running_gcd;
  }
  if (const auto* v = std::get_if<status::MaxStepsExceeded>(&s)) j["max_steps"] = v->max_steps;
  if (const auto* v = std::get_if<status::IncompleteSequence>(&s)) {
    j["bound"] = v->bound;
    j["running_gcd"] = v->running_gcd;
  }
  return j;
}

Status status_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "Ok") return status::Ok{};
  if (kind == "NonInjective") return status::NonInjective{j.at("covering_degree").get<std::int64_t>()};
  if (kind == "InsufficientPrecision") {
    return status::InsufficientPrecision{j.at("needed_bound").get<std::int64_t>(),
                                         j.at("running_gcd").get<std::int64_t>()};
  }
  if (kind == "MaxStepsExceeded") return status::MaxStepsExceeded{j.at("max_steps").get<std::int64_t>()};
  if (kind == "IncompleteSequence") {
    return status::IncompleteSequence{j.at("bound").get<std::int64_t>(), j.at("running_gcd").get<std::int64_t>()};
  }
  throw InputError("unknown status kind '" + kind + "'");
}

json report_to_json(const Report& r) {
  json coefficients = json::array();
  for (const auto& [s, c] : r.coefficients) coefficients.push_back(json::array({s, to_string(c)}));
  json steps = json::array();
  for (const auto& row : r.steps) {
    steps.push_back({{"k", row.k},
                     {"order", row.order},
                     {"r", row.rk},
                     {"leading", to_string(row.leading)},
                     {"c_tilde", to_string(row.c_tilde)}});
  }
  return {{"engine", r.engine},
          {"status", status_to_json(r.status)},
          {"swapped", r.swapped},
          {"p", r.p},
          {"q", r.q},
          {"running_gcd", r.running_gcd},
          {"r_sequence", r.r_sequence},
          {"char_seq", char_seq_to_json(r.char_seq)},
          {"gcd_chain", r.char_seq ? json(r.char_seq->gcd_chain) : json::array()},
          {"inessential", r.inessential},
          {"coefficients", coefficients},
          {"steps", steps}};
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.engine = j.at("engine").get<std::string>();
    r.status = status_from_json(j.at("status"));
    r.swapped = j.at("swapped").get<bool>();
    r.p = j.at("p").get<Exponent>();
    r.q = j.at("q").get<Exponent>();
    r.running_gcd = j.at("running_gcd").get<Exponent>();
    r.r_sequence = j.at("r_sequence").get<std::vector<Exponent>>();
    r.char_seq = char_seq_from_json(j.at("char_seq"));
    r.inessential = j.at("inessential").get<std::vector<Exponent>>();
    for (const auto& pair : j.at("coefficients")) {
      r.coefficients.emplace_back(pair.at(0).get<Exponent>(), parse_rational(pair.at(1).get<std::string>()));
    }
    for (const auto& row : j.at("steps")) {
      r.steps.push_back({row.at("k").get<std::int64_t>(), row.at("order").get<Exponent>(),
                         row.at("r").get<Exponent>(), parse_rational(row.at("leading").get<std::string>()),
                         parse_rational(row.at("c_tilde").get<std::string>())});
    }
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string render_human(const Report& r, bool coefficients) {
  std::ostringstream os;
  os << "engine:                  " << (r.engine == "pk" ? "P_k recursion" : "Newton-Puiseux expansion") << '\n';
  os << "status:                  " << describe(r.status) << '\n';
  os << "multiplicity p:          " << r.p << (r.swapped ? " (x and y swapped)" : "") << '\n';
  os << "r-sequence:              " << join(r.r_sequence) << '\n';
  if (r.char_seq) {
    os << "characteristic sequence: " << r.char_seq->to_string() << '\n';
    os << "gcd chain:               " << join(r.char_seq->gcd_chain) << '\n';
  } else {
    os << "running gcd:             " << r.running_gcd << '\n';
  }
  os << "inessential exponents:   " << (r.inessential.empty() ? "none" : join(r.inessential)) << '\n';
  if (!r.steps.empty()) {
    os << "steps:\n";
    for (const auto& s : r.steps) {
      os << "  P_" << s.k << ": ord " << s.order << ", r_" << s.k << " = " << s.rk << ", leading coefficient "
         << to_string(s.leading) << '\n';
    }
  }
  if (coefficients && !r.coefficients.empty()) {
    os << "normalized Puiseux coefficients:\n";
    for (const auto& [s, c] : r.coefficients) os << "  c~_" << s << " = " << to_string(c) << '\n';
  }
  return os.str();
}

json check_report_to_json(const CheckReport& r) {
  json lemma = json::array();
  for (const auto& row : r.lemma2) {
    lemma.push_back({{"k", row.k},
                     {"r", row.rk},
                     {"leading", to_string(row.leading)},
                     {"predicted", to_string(row.predicted)},
                     {"holds", row.holds}});
  }
  json j{{"agree", r.agree},
         {"mismatch", r.mismatch.empty() ? json(nullptr) : json(r.mismatch)},
         {"engine", report_to_json(r.engine)},
         {"oracle", report_to_json(r.oracle)},
         {"lemma2", lemma}};
  if (r.engine_ms) j["timing_ms"] = {{"engine", *r.engine_ms}, {"oracle", *r.oracle_ms}};
  return j;
}

std::string render_human(const CheckReport& r, bool coefficients) {
  std::ostringstream os;
  os << "== P_k recursion ==\n" << render_human(r.engine, coefficients);
  os << "== Newton-Puiseux oracle ==\n" << render_human(r.oracle, coefficients);
  os << "== comparison ==\n";
  for (const auto& row : r.lemma2) {
    os << "  leading(P_" << row.k << ") = " << to_string(row.leading) << (row.holds ? " == " : " != ")
       << to_string(row.predicted) << " predicted from oracle c~_" << row.rk << '\n';
  }
  if (r.engine_ms) {
    os << "  time: P_k " << *r.engine_ms << " ms, oracle " << *r.oracle_ms << " ms\n";
  }
  os << (r.agree ? "result: engines agree\n" : "result: MISMATCH in " + r.mismatch + "\n");
  return os.str();
}

}  // namespace cuspchar
