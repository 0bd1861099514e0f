#pragma once

#include <cstdint>
#include <string>
#include <variant>

namespace cuspchar {

/// Outcome of a full run of either engine.
namespace status {

struct Ok {
  friend bool operator==(const Ok&, const Ok&) = default;
};

struct NonInjective {
  std::int64_t covering_degree;
  friend bool operator==(const NonInjective&, const NonInjective&) = default;
};

/// needed_bound: smallest Puiseux exponent the inputs must certify before
/// the computation can advance. running_gcd is the covering degree
/// hypothesis at the point of failure.
struct InsufficientPrecision {
  std::int64_t needed_bound;
  std::int64_t running_gcd;
  friend bool operator==(const InsufficientPrecision&, const InsufficientPrecision&) = default;
};

struct MaxStepsExceeded {
  std::int64_t max_steps;
  friend bool operator==(const MaxStepsExceeded&, const MaxStepsExceeded&) = default;
};

/// Expansion reached `bound` on exact inputs and the gcd is still running_gcd.
struct IncompleteSequence {
  std::int64_t bound;
  std::int64_t running_gcd;
  friend bool operator==(const IncompleteSequence&, const IncompleteSequence&) = default;
};

}  // namespace status

using Status = std::variant<status::Ok, status::NonInjective, status::InsufficientPrecision,
                            status::MaxStepsExceeded, status::IncompleteSequence>;

inline bool is_ok(const Status& s) { return std::holds_alternative<status::Ok>(s); }

/// "Ok", "NonInjective", ...
std::string status_name(const Status& s);
/// e.g. "NonInjective(2)" or "InsufficientPrecision(needed_bound=23)".
std::string describe(const Status& s);
/// CLI exit code: 0 Ok, 2 NonInjective, 3 for every undecided outcome.
int exit_code(const Status& s);

}  // namespace cuspchar
