#include "cuspchar/status.hpp"

namespace cuspchar {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string status_name(const Status& s) {
  return std::visit(overloaded{
                        [](const status::Ok&) { return std::string("Ok"); },
                        [](const status::NonInjective&) { return std::string("NonInjective"); },
                        [](const status::InsufficientPrecision&) { return std::string("InsufficientPrecision"); },
                        [](const status::MaxStepsExceeded&) { return std::string("MaxStepsExceeded"); },
                        [](const status::IncompleteSequence&) { return std::string("IncompleteSequence"); },
                    },
                    s);
}

std::string describe(const Status& s) {
  return std::visit(
      overloaded{
          [](const status::Ok&) { return std::string("Ok"); },
          [](const status::NonInjective& v) { return "NonInjective(" + std::to_string(v.covering_degree) + ")"; },
          [](const status::InsufficientPrecision& v) {
            return "InsufficientPrecision(needed_bound=" + std::to_string(v.needed_bound) +
                   ", running_gcd=" + std::to_string(v.running_gcd) + ")";
          },
          [](const status::MaxStepsExceeded& v) {
            return "MaxStepsExceeded(" + std::to_string(v.max_steps) + ")";
          },
          [](const status::IncompleteSequence& v) {
            return "IncompleteSequence(bound=" + std::to_string(v.bound) +
                   ", running_gcd=" + std::to_string(v.running_gcd) + ")";
          },
      },
      s);
}

int exit_code(const Status& s) {
  if (std::holds_alternative<status::Ok>(s)) return 0;
  if (std::holds_alternative<status::NonInjective>(s)) return 2;
  return 3;
}

}  // namespace cuspchar
