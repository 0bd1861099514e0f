#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cuspchar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Differentiating a series whose only certified coefficient is the constant one.
class DegeneratePrecision : public Error {
 public:
  using Error::Error;
};

/// The germ is smooth (min order <= 1) or otherwise outside the cuspidal setting.
class SmoothOrInvalid : public Error {
 public:
  using Error::Error;
};

/// The order of an input series cannot be certified from its truncation.
class UnknownOrder : public Error {
 public:
  using Error::Error;
};

/// Some P_k vanished identically: the parametrization factors through t -> t^d.
class NonInjective : public Error {
 public:
  NonInjective(std::int64_t covering_degree, std::int64_t step)
      : Error("parametrization is not one to one (covering degree " +
              std::to_string(covering_degree) + ", P_" + std::to_string(step) +
              " vanishes identically)"),
        covering_degree_(covering_degree),
        step_(step) {}

  std::int64_t covering_degree() const noexcept { return covering_degree_; }
  std::int64_t step() const noexcept { return step_; }

 private:
  std::int64_t covering_degree_;
  std::int64_t step_;
};

/// The truncated inputs do not determine the next exponent.
///
/// `needed_bound` is the smallest Puiseux exponent that the inputs must
/// certify before another step can possibly succeed.
class InsufficientPrecision : public Error {
 public:
  InsufficientPrecision(std::int64_t needed_bound, const std::string& what)
      : Error(what), needed_bound_(needed_bound) {}

  std::int64_t needed_bound() const noexcept { return needed_bound_; }

 private:
  std::int64_t needed_bound_;
};

class MaxStepsExceeded : public Error {
 public:
  using Error::Error;
};

/// The running gcd of the given exponents never reached 1.
class IncompleteSequence : public Error {
 public:
  IncompleteSequence(std::int64_t final_gcd, const std::string& what)
      : Error(what), final_gcd_(final_gcd) {}

  std::int64_t final_gcd() const noexcept { return final_gcd_; }

 private:
  std::int64_t final_gcd_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected)
      : Error(format(offset, expected)), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(std::size_t offset, const std::vector<std::string>& expected) {
    std::string msg = "syntax error at offset " + std::to_string(offset) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    return msg;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

/// Malformed input document (bad JSON shape, unsorted term list, float coefficient...).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace cuspchar
