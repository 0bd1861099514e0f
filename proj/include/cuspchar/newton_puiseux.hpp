#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cuspchar/pk_engine.hpp"
#include "cuspchar/series.hpp"
#include "cuspchar/status.hpp"

// Classical route to the Puiseux expansion: write x = a0 t^p h(t), set
// u = t h^{1/p} so that x = a0 u^p, invert u(t) and substitute into y.
// The coefficient of u^s in y(t(u)) is c~_s = c_s a0^{s/p}.

namespace cuspchar {

/// A truncated series with constant term exactly 1.
class UnitSeries {
 public:
  /// Throws std::invalid_argument unless the constant term is certified and equals 1.
  explicit UnitSeries(TruncSeries s);

  const TruncSeries& series() const noexcept { return s_; }

 private:
  TruncSeries s_;
};

/// g with g^p = h and g(0) = 1. Exact when h is exactly 1; otherwise
/// certified up to min(bound of h, limit).
UnitSeries unit_root(const UnitSeries& h, Exponent p, Exponent limit);

/// Compositional inverse of u = t + ..., via Lagrange inversion.
/// Exact when u is exactly t; otherwise certified up to min(bound of u, limit).
TruncSeries reversion(const TruncSeries& u, Exponent limit);

/// f(g(t)) for ord g >= 1. The certified range follows from both bounds and
/// ord g; `limit` optionally caps it further.
TruncSeries compose(const TruncSeries& f, const TruncSeries& g, std::optional<Exponent> limit = std::nullopt);

/// Largest Puiseux exponent determined by the inputs: min(K_y, K_x + q - p),
/// nullopt when both are exact.
std::optional<Exponent> certified_exponent_bound(const Parametrization& par);

/// Normalized Puiseux coefficients c~_s (nonzero ones only) and the range
/// on which they are decided.
struct PuiseuxCoefficients {
  std::map<Exponent, Rational> coefficients;
  Precision certified = Precision::exact();
};

/// Expands y in powers of u up to `bound` (further if it comes for free).
/// Throws InsufficientPrecision if bound exceeds certified_exponent_bound.
PuiseuxCoefficients expand_coefficients(const Parametrization& par, Exponent bound);

struct PuiseuxData {
  std::map<Exponent, Rational> coefficients;
  Precision certified = Precision::exact();
  CharSequence char_seq;
};

/// expand_coefficients followed by characteristic extraction.
/// Throws InsufficientPrecision, or IncompleteSequence if the gcd does not
/// reach 1 by `bound`.
PuiseuxData puiseux_expand(const Parametrization& par, Exponent bound);

struct OracleOptions {
  /// Largest expansion bound tried for exact inputs before giving up.
  Exponent max_bound = 256;
};

/// Full oracle run mirroring run_algorithm's contract.
struct OracleResult {
  std::map<Exponent, Rational> coefficients;  // every nonzero c~_s found
  Precision certified = Precision::exact();
  std::vector<Exponent> r_sequence;  // nonzero positions up to the last characteristic exponent
  std::optional<CharSequence> char_seq;
  std::vector<Exponent> inessential;
  Exponent running_gcd = 0;
  Exponent bound_used = 0;
  Status status = status::Ok{};
};

/// Bounded inputs are expanded once to their certified bound. Exact inputs
/// are expanded with a doubling bound until the gcd reaches 1, the
/// expansion turns out to be exact (then a gcd > 1 proves non-injectivity),
/// or max_bound is hit.
OracleResult run_oracle(const Parametrization& par, const OracleOptions& options = {});

}  // namespace cuspchar
