#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cuspchar/series.hpp"
#include "cuspchar/status.hpp"

namespace cuspchar {

/// A validated germ t -> (x(t), y(t)) with 1 < p = ord x <= q = ord y.
struct Parametrization {
  TruncSeries x;
  TruncSeries y;
  Exponent p = 0;
  Exponent q = 0;
  Rational a0;  // leading coefficient of x
  Rational b0;  // leading coefficient of y
  bool swapped = false;  // x and y were exchanged to get p <= q
};

/// Checks the cuspidal hypotheses and orders the pair so that p <= q.
/// Throws UnknownOrder or SmoothOrInvalid.
Parametrization validate(const TruncSeries& x, const TruncSeries& y);

/// One step of the P_k recursion.
struct PkTrace {
  std::int64_t k = 0;
  TruncSeries pk;
  Exponent order = 0;   // ord P_k
  Exponent rk = 0;      // r_k = ord P_k - (2k-1)(p-1); r_0 = q
  Rational leading;     // coefficient of t^order in P_k
  Rational c_tilde;     // normalized Puiseux coefficient at u^{r_k}
};

/// (p; q_0, ..., q_n) together with p_0 > p_1 > ... > p_{n+1} = 1.
struct CharSequence {
  Exponent p = 0;
  std::vector<Exponent> q_list;
  std::vector<Exponent> gcd_chain;

  /// "(12;18,26,27)"
  std::string to_string() const;
  friend bool operator==(const CharSequence&, const CharSequence&) = default;
};

struct EngineResult {
  std::vector<Exponent> r_sequence;
  std::vector<PkTrace> traces;  // traces[k] belongs to P_k; traces[0] is P_0 = y
  std::optional<CharSequence> char_seq;  // set iff status is Ok
  std::vector<Exponent> inessential;
  Exponent running_gcd = 0;  // gcd(p, r_0, ..., r_n)
  Status status = status::Ok{};
};

/// P_0 = y with r_0 = q.
PkTrace p0_step(const Parametrization& par);

/// P_1 = y' x - (q/p) x' y.
/// Throws NonInjective if P_1 vanishes identically, InsufficientPrecision
/// if its order lies beyond the certified range.
PkTrace p1_step(const Parametrization& par);

/// P_{k+1} = x x' P_k' - ((r_k/p) x'^2 + (2k-1) x'' x) P_k, for k >= 1.
/// `history` holds the traces P_0..P_k; the last entry is the one advanced.
PkTrace pk_step(const Parametrization& par, std::span<const PkTrace> history);

/// c~_{r_k} = leading(P_k) / (prod_{j<k}(r_k - r_j) * p^{k-1} * a0^{2k-1}).
/// `earlier` holds r_0..r_{k-1}. For k = 0 this is b0.
Rational recover_coefficient(const Parametrization& par, const PkTrace& trace,
                             std::span<const Exponent> earlier);

/// Treats r_sequence as exactly the exponents with a nonzero Puiseux coefficient.
/// Throws IncompleteSequence if the gcd with p never reaches 1.
CharSequence extract_characteristic(Exponent p, std::span<const Exponent> r_sequence);

/// Default step budget: the tightest input bound, or 64 for exact inputs.
std::int64_t default_max_steps(const Parametrization& par);

/// Runs the recursion until gcd(p, r_0, ..., r_k) = 1.
///
/// Failures are reported through EngineResult::status, with every trace
/// computed up to that point retained.
EngineResult run_algorithm(const Parametrization& par, std::optional<std::int64_t> max_steps = std::nullopt);

}  // namespace cuspchar
