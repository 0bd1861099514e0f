#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>

#include "cuspchar/rational.hpp"

namespace cuspchar {

using Exponent = std::int64_t;

/// How far the coefficients of a series are known.
///
/// Either every coefficient is known (exact), or exactly those of degree
/// <= bound() are known and nothing is known above it.
class Precision {
 public:
  static Precision exact() { return Precision(); }
  static Precision bounded(Exponent bound);

  bool is_exact() const noexcept { return !bound_.has_value(); }
  /// Largest certified degree. Only meaningful when !is_exact().
  Exponent bound() const { return *bound_; }
  /// Whether the coefficient of t^e is known.
  bool covers(Exponent e) const noexcept { return is_exact() || e <= *bound_; }

  friend bool operator==(const Precision&, const Precision&) = default;

 private:
  Precision() = default;
  explicit Precision(Exponent bound) : bound_(bound) {}

  std::optional<Exponent> bound_;
};

/// Exact is the identity; otherwise the smaller bound wins.
Precision min(const Precision& a, const Precision& b);

/// Three-way answer of an order (valuation) query.
struct OrderResult {
  enum class Kind { Order, CertifiedZero, Unknown };

  Kind kind;
  Exponent value = 0;  // set when kind == Order

  static OrderResult order(Exponent v) { return {Kind::Order, v}; }
  static OrderResult certified_zero() { return {Kind::CertifiedZero, 0}; }
  static OrderResult unknown() { return {Kind::Unknown, 0}; }

  bool is_order() const noexcept { return kind == Kind::Order; }
  friend bool operator==(const OrderResult&, const OrderResult&) = default;
};

/// Truncated power series in t with exact rational coefficients.
///
/// Sparse: only nonzero coefficients are stored, and none above the
/// precision bound. Immutable once constructed.
class TruncSeries {
 public:
  using Terms = std::map<Exponent, Rational>;

  /// The exact zero series.
  TruncSeries() : prec_(Precision::exact()) {}
  /// Drops zero coefficients and everything above the bound.
  explicit TruncSeries(Terms terms, Precision prec = Precision::exact());

  static TruncSeries monomial(const Rational& coef, Exponent e, Precision prec = Precision::exact());

  const Terms& terms() const noexcept { return terms_; }
  const Precision& precision() const noexcept { return prec_; }
  bool is_exact() const noexcept { return prec_.is_exact(); }
  bool has_terms() const noexcept { return !terms_.empty(); }

  /// Stored coefficient of t^e (zero when absent, including above the bound).
  Rational coefficient(Exponent e) const;
  /// Smallest stored exponent; requires has_terms().
  Exponent min_exponent() const { return terms_.begin()->first; }
  /// Largest stored exponent; requires has_terms().
  Exponent max_exponent() const { return terms_.rbegin()->first; }

  /// Lower bound on the true valuation used in precision bookkeeping:
  /// nullopt stands for +infinity (exact zero series).
  std::optional<Exponent> valuation_lower_bound() const;

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  void check_canonical() const;

  Terms terms_;
  Precision prec_;
};

TruncSeries add(const TruncSeries& f, const TruncSeries& g);
TruncSeries subtract(const TruncSeries& f, const TruncSeries& g);
TruncSeries multiply(const TruncSeries& f, const TruncSeries& g);
TruncSeries scale(const TruncSeries& f, const Rational& c);
/// Termwise d/dt. Throws DegeneratePrecision when prec == Bound(0).
TruncSeries derivative(const TruncSeries& f);
OrderResult order(const TruncSeries& f);
/// Drops exponents above k; prec becomes min(prec, Bound(k)). Requires k >= 0.
TruncSeries truncate(const TruncSeries& f, Exponent k);
/// f(lambda * t) for nonzero lambda; precision unchanged.
TruncSeries rescale_variable(const TruncSeries& f, const Rational& lambda);
/// f(t) = t^shift * g(t) with g returned; requires every stored exponent >= shift.
TruncSeries shift_down(const TruncSeries& f, Exponent shift);

inline TruncSeries operator+(const TruncSeries& f, const TruncSeries& g) { return add(f, g); }
inline TruncSeries operator-(const TruncSeries& f, const TruncSeries& g) { return subtract(f, g); }
inline TruncSeries operator-(const TruncSeries& f) { return scale(f, Rational(-1)); }
inline TruncSeries operator*(const TruncSeries& f, const TruncSeries& g) { return multiply(f, g); }
inline TruncSeries operator*(const Rational& c, const TruncSeries& f) { return scale(f, c); }

}  // namespace cuspchar
