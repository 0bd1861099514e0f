#include "cuspchar/series.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <vector>

#include "cuspchar/errors.hpp"

namespace cuspchar {

namespace {

constexpr Exponent kInfinity = std::numeric_limits<Exponent>::max();

Exponent limit_of(const Precision& p) { return p.is_exact() ? kInfinity : p.bound(); }

Precision precision_from_limit(Exponent limit) {
  return limit == kInfinity ? Precision::exact() : Precision::bounded(limit);
}

Exponent saturating_add(Exponent a, Exponent b) {
  if (a == kInfinity || b == kInfinity) return kInfinity;
  return a + b;
}

}  // namespace

Precision Precision::bounded(Exponent bound) {
  if (bound < 0) throw Error("precision bound must be non-negative");
  return Precision(bound);
}

Precision min(const Precision& a, const Precision& b) {
  if (a.is_exact()) return b;
  if (b.is_exact()) return a;
  return Precision::bounded(std::min(a.bound(), b.bound()));
}

TruncSeries::TruncSeries(Terms terms, Precision prec) : terms_(std::move(terms)), prec_(prec) {
  std::erase_if(terms_, [&](const auto& kv) { return kv.second == 0 || !prec_.covers(kv.first); });
  check_canonical();
}

TruncSeries TruncSeries::monomial(const Rational& coef, Exponent e, Precision prec) {
  return TruncSeries(Terms{{e, coef}}, prec);
}

Rational TruncSeries::coefficient(Exponent e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Exponent> TruncSeries::valuation_lower_bound() const {
  if (!terms_.empty()) return min_exponent();
  if (prec_.is_exact()) return std::nullopt;
  // Nothing nonzero up to the bound: the true order exceeds it.
  return prec_.bound() + 1;
}

void TruncSeries::check_canonical() const {
#ifndef NDEBUG
  for (const auto& [e, c] : terms_) {
    assert(c != 0);
    assert(e >= 0);
    assert(prec_.covers(e));
  }
#endif
}

TruncSeries add(const TruncSeries& f, const TruncSeries& g) {
  TruncSeries::Terms terms = f.terms();
  for (const auto& [e, c] : g.terms()) terms[e] += c;
  return TruncSeries(std::move(terms), min(f.precision(), g.precision()));
}

TruncSeries subtract(const TruncSeries& f, const TruncSeries& g) {
  TruncSeries::Terms terms = f.terms();
  for (const auto& [e, c] : g.terms()) terms[e] -= c;
  return TruncSeries(std::move(terms), min(f.precision(), g.precision()));
}

TruncSeries multiply(const TruncSeries& f, const TruncSeries& g) {
  const auto vf = f.valuation_lower_bound();
  const auto vg = g.valuation_lower_bound();
  // An exact zero factor has infinite valuation, so its partner's bound never limits.
  const Exponent limit =
      std::min(saturating_add(limit_of(f.precision()), vg.value_or(kInfinity)),
               saturating_add(limit_of(g.precision()), vf.value_or(kInfinity)));

  if (!f.has_terms() || !g.has_terms()) {
    return TruncSeries({}, precision_from_limit(limit));
  }

  const Exponent lo = f.min_exponent() + g.min_exponent();
  const Exponent hi = std::min(f.max_exponent() + g.max_exponent(), limit);
  if (hi < lo) return TruncSeries({}, precision_from_limit(limit));

  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const auto pairs = static_cast<std::uint64_t>(f.terms().size()) * g.terms().size();
  TruncSeries::Terms out;
  if (span <= 4 * pairs + 64) {
    std::vector<Rational> acc(span);
    for (const auto& [ef, cf] : f.terms()) {
      for (const auto& [eg, cg] : g.terms()) {
        const Exponent e = ef + eg;
        if (e > hi) break;
        acc[static_cast<std::size_t>(e - lo)] += cf * cg;
      }
    }
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] != 0) out.emplace_hint(out.end(), lo + static_cast<Exponent>(i), std::move(acc[i]));
    }
  } else {
    for (const auto& [ef, cf] : f.terms()) {
      for (const auto& [eg, cg] : g.terms()) {
        const Exponent e = ef + eg;
        if (e > hi) break;
        out[e] += cf * cg;
      }
    }
  }
  return TruncSeries(std::move(out), precision_from_limit(limit));
}

TruncSeries scale(const TruncSeries& f, const Rational& c) {
  if (c == 0) return TruncSeries({}, f.precision());
  TruncSeries::Terms terms;
  for (const auto& [e, coef] : f.terms()) terms.emplace_hint(terms.end(), e, coef * c);
  return TruncSeries(std::move(terms), f.precision());
}

TruncSeries derivative(const TruncSeries& f) {
  Precision prec = Precision::exact();
  if (!f.is_exact()) {
    if (f.precision().bound() == 0) {
      throw DegeneratePrecision("derivative of a series certified only at degree 0");
    }
    prec = Precision::bounded(f.precision().bound() - 1);
  }
  TruncSeries::Terms terms;
  for (const auto& [e, c] : f.terms()) {
    if (e == 0) continue;
    terms.emplace_hint(terms.end(), e - 1, c * Rational(static_cast<long>(e)));
  }
  return TruncSeries(std::move(terms), prec);
}

OrderResult order(const TruncSeries& f) {
  if (f.has_terms()) return OrderResult::order(f.min_exponent());
  return f.is_exact() ? OrderResult::certified_zero() : OrderResult::unknown();
}

TruncSeries truncate(const TruncSeries& f, Exponent k) {
  if (k < 0) throw Error("truncation bound must be non-negative");
  return TruncSeries(f.terms(), min(f.precision(), Precision::bounded(k)));
}

TruncSeries rescale_variable(const TruncSeries& f, const Rational& lambda) {
  if (lambda == 0) throw Error("rescale_variable needs a nonzero factor");
  TruncSeries::Terms terms;
  for (const auto& [e, c] : f.terms()) terms.emplace_hint(terms.end(), e, c * pow(lambda, e));
  return TruncSeries(std::move(terms), f.precision());
}

TruncSeries shift_down(const TruncSeries& f, Exponent shift) {
  if (f.has_terms() && f.min_exponent() < shift) throw Error("shift_down below the order of the series");
  TruncSeries::Terms terms;
  for (const auto& [e, c] : f.terms()) terms.emplace_hint(terms.end(), e - shift, c);
  Precision prec = Precision::exact();
  if (!f.is_exact()) {
    if (f.precision().bound() < shift) throw InsufficientPrecision(shift, "shift_down beyond the certified range");
    prec = Precision::bounded(f.precision().bound() - shift);
  }
  return TruncSeries(std::move(terms), prec);
}

}  // namespace cuspchar
