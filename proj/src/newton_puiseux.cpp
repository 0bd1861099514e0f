#include "cuspchar/newton_puiseux.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "cuspchar/errors.hpp"

namespace cuspchar {

namespace {

constexpr Exponent kInfinity = std::numeric_limits<Exponent>::max();

Exponent limit_of(const Precision& p) { return p.is_exact() ? kInfinity : p.bound(); }

bool is_exactly(const TruncSeries& f, Exponent e) {
  return f.is_exact() && f.terms().size() == 1 && f.min_exponent() == e && f.terms().begin()->second == 1;
}

// Dense coefficient vector of f on [0, n].
std::vector<Rational> dense(const TruncSeries& f, Exponent n) {
  std::vector<Rational> v(static_cast<std::size_t>(n + 1));
  for (const auto& [e, c] : f.terms()) {
    if (e > n) break;
    v[static_cast<std::size_t>(e)] = c;
  }
  return v;
}

TruncSeries from_dense(std::vector<Rational> v, Precision prec) {
  TruncSeries::Terms terms;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) terms.emplace_hint(terms.end(), static_cast<Exponent>(i), std::move(v[i]));
  }
  return TruncSeries(std::move(terms), prec);
}

}  // namespace

UnitSeries::UnitSeries(TruncSeries s) : s_(std::move(s)) {
  if (!s_.precision().covers(0) || s_.coefficient(0) != 1) {
    throw std::invalid_argument("unit series must have constant term 1");
  }
}

UnitSeries unit_root(const UnitSeries& h, Exponent p, Exponent limit) {
  if (p < 1) throw std::invalid_argument("unit_root needs p >= 1");
  const TruncSeries& hs = h.series();
  if (is_exactly(hs, 0) || p == 1) return h;

  const Exponent n_max = std::min(limit_of(hs.precision()), limit);
  // From h g' = (1/p) h' g:  n p g_n = sum_{k=1}^{n} (k (p+1) - n p) h_k g_{n-k}.
  std::vector<Rational> g(static_cast<std::size_t>(n_max + 1));
  g[0] = 1;
  Rational acc, term;
  for (Exponent n = 1; n <= n_max; ++n) {
    acc = 0;
    for (const auto& [k, hk] : hs.terms()) {
      if (k == 0) continue;
      if (k > n) break;
      const auto& gk = g[static_cast<std::size_t>(n - k)];
      if (gk == 0) continue;
      term = hk * gk;
      term *= Rational(static_cast<long>(k * (p + 1) - n * p));
      acc += term;
    }
    g[static_cast<std::size_t>(n)] = acc / Rational(static_cast<long>(n * p));
  }
  return UnitSeries(from_dense(std::move(g), Precision::bounded(n_max)));
}

TruncSeries reversion(const TruncSeries& u, Exponent limit) {
  const OrderResult o = order(u);
  if (!o.is_order() || o.value != 1 || u.coefficient(1) != 1) {
    throw std::invalid_argument("reversion needs u = t + O(t^2)");
  }
  if (is_exactly(u, 1)) return u;

  const Exponent n_max = std::min(limit_of(u.precision()), limit);
  // Lagrange inversion: u = t a(t), T_n = (1/n) [t^{n-1}] a^{-n}.
  // a^{-n} is expanded with the J.C.P. Miller power recurrence.
  const std::vector<Rational> a = dense(shift_down(u, 1), std::max<Exponent>(n_max - 1, 0));
  std::vector<Rational> t(static_cast<std::size_t>(n_max + 1));
  if (n_max >= 1) t[1] = 1;

  std::vector<Rational> b(static_cast<std::size_t>(n_max));
  Rational acc, term;
  for (Exponent n = 2; n <= n_max; ++n) {
    const Exponent alpha = -n;
    b[0] = 1;
    for (Exponent m = 1; m <= n - 1; ++m) {
      acc = 0;
      for (Exponent k = 1; k <= m; ++k) {
        const auto& ak = a[static_cast<std::size_t>(k)];
        if (ak == 0) continue;
        term = ak * b[static_cast<std::size_t>(m - k)];
        term *= Rational(static_cast<long>((alpha + 1) * k - m));
        acc += term;
      }
      b[static_cast<std::size_t>(m)] = acc / Rational(static_cast<long>(m));
    }
    t[static_cast<std::size_t>(n)] = b[static_cast<std::size_t>(n - 1)] / Rational(static_cast<long>(n));
  }
  return from_dense(std::move(t), Precision::bounded(n_max));
}

TruncSeries compose(const TruncSeries& f, const TruncSeries& g, std::optional<Exponent> limit) {
  if (!g.precision().covers(0) || g.coefficient(0) != 0) {
    throw std::invalid_argument("compose needs ord g >= 1");
  }
  // The valuation lower bound is at least 1 here; nullopt means g is exactly 0.
  const Exponent vg = g.valuation_lower_bound().value_or(kInfinity);

  Exponent bound = kInfinity;
  if (!f.is_exact()) {
    // Unknown terms of f start at (K_f + 1) and contribute from degree (K_f + 1) vg.
    const Exponent kf = f.precision().bound();
    bound = vg == kInfinity ? kInfinity : (kf + 1) * vg - 1;
  }
  if (!g.is_exact()) {
    // An error O(t^{K_g+1}) in g perturbs f_i g^i at degree (i-1) vg + K_g + 1,
    // worst for the smallest i >= 1 where f may be nonzero.
    Exponent first = kInfinity;
    for (const auto& [e, c] : f.terms()) {
      if (e >= 1) {
        first = e;
        break;
      }
    }
    if (first == kInfinity && !f.is_exact()) first = std::max<Exponent>(f.precision().bound() + 1, 1);
    if (first != kInfinity) bound = std::min(bound, (first - 1) * vg + g.precision().bound());
  }
  if (limit) bound = std::min(bound, *limit);
  const Precision prec = bound == kInfinity ? Precision::exact() : Precision::bounded(bound);

  // Horner over the stored exponents of f, with g's terms taken as given.
  const TruncSeries g_terms(g.terms());
  auto cut = [&](const TruncSeries& s) { return bound == kInfinity ? s : truncate(s, bound); };
  const TruncSeries g_cut = cut(g_terms);

  if (!f.has_terms()) return TruncSeries({}, prec);
  TruncSeries acc;
  Exponent current = f.max_exponent();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    while (current > it->first) {
      acc = cut(acc * g_cut);
      --current;
    }
    acc = acc + TruncSeries::monomial(it->second, 0);
  }
  for (; current > 0; --current) acc = cut(acc * g_cut);
  return TruncSeries(acc.terms(), prec);
}

std::optional<Exponent> certified_exponent_bound(const Parametrization& par) {
  Exponent bound = kInfinity;
  if (!par.y.is_exact()) bound = par.y.precision().bound();
  if (!par.x.is_exact()) bound = std::min(bound, par.x.precision().bound() + par.q - par.p);
  if (bound == kInfinity) return std::nullopt;
  return bound;
}

PuiseuxCoefficients expand_coefficients(const Parametrization& par, Exponent bound) {
  const auto certified = certified_exponent_bound(par);
  if (certified && bound > *certified) {
    throw InsufficientPrecision(*certified + 1, "expansion bound " + std::to_string(bound) +
                                                    " exceeds the certified exponent bound " +
                                                    std::to_string(*certified));
  }
  // x = a0 t^p h(t).
  const UnitSeries h(scale(shift_down(par.x, par.p), Rational(1) / par.a0));
  // y(t(u)) to degree `bound` only needs t(u) to degree bound - q + 1.
  const Exponent inverse_limit = std::max<Exponent>(bound - par.q + 1, 1);
  const UnitSeries g = unit_root(h, par.p, inverse_limit - 1);
  const TruncSeries u = TruncSeries::monomial(Rational(1), 1) * g.series();
  const TruncSeries t_of_u = reversion(u, inverse_limit);

  const bool exact = par.y.is_exact() && t_of_u.is_exact();
  const TruncSeries y_of_u = compose(par.y, t_of_u, exact ? std::nullopt : std::optional<Exponent>(bound));

  PuiseuxCoefficients out;
  out.coefficients = y_of_u.terms();
  out.certified = y_of_u.precision();
  return out;
}

PuiseuxData puiseux_expand(const Parametrization& par, Exponent bound) {
  PuiseuxCoefficients pc = expand_coefficients(par, bound);
  std::vector<Exponent> positions;
  for (const auto& [s, c] : pc.coefficients) positions.push_back(s);
  PuiseuxData data;
  data.char_seq = extract_characteristic(par.p, positions);
  data.coefficients = std::move(pc.coefficients);
  data.certified = pc.certified;
  return data;
}

OracleResult run_oracle(const Parametrization& par, const OracleOptions& options) {
  const auto certified = certified_exponent_bound(par);
  Exponent bound = certified ? *certified : std::min(std::max(2 * par.q, par.q + 2 * par.p), options.max_bound);
  bound = std::max(bound, par.q);

  OracleResult result;
  for (;;) {
    PuiseuxCoefficients pc = expand_coefficients(par, bound);
    result.coefficients = std::move(pc.coefficients);
    result.certified = pc.certified;
    result.bound_used = bound;
    result.r_sequence.clear();

    Exponent d = par.p;
    for (const auto& [s, c] : result.coefficients) {
      if (d == 1) break;
      result.r_sequence.push_back(s);
      d = std::gcd(d, s);
    }
    result.running_gcd = d;

    if (d == 1) {
      result.char_seq = extract_characteristic(par.p, result.r_sequence);
      for (const Exponent r : result.r_sequence) {
        const auto& ql = result.char_seq->q_list;
        if (std::find(ql.begin(), ql.end(), r) == ql.end()) result.inessential.push_back(r);
      }
      result.status = status::Ok{};
      return result;
    }
    if (result.certified.is_exact()) {
      result.status = status::NonInjective{d};
      return result;
    }
    if (certified) {
      result.status = status::InsufficientPrecision{*certified + 1, d};
      return result;
    }
    if (bound >= options.max_bound) {
      result.status = status::IncompleteSequence{bound, d};
      return result;
    }
    bound = std::min(2 * bound, options.max_bound);
  }
}

}  // namespace cuspchar
