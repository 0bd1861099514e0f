#pragma once

// Test-only helpers: the 12;18 example, brute-force oracles that share no
// code path with the library algorithms, and seeded random generators.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cuspchar/pk_engine.hpp"
#include "cuspchar/rational.hpp"
#include "cuspchar/series.hpp"

namespace cuspchar::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline TruncSeries series(std::initializer_list<std::pair<Exponent, const char*>> terms,
                          Precision prec = Precision::exact()) {
  TruncSeries::Terms t;
  for (const auto& [e, c] : terms) t[e] += parse_rational(c);
  return TruncSeries(std::move(t), prec);
}

inline TruncSeries example_x() { return series({{12, "1"}, {13, "1"}, {14, "37/28"}}); }

inline TruncSeries example_y() {
  return series({{18, "1"}, {19, "3/2"}, {20, "33/14"}, {21, "13/14"}, {22, "675/1568"}, {23, "-675/3136"}});
}

inline std::map<Exponent, Rational> term_map(std::initializer_list<std::pair<Exponent, const char*>> terms) {
  std::map<Exponent, Rational> m;
  for (const auto& [e, c] : terms) m[e] = parse_rational(c);
  return m;
}

/// Plain O(n m) convolution of the stored terms, no precision logic.
inline std::map<Exponent, Rational> brute_force_product(const TruncSeries& f, const TruncSeries& g) {
  std::map<Exponent, Rational> out;
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) out[a + b] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Dense naive coefficient vectors, truncated at n.
using Dense = std::vector<Rational>;

inline Dense to_dense(const TruncSeries& f, Exponent n) {
  Dense v(static_cast<std::size_t>(n + 1));
  for (const auto& [e, c] : f.terms())
    if (e <= n) v[static_cast<std::size_t>(e)] = c;
  return v;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
  Dense c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline Dense dense_pow(const Dense& a, Exponent k) {
  Dense r(a.size());
  r[0] = 1;
  for (Exponent i = 0; i < k; ++i) r = dense_mul(r, a);
  return r;
}

/// f(g) by summing f_i g^i with repeated naive multiplication.
inline Dense dense_compose(const Dense& f, const Dense& g) {
  Dense out(f.size());
  Dense power(f.size());
  power[0] = 1;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != 0)
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += f[i] * power[j];
    power = dense_mul(power, g);
  }
  return out;
}

/// Compositional inverse solved one degree at a time: T_n is fixed so that
/// [t^n] u(T) vanishes. Quartic; meant for n <= 15.
inline Dense slow_reversion(const Dense& u) {
  Dense t(u.size());
  if (t.size() > 1) t[1] = 1;
  for (std::size_t n = 2; n < u.size(); ++n) {
    t[n] = 0;
    t[n] = -dense_compose(u, t)[n];
  }
  return t;
}

inline TruncSeries from_dense(const Dense& v, Precision prec = Precision::exact()) {
  TruncSeries::Terms t;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) t[static_cast<Exponent>(i)] = v[i];
  return TruncSeries(std::move(t), prec);
}

/// Stored coefficients of f and g agree on degrees 0..n.
inline bool agree_up_to(const TruncSeries& f, const TruncSeries& g, Exponent n) {
  for (Exponent e = 0; e <= n; ++e)
    if (f.coefficient(e) != g.coefficient(e)) return false;
  return true;
}

inline Exponent certified_limit(const TruncSeries& f, Exponent fallback) {
  return f.is_exact() ? fallback : f.precision().bound();
}

// ---------------------------------------------------------------------------
// Random generation.

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int max_num = 9, int max_den = 6) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  int n = 0;
  while (n == 0) n = num(rng);
  return make_rational(n, den(rng));
}

/// Random series with `count` terms in [lo, hi]; precision as given.
inline TruncSeries random_series(Rng& rng, Exponent lo, Exponent hi, int count, Precision prec = Precision::exact()) {
  std::uniform_int_distribution<Exponent> exp(lo, hi);
  TruncSeries::Terms t;
  for (int i = 0; i < count; ++i) t[exp(rng)] += random_rational(rng);
  return TruncSeries(std::move(t), prec);
}

/// One random exact-polynomial germ with p in [2, 12], degrees <= 60 and
/// gcd of all exponents equal to 1. Three families are mixed: dense random
/// tails, sparse random tails, and germs whose Puiseux expansion is chosen
/// first (so that many coefficients vanish, like the worked example).
struct RandomCase {
  TruncSeries x;
  TruncSeries y;
  int family = 0;
};

inline std::int64_t support_gcd(const TruncSeries& x, const TruncSeries& y) {
  std::int64_t d = 0;
  for (const auto& [e, c] : x.terms()) d = std::gcd(d, e);
  for (const auto& [e, c] : y.terms()) d = std::gcd(d, e);
  return d;
}

inline RandomCase random_case(Rng& rng, int family) {
  constexpr Exponent kMaxDeg = 60;
  std::uniform_int_distribution<Exponent> pick_p(2, 12);
  for (;;) {
    const Exponent p = pick_p(rng);
    const Exponent q = std::uniform_int_distribution<Exponent>(p, std::min<Exponent>(4 * p, 40))(rng);
    RandomCase c;
    c.family = family;
    if (family == 0) {
      // Dense-ish tails.
      const Exponent dx = std::uniform_int_distribution<Exponent>(p, std::min<Exponent>(p + 8, kMaxDeg))(rng);
      const Exponent dy = std::uniform_int_distribution<Exponent>(q, std::min<Exponent>(q + 12, kMaxDeg))(rng);
      TruncSeries::Terms tx{{p, random_rational(rng)}};
      TruncSeries::Terms ty{{q, random_rational(rng)}};
      for (Exponent e = p + 1; e <= dx; ++e)
        if (rng() % 2) tx[e] = random_rational(rng);
      for (Exponent e = q + 1; e <= dy; ++e)
        if (rng() % 2) ty[e] = random_rational(rng);
      c.x = TruncSeries(tx);
      c.y = TruncSeries(ty);
    } else if (family == 1) {
      // Sparse tails: exponents mostly multiples of a divisor of p.
      std::vector<Exponent> divisors;
      for (Exponent d = 1; d <= p; ++d)
        if (p % d == 0) divisors.push_back(d);
      const Exponent step = divisors[rng() % divisors.size()];
      TruncSeries::Terms tx{{p, random_rational(rng)}};
      TruncSeries::Terms ty{{q, random_rational(rng)}};
      for (int i = 0; i < 2; ++i) {
        const Exponent e = p + step * std::uniform_int_distribution<Exponent>(1, 4)(rng);
        if (e <= kMaxDeg) tx[e] += random_rational(rng);
      }
      for (int i = 0; i < 3; ++i) {
        Exponent e = q + std::uniform_int_distribution<Exponent>(1, 20)(rng);
        if (rng() % 3 != 0) e = (e / step) * step;
        if (e > q && e <= kMaxDeg) ty[e] += random_rational(rng);
      }
      c.x = TruncSeries(tx);
      c.y = TruncSeries(ty);
    } else {
      // Prescribed expansion y = sum b_s u^s with u = t (1 + e1 t + e2 t^2)
      // and x = a0 u^p, everything cut at degree 60.
      const Dense unit = to_dense(series({{0, "1"}}) + scale(series({{1, "1"}}), random_rational(rng, 3, 4)) +
                                      scale(series({{2, "1"}}), random_rational(rng, 3, 4)),
                                  kMaxDeg);
      Dense u(kMaxDeg + 1);
      for (std::size_t i = 0; i + 1 < u.size(); ++i) u[i + 1] = unit[i];
      Dense ux = dense_pow(u, p);
      const Rational a0 = random_rational(rng, 3, 2);
      for (auto& v : ux) v *= a0;
      // Characteristic-style exponents: q, then a few exponents that keep or cut the gcd.
      Dense yu(kMaxDeg + 1);
      yu[static_cast<std::size_t>(q)] = random_rational(rng);
      Exponent s = q;
      for (int i = 0; i < 4; ++i) {
        s += std::uniform_int_distribution<Exponent>(1, 6)(rng);
        if (s > 40) break;
        yu[static_cast<std::size_t>(s)] = random_rational(rng);
      }
      c.x = from_dense(ux);
      c.y = from_dense(dense_compose(yu, u));
    }
    if (c.y.max_exponent() > kMaxDeg || c.x.max_exponent() > kMaxDeg) continue;
    if (support_gcd(c.x, c.y) != 1) continue;
    if (order(c.x).value < 2 || order(c.y).value < 2) continue;
    return c;
  }
}

}  // namespace cuspchar::testing
