#include "cuspchar/pk_engine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "cuspchar/errors.hpp"

namespace cuspchar {

namespace {

Exponent order_or_throw(const TruncSeries& f, const char* name) {
  const OrderResult o = order(f);
  switch (o.kind) {
    case OrderResult::Kind::Order:
      return o.value;
    case OrderResult::Kind::CertifiedZero:
      throw SmoothOrInvalid(std::string(name) + "(t) vanishes identically");
    case OrderResult::Kind::Unknown:
      break;
  }
  throw UnknownOrder(std::string("order of ") + name + "(t) is not certified by its truncation");
}

Exponent running_gcd(Exponent p, std::span<const PkTrace> history) {
  Exponent d = p;
  for (const auto& t : history) d = std::gcd(d, t.rk);
  return d;
}

// Shared tail of p1_step and pk_step: certify the order of the new P_k and
// fill in the trace.
PkTrace finish_step(const Parametrization& par, std::span<const PkTrace> history, std::int64_t k,
                    TruncSeries pk) {
  const Exponent shift = (2 * k - 1) * (par.p - 1);
  const OrderResult o = order(pk);
  if (o.kind == OrderResult::Kind::CertifiedZero) {
    throw NonInjective(running_gcd(par.p, history), k);
  }
  if (o.kind == OrderResult::Kind::Unknown) {
    // Every exponent r <= bound - shift has been ruled out.
    const Exponent needed = pk.precision().bound() - shift + 1;
    throw InsufficientPrecision(needed, "order of P_" + std::to_string(k) +
                                            " exceeds its certified range; inputs must certify exponents up to " +
                                            std::to_string(needed));
  }

  PkTrace trace;
  trace.k = k;
  trace.order = o.value;
  trace.rk = o.value - shift;
  trace.leading = pk.coefficient(o.value);
  trace.pk = std::move(pk);
  if (trace.rk <= history.back().rk) {
    throw std::logic_error("r-sequence is not strictly increasing at k = " + std::to_string(k));
  }

  std::vector<Exponent> earlier;
  earlier.reserve(history.size());
  for (const auto& t : history) earlier.push_back(t.rk);
  trace.c_tilde = recover_coefficient(par, trace, earlier);
  return trace;
}

}  // namespace

std::string CharSequence::to_string() const {
  std::string s = "(" + std::to_string(p) + ";";
  for (std::size_t i = 0; i < q_list.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(q_list[i]);
  }
  return s + ")";
}

Parametrization validate(const TruncSeries& x, const TruncSeries& y) {
  const Exponent ox = order_or_throw(x, "x");
  const Exponent oy = order_or_throw(y, "y");

  Parametrization par;
  par.swapped = ox > oy;
  par.x = par.swapped ? y : x;
  par.y = par.swapped ? x : y;
  par.p = std::min(ox, oy);
  par.q = std::max(ox, oy);
  if (par.p <= 1) {
    throw SmoothOrInvalid("multiplicity " + std::to_string(par.p) + " <= 1: the germ is not cuspidal");
  }
  par.a0 = par.x.coefficient(par.p);
  par.b0 = par.y.coefficient(par.q);
  return par;
}

PkTrace p0_step(const Parametrization& par) {
  PkTrace trace;
  trace.k = 0;
  trace.pk = par.y;
  trace.order = par.q;
  trace.rk = par.q;
  trace.leading = par.b0;
  trace.c_tilde = par.b0;
  return trace;
}

PkTrace p1_step(const Parametrization& par) {
  const TruncSeries dx = derivative(par.x);
  const TruncSeries dy = derivative(par.y);
  const Rational ratio = make_rational(par.q, par.p);
  TruncSeries p1 = dy * par.x - scale(dx * par.y, ratio);

  const PkTrace p0 = p0_step(par);
  return finish_step(par, std::span<const PkTrace>(&p0, 1), 1, std::move(p1));
}

PkTrace pk_step(const Parametrization& par, std::span<const PkTrace> history) {
  if (history.empty() || history.back().k < 1) {
    throw std::invalid_argument("pk_step needs a history ending at some P_k with k >= 1");
  }
  const PkTrace& prev = history.back();
  const std::int64_t k = prev.k;

  const TruncSeries dx = derivative(par.x);
  const TruncSeries ddx = derivative(dx);
  const TruncSeries correction =
      scale(dx * dx, make_rational(prev.rk, par.p)) + scale(ddx * par.x, Rational(static_cast<long>(2 * k - 1)));
  TruncSeries next = (par.x * dx) * derivative(prev.pk) - correction * prev.pk;

  return finish_step(par, history, k + 1, std::move(next));
}

Rational recover_coefficient(const Parametrization& par, const PkTrace& trace, std::span<const Exponent> earlier) {
  if (trace.k == 0) return trace.leading;
  if (earlier.size() < static_cast<std::size_t>(trace.k)) {
    throw std::invalid_argument("recover_coefficient needs r_0..r_{k-1}");
  }
  Rational divisor(1);
  for (std::int64_t j = 0; j < trace.k; ++j) divisor *= Rational(static_cast<long>(trace.rk - earlier[j]));
  divisor *= pow(Rational(static_cast<long>(par.p)), trace.k - 1);
  divisor *= pow(par.a0, 2 * trace.k - 1);
  return trace.leading / divisor;
}

CharSequence extract_characteristic(Exponent p, std::span<const Exponent> r_sequence) {
  CharSequence cs;
  cs.p = p;
  cs.gcd_chain.push_back(p);
  if (std::adjacent_find(r_sequence.begin(), r_sequence.end(), std::greater_equal<>()) != r_sequence.end()) {
    throw std::invalid_argument("r-sequence must be strictly increasing");
  }
  Exponent d = p;
  for (std::size_t i = 0; i < r_sequence.size() && d != 1; ++i) {
    const Exponent r = r_sequence[i];
    if (r % d == 0) continue;
    if (!cs.q_list.empty() && r <= cs.q_list.back()) {
      throw std::logic_error("characteristic exponents are not increasing");
    }
    cs.q_list.push_back(r);
    d = std::gcd(d, r);
    cs.gcd_chain.push_back(d);
  }
  if (d != 1) {
    throw IncompleteSequence(d, "gcd of the exponents stops at " + std::to_string(d) + " instead of 1");
  }
  return cs;
}

std::int64_t default_max_steps(const Parametrization& par) {
  const Precision prec = min(par.x.precision(), par.y.precision());
  return prec.is_exact() ? 64 : prec.bound();
}

EngineResult run_algorithm(const Parametrization& par, std::optional<std::int64_t> max_steps) {
  EngineResult result;
  result.traces.push_back(p0_step(par));
  result.r_sequence.push_back(par.q);
  result.running_gcd = std::gcd(par.p, par.q);

  const std::int64_t budget = max_steps.value_or(default_max_steps(par));
  if (budget < 1) throw std::invalid_argument("max_steps must be at least 1");

  try {
    for (std::int64_t k = 1; result.running_gcd != 1; ++k) {
      if (k > budget) {
        result.status = status::MaxStepsExceeded{budget};
        return result;
      }
      PkTrace trace = k == 1 ? p1_step(par) : pk_step(par, result.traces);
      if (trace.order - (2 * trace.k - 1) * (par.p - 1) != trace.rk) {
        throw std::logic_error("order formula violated");
      }
      result.r_sequence.push_back(trace.rk);
      result.running_gcd = std::gcd(result.running_gcd, trace.rk);
      result.traces.push_back(std::move(trace));
    }
  } catch (const NonInjective&) {
    result.status = status::NonInjective{result.running_gcd};
    return result;
  } catch (const InsufficientPrecision& e) {
    result.status = status::InsufficientPrecision{e.needed_bound(), result.running_gcd};
    return result;
  }

  result.char_seq = extract_characteristic(par.p, result.r_sequence);
  for (const Exponent r : result.r_sequence) {
    if (std::find(result.char_seq->q_list.begin(), result.char_seq->q_list.end(), r) ==
        result.char_seq->q_list.end()) {
      result.inessential.push_back(r);
    }
  }
  result.status = status::Ok{};
  return result;
}

}  // namespace cuspchar
