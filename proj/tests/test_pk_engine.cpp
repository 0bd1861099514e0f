#include <doctest.h>

#include "cuspchar/errors.hpp"
#include "cuspchar/pk_engine.hpp"
#include "support.hpp"

using namespace cuspchar;
using namespace cuspchar::testing;

namespace {

Parametrization example() { return validate(example_x(), example_y()); }

const std::vector<Exponent> kExampleR{18, 24, 26, 27};

}  // namespace

TEST_SUITE("pk_engine") {

TEST_CASE("validate") {
  const Parametrization par = example();
  CHECK(par.p == 12);
  CHECK(par.q == 18);
  CHECK_FALSE(par.swapped);
  CHECK(par.a0 == 1);
  CHECK(par.b0 == 1);

  const Parametrization swapped = validate(series({{3, "1"}}), series({{2, "1"}}));
  CHECK(swapped.p == 2);
  CHECK(swapped.q == 3);
  CHECK(swapped.swapped);
  CHECK(swapped.x == series({{2, "1"}}));

  CHECK_THROWS_AS(validate(series({{1, "1"}}), series({{5, "1"}})), SmoothOrInvalid);
  CHECK_THROWS_AS(validate(series({{0, "1"}, {2, "1"}}), series({{5, "1"}})), SmoothOrInvalid);
  CHECK_THROWS_AS(validate(TruncSeries(), series({{5, "1"}})), SmoothOrInvalid);
  CHECK_THROWS_AS(validate(TruncSeries({}, Precision::bounded(6)), series({{5, "1"}})), UnknownOrder);
}

TEST_CASE("p1_step") {
  SUBCASE("worked example") {
    const PkTrace t = p1_step(example());
    CHECK(t.k == 1);
    CHECK(t.pk.terms() == term_map({{35, "-2025/10976"}, {36, "-24975/43904"}}));
    CHECK(t.pk.is_exact());
    CHECK(t.order == 35);
    CHECK(t.rk == 24);
    CHECK(t.leading == q("-2025/10976"));
  }
  SUBCASE("monomial pair cancels identically") {
    const Parametrization par = validate(series({{4, "1"}}), series({{6, "1"}}));
    try {
      p1_step(par);
      FAIL("expected NonInjective");
    } catch (const NonInjective& e) {
      CHECK(e.covering_degree() == 2);
      CHECK(e.step() == 1);
    }
  }
  SUBCASE("hand expansion: x = t^4, y = t^6 + t^7") {
    // y'x - (3/2) x'y = 6t^9 + 7t^10 - 6t^9 - 6t^10 = t^10.
    const PkTrace t = p1_step(validate(series({{4, "1"}}), series({{6, "1"}, {7, "1"}})));
    CHECK(t.pk.terms() == term_map({{10, "1"}}));
    CHECK(t.rk == 7);
  }
  SUBCASE("order beyond the certified range") {
    const Parametrization par = validate(example_x(), truncate(example_y(), 22));
    try {
      p1_step(par);
      FAIL("expected InsufficientPrecision");
    } catch (const InsufficientPrecision& e) {
      CHECK(e.needed_bound() == 23);
    }
  }
}

TEST_CASE("pk_step on the worked example") {
  const Parametrization par = example();
  std::vector<PkTrace> history{p0_step(par), p1_step(par)};

  history.push_back(pk_step(par, history));
  CHECK(history[2].order == 59);
  CHECK(history[2].leading == q("2500875/76832"));
  CHECK(history[2].rk == 26);

  history.push_back(pk_step(par, history));
  CHECK(history[3].order == 82);
  CHECK(history[3].rk == 27);
  // Frozen from an independent Fraction-based evaluation of the recursion.
  CHECK(history[3].leading == q("-3553875/3136"));

  CHECK_THROWS_AS(pk_step(par, std::span<const PkTrace>(history.data(), 1)), std::invalid_argument);
}

TEST_CASE("recover_coefficient") {
  const Parametrization par = example();
  const EngineResult res = run_algorithm(par);
  REQUIRE(res.traces.size() == 4);
  CHECK(recover_coefficient(par, res.traces[0], {}) == 1);
  // Expected values come from an independent root/reversion/composition computation.
  CHECK(res.traces[1].c_tilde == q("-675/21952"));
  CHECK(res.traces[2].c_tilde == q("833625/4917248"));
  CHECK(res.traces[3].c_tilde == q("-14625/50176"));
  CHECK(recover_coefficient(par, res.traces[2], kExampleR) == q("2500875/76832") / (2 * 8 * 12));
  CHECK_THROWS_AS(recover_coefficient(par, res.traces[3], std::vector<Exponent>{18}), std::invalid_argument);
}

TEST_CASE("run_algorithm") {
  SUBCASE("worked example") {
    const EngineResult res = run_algorithm(example());
    CHECK(is_ok(res.status));
    CHECK(res.r_sequence == kExampleR);
    REQUIRE(res.char_seq);
    CHECK(res.char_seq->to_string() == "(12;18,26,27)");
    CHECK(res.char_seq->gcd_chain == std::vector<Exponent>{12, 6, 2, 1});
    CHECK(res.inessential == std::vector<Exponent>{24});
    CHECK(res.running_gcd == 1);
    for (const auto& t : res.traces) {
      if (t.k >= 1) CHECK(t.order - (2 * t.k - 1) * 11 == t.rk);
    }
  }
  SUBCASE("quasi-homogeneous stops before any P_k") {
    const EngineResult res = run_algorithm(validate(series({{2, "1"}}), series({{3, "1"}})));
    CHECK(is_ok(res.status));
    CHECK(res.traces.size() == 1);
    CHECK(res.char_seq->to_string() == "(2;3)");
  }
  SUBCASE("non-injective") {
    const EngineResult res = run_algorithm(validate(series({{4, "1"}}), series({{6, "1"}})));
    CHECK(res.status == Status(status::NonInjective{2}));
    CHECK_FALSE(res.char_seq);
  }
  SUBCASE("non-injective after a nonzero P_1") {
    // (s^2, s^3 + s^5) with s = t^2.
    const EngineResult res = run_algorithm(validate(series({{4, "1"}}), series({{6, "1"}, {10, "1"}})));
    CHECK(res.status == Status(status::NonInjective{2}));
    CHECK(res.r_sequence == std::vector<Exponent>{6, 10});
  }
  SUBCASE("hidden double cover with coprime exponents") {
    // s = t^2 + t^3 is the square of a local coordinate.
    const TruncSeries s = series({{2, "1"}, {3, "1"}});
    const EngineResult res = run_algorithm(validate(s * s, s * s * s));
    CHECK(res.status == Status(status::NonInjective{2}));
  }
  SUBCASE("r_0 divisible by p is inessential") {
    const EngineResult res = run_algorithm(validate(series({{4, "1"}}), series({{8, "1"}, {10, "1"}, {11, "1"}})));
    CHECK(is_ok(res.status));
    CHECK(res.r_sequence == std::vector<Exponent>{8, 10, 11});
    CHECK(res.char_seq->to_string() == "(4;10,11)");
    CHECK(res.inessential == std::vector<Exponent>{8});
  }
  SUBCASE("step budget") {
    const EngineResult res = run_algorithm(example(), 2);
    CHECK(res.status == Status(status::MaxStepsExceeded{2}));
    CHECK(res.r_sequence == std::vector<Exponent>{18, 24, 26});
    CHECK_THROWS_AS(run_algorithm(example(), 0), std::invalid_argument);
  }
  SUBCASE("default budget") {
    CHECK(default_max_steps(example()) == 64);
    CHECK(default_max_steps(validate(truncate(example_x(), 40), truncate(example_y(), 30))) == 30);
  }
}

TEST_CASE("bounded inputs") {
  const TruncSeries x = example_x();
  const TruncSeries y = example_y();
  const EngineResult full = run_algorithm(validate(x, truncate(y, 30)));
  CHECK(is_ok(full.status));
  CHECK(full.r_sequence == kExampleR);

  const EngineResult cut = run_algorithm(validate(x, truncate(y, 22)));
  CHECK(cut.status == Status(status::InsufficientPrecision{23, 6}));
  CHECK(cut.r_sequence == std::vector<Exponent>{18});

  // Smallest truncation of y that still decides everything (found by scanning
  // downward from 30, then frozen).
  CHECK(is_ok(run_algorithm(validate(x, truncate(y, 27))).status));
  const EngineResult just_below = run_algorithm(validate(x, truncate(y, 26)));
  CHECK(just_below.status == Status(status::InsufficientPrecision{27, 2}));
  CHECK(just_below.r_sequence == std::vector<Exponent>{18, 24, 26});

  // A bounded zero P_k is only Unknown, never NonInjective. With x cut at 20
  // the exponents are certified up to K_x + q - p = 22.
  const EngineResult covered = run_algorithm(validate(truncate(series({{4, "1"}}), 20), series({{6, "1"}})));
  CHECK(covered.status == Status(status::InsufficientPrecision{23, 2}));
}

TEST_CASE("extract_characteristic") {
  const CharSequence cs = extract_characteristic(12, kExampleR);
  CHECK(cs.q_list == std::vector<Exponent>{18, 26, 27});
  CHECK(cs.gcd_chain == std::vector<Exponent>{12, 6, 2, 1});

  const CharSequence small = extract_characteristic(4, std::vector<Exponent>{6, 7});
  CHECK(small.q_list == std::vector<Exponent>{6, 7});
  CHECK(small.gcd_chain == std::vector<Exponent>{4, 2, 1});

  CHECK(extract_characteristic(2, std::vector<Exponent>{3}).to_string() == "(2;3)");
  // Entries after the gcd reaches 1 are ignored.
  CHECK(extract_characteristic(2, std::vector<Exponent>{3, 4, 5}).to_string() == "(2;3)");

  try {
    extract_characteristic(12, std::vector<Exponent>{18, 24});
    FAIL("expected IncompleteSequence");
  } catch (const IncompleteSequence& e) {
    CHECK(e.final_gcd() == 6);
  }
  CHECK_THROWS_AS(extract_characteristic(4, std::vector<Exponent>{7, 6}), std::invalid_argument);
}

TEST_CASE("parameter scaling covariance on the worked example") {
  const Parametrization par = example();
  const EngineResult base = run_algorithm(par);
  for (const char* l : {"2", "-1/3", "5/7"}) {
    const Rational lambda = q(l);
    const Parametrization scaled = validate(rescale_variable(par.x, lambda), rescale_variable(par.y, lambda));
    const EngineResult res = run_algorithm(scaled);
    REQUIRE(is_ok(res.status));
    CHECK(res.char_seq == base.char_seq);
    CHECK(res.r_sequence == base.r_sequence);
    for (std::size_t k = 0; k < res.traces.size(); ++k) {
      CHECK(res.traces[k].c_tilde == pow(lambda, base.traces[k].rk) * base.traces[k].c_tilde);
    }
  }
}

}  // TEST_SUITE
