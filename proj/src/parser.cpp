#include "cuspchar/parser.hpp"

#include <cctype>

#include "cuspchar/errors.hpp"

namespace cuspchar {

namespace {

constexpr Exponent kMaxExponent = 1'000'000;

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view src) : src_(src) {}

  TruncSeries parse() {
    TruncSeries::Terms terms;
    add_term(terms, parse_term());
    for (;;) {
      skip_space();
      if (at_end()) break;
      const char op = src_[pos_];
      if (op != '+' && op != '-') fail({"'+'", "'-'", "end of input"});
      ++pos_;
      auto [e, c] = parse_term();
      if (op == '-') c = -c;
      add_term(terms, {e, c});
    }
    return TruncSeries(std::move(terms));
  }

 private:
  using Term = std::pair<Exponent, Rational>;

  static void add_term(TruncSeries::Terms& terms, const Term& t) { terms[t.first] += t.second; }

  Term parse_term() {
    skip_space();
    bool negative = false;
    if (peek('-')) {
      negative = true;
      ++pos_;
      skip_space();
    }
    Rational coef(1);
    Exponent exponent = 0;
    if (peek_digit()) {
      coef = parse_coef();
      skip_space();
      if (peek('*')) {
        ++pos_;
        skip_space();
        if (!peek('t')) fail({"'t'"});
      }
      if (peek('t')) exponent = parse_power();
    } else if (peek('t')) {
      exponent = parse_power();
    } else if (negative) {
      fail({"digit", "'t'"});
    } else {
      fail({"'-'", "digit", "'t'"});
    }
    if (negative) coef = -coef;
    return {exponent, coef};
  }

  Rational parse_coef() {
    const std::string num = parse_nat();
    skip_space();
    std::string den = "1";
    if (peek('/')) {
      ++pos_;
      skip_space();
      den = parse_nat();
    }
    mpz_class d(den, 10);
    if (d == 0) throw ZeroDenominator("zero denominator at offset " + std::to_string(pos_ - den.size()));
    Rational r(mpz_class(num, 10), d);
    r.canonicalize();
    return r;
  }

  // "t" ["^" nat]
  Exponent parse_power() {
    ++pos_;  // 't'
    skip_space();
    if (!peek('^')) return 1;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    const std::string digits = parse_nat();
    if (digits.size() > 7 || std::stoll(digits) > kMaxExponent) {
      throw InputError("exponent at offset " + std::to_string(start) + " exceeds " + std::to_string(kMaxExponent));
    }
    return std::stoll(digits);
  }

  std::string parse_nat() {
    if (!peek_digit()) fail({"digit"});
    const std::size_t start = pos_;
    while (peek_digit()) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= src_.size(); }
  bool peek(char c) const { return !at_end() && src_[pos_] == c; }
  bool peek_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_])); }

  [[noreturn]] void fail(std::vector<std::string> expected) const { throw SyntaxError(pos_, std::move(expected)); }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

TruncSeries parse_series_expression(std::string_view src) { return ExpressionParser(src).parse(); }

std::string render_series(const TruncSeries& f) {
  if (!f.has_terms()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    if (e == 0) {
      out += to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += e == 1 ? "t" : "t^" + std::to_string(e);
  }
  return out;
}

}  // namespace cuspchar
