#include "jlint/laurent.hpp"

#include <cctype>
#include <numeric>

#include "jlint/error.hpp"

namespace jlint {

QuarterLaurent::QuarterLaurent(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

QuarterLaurent QuarterLaurent::monomial(const Rational& coefficient, Index index) {
  QuarterLaurent p;
  p.add_term(index, coefficient);
  return p;
}

QuarterLaurent QuarterLaurent::delta() { return monomial(1, 2) + monomial(1, -2); }

QuarterLaurent QuarterLaurent::t_plus_one() { return monomial(1, 4) + QuarterLaurent(1); }

Rational QuarterLaurent::coefficient(Index index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

QuarterLaurent::Index QuarterLaurent::min_index() const {
  if (terms_.empty()) throw std::logic_error("min_index of zero polynomial");
  return terms_.begin()->first;
}

QuarterLaurent::Index QuarterLaurent::max_index() const {
  if (terms_.empty()) throw std::logic_error("max_index of zero polynomial");
  return terms_.rbegin()->first;
}

bool QuarterLaurent::is_integer_grid() const {
  for (const auto& [k, c] : terms_)
    if (k % 4 != 0) return false;
  return true;
}

bool QuarterLaurent::is_half_grid() const {
  for (const auto& [k, c] : terms_)
    if (k % 2 != 0) return false;
  return true;
}

bool QuarterLaurent::has_integer_coefficients() const {
  for (const auto& [k, c] : terms_)
    if (!c.is_integer()) return false;
  return true;
}

void QuarterLaurent::add_term(Index index, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

QuarterLaurent QuarterLaurent::operator-() const {
  Terms out;
  for (const auto& [k, c] : terms_) out.emplace_hint(out.end(), k, -c);
  return QuarterLaurent(std::move(out));
}

QuarterLaurent& QuarterLaurent::operator+=(const QuarterLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

QuarterLaurent& QuarterLaurent::operator-=(const QuarterLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

QuarterLaurent operator*(const QuarterLaurent& a, const QuarterLaurent& b) {
  QuarterLaurent out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  return out;
}

QuarterLaurent& QuarterLaurent::operator*=(const QuarterLaurent& o) { return *this = *this * o; }

QuarterLaurent QuarterLaurent::shifted(Index shift) const {
  Terms out;
  for (const auto& [k, c] : terms_) out.emplace_hint(out.end(), k + shift, c);
  return QuarterLaurent(std::move(out));
}

QuarterLaurent QuarterLaurent::scaled(const Rational& factor) const {
  if (factor.is_zero()) return {};
  Terms out;
  for (const auto& [k, c] : terms_) out.emplace_hint(out.end(), k, c * factor);
  return QuarterLaurent(std::move(out));
}

QuarterLaurent QuarterLaurent::invert_variable() const {
  Terms out;
  for (const auto& [k, c] : terms_) out.emplace(-k, c);
  return QuarterLaurent(std::move(out));
}

Rational QuarterLaurent::evaluate_at_one() const {
  Rational sum = 0;
  for (const auto& [k, c] : terms_) sum += c;
  return sum;
}

Rational QuarterLaurent::evaluate_at_minus_one() const {
  if (!is_integer_grid()) throw std::logic_error("evaluate_at_minus_one needs integer exponents");
  Rational sum = 0;
  for (const auto& [k, c] : terms_) sum += (k / 4) % 2 == 0 ? c : -c;
  return sum;
}

QuarterLaurent pow(const QuarterLaurent& base, unsigned long exponent) {
  QuarterLaurent result(1);
  QuarterLaurent square = base;
  while (exponent > 0) {
    if (exponent & 1UL) result *= square;
    exponent >>= 1;
    if (exponent > 0) square *= square;
  }
  return result;
}

std::optional<QuarterLaurent> div_exact(const QuarterLaurent& dividend, const QuarterLaurent& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  if (dividend.is_zero()) return QuarterLaurent();

  // Normalise both to ordinary polynomials in u = t^{1/4} with nonzero
  // constant term; any exact quotient is then a polynomial as well.
  const auto dividend_low = dividend.min_index();
  const auto divisor_low = divisor.min_index();
  QuarterLaurent remainder = dividend.shifted(-dividend_low);
  const QuarterLaurent d = divisor.shifted(-divisor_low);
  const auto d_top = d.max_index();
  const Rational d_lead = d.coefficient(d_top);

  QuarterLaurent quotient;
  while (!remainder.is_zero() && remainder.max_index() >= d_top) {
    const auto k = remainder.max_index() - d_top;
    const Rational c = remainder.coefficient(remainder.max_index()) / d_lead;
    const auto term = QuarterLaurent::monomial(c, k);
    quotient += term;
    remainder -= term * d;
  }
  if (!remainder.is_zero()) return std::nullopt;
  return quotient.shifted(dividend_low - divisor_low);
}

std::string exponent_string(QuarterLaurent::Index index) {
  const long g = std::gcd(index, 4L);
  const long num = index / g;
  const long den = 4 / g;
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

std::string variable_string(QuarterLaurent::Index index) {
  if (index == 4) return "t";
  if (index > 0 && index % 4 == 0) return "t^" + std::to_string(index / 4);
  return "t^{" + exponent_string(index) + "}";
}

}  // namespace

std::string QuarterLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (negative)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (k == 0) {
      out += magnitude.to_string();
      continue;
    }
    if (magnitude != Rational(1))
      out += magnitude.is_integer() ? magnitude.to_string() : "(" + magnitude.to_string() + ")";
    out += variable_string(k);
  }
  return out;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string text) : s_(std::move(text)) {}

  QuarterLaurent run() {
    if (s_.empty()) fail("empty polynomial");
    QuarterLaurent result;
    if (s_ == "0") return result;
    while (pos_ < s_.size()) result += term();
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  std::string digits() {
    const auto start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }
  Rational signed_rational() {
    bool negative = false;
    if (peek('-') || peek('+')) negative = s_[pos_++] == '-';
    Integer num(digits(), 10);
    Integer den = 1;
    if (accept('/')) den = Integer(digits(), 10);
    Rational r(num, den);
    return negative ? -r : r;
  }
  QuarterLaurent::Index exponent() {
    Rational e;
    if (accept('{')) {
      e = signed_rational();
      if (!accept('}')) fail("expected '}'");
    } else {
      bool negative = accept('-');
      e = Rational(Integer(digits(), 10));
      if (negative) e = -e;
    }
    const Rational scaled = e * Rational(4);
    if (!scaled.is_integer()) fail("exponent not on the quarter grid");
    return scaled.numerator().get_si();
  }
  QuarterLaurent term() {
    bool negative = false;
    if (peek('-') || peek('+')) negative = s_[pos_++] == '-';
    Rational c = 1;
    bool have_coefficient = false;
    if (accept('(')) {
      c = signed_rational();
      if (!accept(')')) fail("expected ')'");
      have_coefficient = true;
    } else if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      Integer num(digits(), 10);
      Integer den = 1;
      if (accept('/')) den = Integer(digits(), 10);
      c = Rational(num, den);
      have_coefficient = true;
    }
    if (have_coefficient) accept('*');
    QuarterLaurent::Index k = 0;
    if (accept('t')) {
      k = 4;
      if (accept('^')) k = exponent();
    } else if (!have_coefficient) {
      fail("expected a term");
    }
    return QuarterLaurent::monomial(negative ? -c : c, k);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::string normalise(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out += '-';
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      out += text[i];
    }
  }
  return out;
}

}  // namespace

QuarterLaurent QuarterLaurent::parse(std::string_view text) { return TermParser(normalise(text)).run(); }

}  // namespace jlint
