#include "quatype/expression.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>
#include <vector>

#include "quatype/error.hpp"

namespace quatype {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_ws();
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      sign = next() == '-' ? -1.0 : 1.0;
      skip_ws();
    }
    terms.push_back(term(sign));
    skip_ws();
    while (!at_end()) {
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      terms.push_back(term(op == '-' ? -1.0 : 1.0));
      skip_ws();
    }
    return terms;
  }

 private:
  Term term(double sign) {
    const std::size_t start = pos_;
    Scalar coef = 1.0;
    bool has_coef = false;
    if (peek() == '(' || peek() == '.' || std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = coefficient();
      has_coef = true;
      skip_ws();
    }
    Blade blade;
    if (peek() == 'e') {
      blade = parse_blade();
    } else if (!has_coef) {
      pos_ = start;
      fail("expected a coefficient or a blade");
    }
    return {blade, sign * coef};
  }

  Scalar coefficient() {
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      double re_sign = 1.0;
      if (peek() == '-' || peek() == '+') re_sign = next() == '-' ? -1.0 : 1.0;
      const double re = re_sign * decimal();
      skip_ws();
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-' before the imaginary part");
      const double im_sign = next() == '-' ? -1.0 : 1.0;
      skip_ws();
      const double im = im_sign * decimal();
      skip_ws();
      expect('i');
      skip_ws();
      expect(')');
      return {re, im};
    }
    const double value = decimal();
    if (peek() == 'i') {
      ++pos_;
      return {0.0, value};
    }
    return {value, 0.0};
  }

  double decimal() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    std::string_view digits = text_.substr(start, pos_ - start);
    if (digits.size() > 1 && digits.back() == '.') digits.remove_suffix(1);
    if (digits.empty() || digits == ".") {
      pos_ = start;
      fail("expected a decimal number");
    }
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value,
                        std::chars_format::fixed);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || !std::isfinite(value)) {
      pos_ = start;
      fail("invalid decimal number");
    }
    return value;
  }

  Blade parse_blade() {
    expect('e');
    std::vector<std::pair<int, std::size_t>> indices;  // index, position
    if (peek() == '{') {
      ++pos_;
      do {
        skip_ws();
        const std::size_t at = pos_;
        int value = 0;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a generator index");
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          value = value * 10 + (next() - '0');
          if (value > 1000) {
            pos_ = at;
            fail("generator index too large");
          }
        }
        indices.emplace_back(value, at);
        skip_ws();
      } while (peek() == ',' && ++pos_);
      expect('}');
    } else {
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected generator indices after 'e'");
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        indices.emplace_back(peek() - '0', pos_);
        ++pos_;
      }
    }
    std::uint32_t mask = 0;
    int previous = 0;
    for (const auto& [index, at] : indices) {
      if (index < 1 || index > sig_.n()) {
        pos_ = at;
        fail("generator index " + std::to_string(index) + " outside 1.." +
             std::to_string(sig_.n()));
      }
      if (index <= previous) {
        pos_ = at;
        fail("blade indices must be strictly increasing");
      }
      mask |= 1u << (index - 1);
      previous = index;
    }
    return Blade{mask};
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char next() { return text_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("syntax error: " + message, pos_);
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Multivector parse_expression(std::string_view text, const Signature& sig,
                             std::optional<Field> field) {
  std::vector<Term> terms = ExpressionParser(text, sig).parse();
  if (!field) {
    const bool complex = std::any_of(terms.begin(), terms.end(),
                                     [](const Term& t) { return t.coef.imag() != 0.0; });
    field = complex ? Field::Complex : Field::Real;
  }
  try {
    return Multivector(sig, *field, std::move(terms));
  } catch (const InvalidCoefficient& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string format_decimal(double value) {
  char buf[512];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

std::vector<Term> display_order(const Multivector& u) {
  std::vector<Term> terms(u.terms().begin(), u.terms().end());
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    const int ga = grade(a.blade), gb = grade(b.blade);
    if (ga != gb) return ga < gb;
    return a.blade.indices() < b.blade.indices();
  });
  return terms;
}

std::string format_expression(const Multivector& u) {
  if (u.empty()) return "0";
  const std::vector<Term> terms = display_order(u);

  std::string out;
  bool first = true;
  for (const Term& t : terms) {
    const bool scalar = t.blade == Blade::identity();
    const std::string blade = scalar ? "" : blade_name(t.blade);
    if (t.coef.imag() != 0.0) {
      if (!first) out += " + ";
      const double im = t.coef.imag();
      out += "(" + format_decimal(t.coef.real()) + (std::signbit(im) ? "-" : "+") +
             format_decimal(std::abs(im)) + "i)" + blade;
    } else {
      const double re = t.coef.real();
      const bool negative = std::signbit(re);
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      const double magnitude = std::abs(re);
      if (scalar || magnitude != 1.0) out += format_decimal(magnitude);
      out += blade;
    }
    first = false;
  }
  return out;
}

}  // namespace quatype
