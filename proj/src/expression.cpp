#include "qmf/expression.hpp"

#include <cctype>
#include <string>

namespace qmf {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  QuasiModularForm parse() {
    QuasiModularForm out = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ExpressionError("expression error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  QuasiModularForm add(QuasiModularForm a, const QuasiModularForm& b, bool subtract) {
    if (!a.is_zero() && !b.is_zero() && a.weight() != b.weight()) {
      fail("sum of weight " + std::to_string(a.weight()) + " and weight " + std::to_string(b.weight()) +
           " is not homogeneous");
    }
    return subtract ? a - b : a + b;
  }

  QuasiModularForm expression() {
    QuasiModularForm out = term();
    while (true) {
      if (accept('+')) {
        out = add(std::move(out), term(), false);
      } else if (accept('-')) {
        out = add(std::move(out), term(), true);
      } else {
        return out;
      }
    }
  }

  QuasiModularForm term() {
    QuasiModularForm out = unary();
    while (true) {
      if (accept('*')) {
        out = out * unary();
      } else if (accept('/')) {
        const QuasiModularForm divisor = unary();
        const auto& terms = divisor.terms();
        if (terms.size() != 1 || terms.begin()->first != Monomial{}) fail("division by a non-constant");
        out = out * (Rational(1) / terms.begin()->second);
      } else {
        return out;
      }
    }
  }

  QuasiModularForm unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  QuasiModularForm power() {
    QuasiModularForm base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    const int exponent = std::stoi(std::string(text_.substr(start, pos_ - start)));
    QuasiModularForm out = QuasiModularForm::constant(1);
    for (int i = 0; i < exponent; ++i) out = out * base;
    return out;
  }

  QuasiModularForm atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      QuasiModularForm inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return QuasiModularForm::constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "E2") return QuasiModularForm::E2();
      if (name == "E4") return QuasiModularForm::E4();
      if (name == "E6") return QuasiModularForm::E6();
      if (name == "Delta") return QuasiModularForm::Delta();
      pos_ = start;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QuasiModularForm parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string format_expression(const QuasiModularForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    std::string factors;
    auto append = [&factors](const char* name, int e) {
      if (e == 0) return;
      if (!factors.empty()) factors += '*';
      factors += name;
      if (e > 1) factors += '^' + std::to_string(e);
    };
    append("E2", m.e2);
    append("E4", m.e4);
    append("E6", m.e6);

    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (factors.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += magnitude.get_str() + '*' + factors;
    }
  }
  return out;
}

}  // namespace qmf
