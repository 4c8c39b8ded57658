#include "charclass/parser.hpp"

#include <cctype>
#include <string>

namespace charclass {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t column_offset)
      : text_(text), ring_(ring), line_(line), column_offset_(column_offset) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial result = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return result;
  }

 private:
  Polynomial expr() {
    skip_space();
    bool negate = accept('-');
    Polynomial result = term();
    if (negate) result = -result;
    for (;;) {
      skip_space();
      if (accept('+'))
        result += term();
      else if (accept('-'))
        result -= term();
      else
        return result;
    }
  }

  Polynomial term() {
    Polynomial result = factor();
    for (;;) {
      skip_space();
      if (!accept('*')) break;
      result = result * factor();
    }
    skip_space();
    if (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '('))
      fail("expected an operator (implicit multiplication is not allowed)");
    return result;
  }

  Polynomial factor() {
    Polynomial base = atom();
    skip_space();
    if (accept('^')) {
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
      std::size_t start = pos_;
      unsigned long e = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
        if (e > 65535) fail("exponent too large", start);
      }
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (at_end()) fail("unexpected end of expression");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto& F = ring_->field();
      Coeff value = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
        value = F.add(F.mul(value, 10), static_cast<Coeff>(text_[pos_++] - '0'));
      return Polynomial::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto index = ring_->index_of(name);
      if (!index) fail("unknown identifier '" + name + "'", start);
      return Polynomial::variable(ring_, *index);
    }
    if (accept('(')) {
      Polynomial inner = expr();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  bool accept(char c) {
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) {
    throw ParseError(what, line_, column_offset_ + at + 1);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t line_;
  std::size_t column_offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line,
                            std::size_t column_offset) {
  return ExpressionParser(text, ring, line, column_offset).parse();
}

}  // namespace charclass
