#include "qpascal/expr_parser.hpp"

#include <cctype>

namespace qpascal {

namespace {

constexpr long kMaxExponent = 1'000'000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FieldElem parse() {
    FieldElem v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  FieldElem expr() {
    FieldElem v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }

  FieldElem term() {
    FieldElem v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        FieldElem d = unary();
        if (d.is_zero()) throw ParseError(at, "division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  FieldElem unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  FieldElem power() {
    FieldElem base = atom();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    long e = exponent();
    if (e < 0 && base.is_zero()) throw ParseError(at, "negative power of zero");
    return base.pow(e);
  }

  long exponent() {
    bool paren = accept('(');
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    BigInt n = integer();
    if (paren) expect(')');
    if (n > kMaxExponent) fail("exponent too large");
    long e = n.get_si();
    return negative ? -e : e;
  }

  BigInt integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  FieldElem atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return FieldElem(BigRational(integer()));
    if (c == 'L') {
      ++pos_;
      return FieldElem::indeterminate();
    }
    if (c == 'z') {
      ++pos_;
      expect('(');
      const std::size_t at = pos_;
      BigInt n = integer();
      expect(')');
      if (n < 1) throw ParseError(at, "conductor must be at least 1");
      if (n > 100000) throw ParseError(at, "conductor too large");
      return FieldElem::zeta(n.get_ui());
    }
    if (accept('(')) {
      FieldElem v = expr();
      expect(')');
      return v;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElem parse_field_elem(std::string_view text) { return Parser(text).parse(); }

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace qpascal
