#include "cuspbif/exprparse.hpp"

#include <cctype>

#include "cuspbif/errors.hpp"

namespace cuspbif {
namespace {

class Parser {
 public:
  Parser(const std::string& text, Ambient ambient) : text_(text), ambient_(std::move(ambient)) {}

  Poly parse() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    Poly p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

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

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (!accept('^')) return base;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("exponent must be a non-negative integer literal");
    }
    const std::size_t start = pos_;
    const Integer e = integer();
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/')) {
      fail("exponent must be a non-negative integer literal");
    }
    if (e > kMaxExponent) {
      pos_ = start;
      fail("exponent exceeds the limit of " + std::to_string(kMaxExponent));
    }
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(text_.substr(start, pos_ - start));
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(integer());
      if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not supported; use a/b");
      if (accept('/')) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("expected integer denominator");
        }
        const std::size_t den_pos = pos_;
        const Integer den = integer();
        if (den == 0) {
          pos_ = den_pos;
          fail("zero denominator");
        }
        value /= Rational(den);
      }
      reject_adjacency();
      return Poly::constant(ambient_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name = text_.substr(start, pos_ - start);
      const auto idx = ambient_.index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown identifier '" + name + "'");
      }
      reject_adjacency();
      return Poly::variable(ambient_, *idx);
    }
    if (accept('(')) {
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      reject_adjacency();
      return inner;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  // A factor followed directly by another factor ("2x1", "x1(x2)", "(t)x1").
  void reject_adjacency() {
    skip_ws();
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
      fail("implicit multiplication is not allowed; use '*'");
    }
  }

  const std::string& text_;
  Ambient ambient_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const ExprSource& src) {
  Parser parser(src.text, Ambient(src.declared_vars));
  return parser.parse();
}

}  // namespace cuspbif
