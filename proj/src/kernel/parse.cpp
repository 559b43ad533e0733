#include "gliaison/kernel/parse.hpp"

#include <cctype>
#include <string>

#include "gliaison/errors.hpp"

namespace gliaison {

namespace {

class ExprParser {
 public:
  ExprParser(const RingPtr& ring, std::string_view text, std::size_t line, std::size_t col)
      : ring_(ring), text_(text), line_(line), col_(col) {}

  Polynomial run() {
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, col_ + pos_ + 1, what);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = ring_->zero();
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    Polynomial t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 1000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip();
    if (pos_ == text_.size()) fail("unexpected end of polynomial");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string digits(text_.substr(start, pos_ - start));
      // reduce digit by digit so long literals never overflow
      const PrimeField& F = ring_->field();
      Coeff v = 0;
      for (char d : digits) v = F.add(F.mul(v, 10), static_cast<Coeff>(d - '0'));
      return ring_->monomial(Monomial(), v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return ring_->variable(*idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t line_;
  std::size_t col_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t line,
                            std::size_t column_offset) {
  return ExprParser(ring, text, line, column_offset).run();
}

}  // namespace gliaison
