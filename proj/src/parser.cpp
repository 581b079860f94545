#include "nczar/parser.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

namespace nczar {

namespace {

struct Token {
  enum class Type { Ident, Number, Plus, Minus, Star, Caret, Slash,
                    LParen, RParen, Dagger, End };
  Type type = Type::End;
  std::string text;
  size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg, size_t pos) const {
    throw std::runtime_error("parse error at position " + std::to_string(pos) +
                             ": " + msg);
  }

 private:
  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_])))
      ++i_;
    cur_.pos = i_;
    if (i_ >= src_.size()) {
      cur_ = {Token::Type::End, "", i_};
      return;
    }
    char c = src_[i_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < src_.size() &&
             std::isalpha(static_cast<unsigned char>(src_[j])))
        ++j;
      cur_ = {Token::Type::Ident, src_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[j])))
        ++j;
      cur_ = {Token::Type::Number, src_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    // UTF-8 dagger.
    if (src_.compare(i_, 3, "\xe2\x80\xa0") == 0) {
      cur_ = {Token::Type::Dagger, "\xe2\x80\xa0", i_};
      i_ += 3;
      return;
    }
    Token::Type t;
    switch (c) {
      case '+': t = Token::Type::Plus; break;
      case '-': t = Token::Type::Minus; break;
      case '*': t = Token::Type::Star; break;
      case '^': t = Token::Type::Caret; break;
      case '/': t = Token::Type::Slash; break;
      case '(': t = Token::Type::LParen; break;
      case ')': t = Token::Type::RParen; break;
      default:
        fail(std::string("unexpected character '") + c + "'", i_);
    }
    cur_ = {t, std::string(1, c), i_};
    ++i_;
  }

  const std::string& src_;
  size_t i_ = 0;
  Token cur_;
};

class Parser {
 public:
  Parser(AlgebraKind kind, int N, const std::string& text)
      : kind_(kind), N_(N), fl_(flavor_of(kind)), lex_(text) {}

  OpElement run() {
    OpElement el = expr();
    if (lex_.peek().type != Token::Type::End)
      lex_.fail("trailing input", lex_.peek().pos);
    return el;
  }

 private:
  OpElement expr() {
    bool neg = false;
    if (lex_.peek().type == Token::Type::Minus) {
      lex_.take();
      neg = true;
    }
    OpElement acc = term();
    if (neg) acc = -acc;
    while (lex_.peek().type == Token::Type::Plus ||
           lex_.peek().type == Token::Type::Minus) {
      bool minus = lex_.take().type == Token::Type::Minus;
      OpElement t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  OpElement term() {
    OpElement acc = factor();
    while (lex_.peek().type == Token::Type::Star) {
      lex_.take();
      acc = acc * factor();
    }
    return acc;
  }

  // An atom remembers how to take negative powers when it can.
  struct Atom {
    OpElement el;
    bool is_gen = false;
    Gen gen = Gen::X;
    std::function<Scalar(long long)> spow;  // set for scalar atoms
  };

  OpElement factor() {
    Atom a = atom();
    bool plain = true;  // no postfix applied yet
    for (;;) {
      if (lex_.peek().type == Token::Type::Caret) {
        size_t pos = lex_.take().pos;
        long long n = exponent();
        if (plain && a.is_gen) {
          Gen g = n >= 0 ? a.gen : inverse_of(a.gen, pos);
          OpElement el = OpElement::one(kind_, N_);
          for (long long i = 0; i < (n >= 0 ? n : -n); ++i)
            el = el.append(checked(g, pos));
          a.el = el;
        } else if (plain && a.spow) {
          a.el = OpElement::scalar_element(kind_, N_, scalar_power(a, n, pos));
        } else {
          if (n < 0)
            lex_.fail("cannot invert a compound expression", pos);
          OpElement el = OpElement::one(kind_, N_);
          for (long long i = 0; i < n; ++i) el = el * a.el;
          a.el = el;
        }
        plain = false;
      } else if (lex_.peek().type == Token::Type::Dagger) {
        size_t pos = lex_.take().pos;
        try {
          a.el = a.el.adjoint();
        } catch (const std::exception& ex) {
          lex_.fail(ex.what(), pos);
        }
        plain = false;
      } else {
        break;
      }
    }
    return a.el;
  }

  long long exponent() {
    bool neg = false;
    if (lex_.peek().type == Token::Type::Minus) {
      lex_.take();
      neg = true;
    }
    if (lex_.peek().type != Token::Type::Number)
      lex_.fail("expected an integer exponent", lex_.peek().pos);
    Token t = lex_.take();
    long long v = std::stoll(t.text);
    return neg ? -v : v;
  }

  Gen inverse_of(Gen g, size_t pos) {
    switch (g) {
      case Gen::X: return Gen::Xinv;
      case Gen::W: return Gen::Winv;
      case Gen::Y: return Gen::Yinv;
      case Gen::Z: return Gen::Zinv;
      case Gen::F: return Gen::Finv;
      case Gen::G: return Gen::Ginv;
      case Gen::E: return Gen::Einv;
      default:
        lex_.fail("generator has no inverse here", pos);
    }
  }

  Gen checked(Gen g, size_t pos) {
    if (!gen_valid(kind_, g))
      lex_.fail(gen_name(g) + " is not available in this algebra", pos);
    return g;
  }

  Scalar scalar_power(const Atom& a, long long n, size_t pos) {
    try {
      return a.spow(n);
    } catch (const std::exception& ex) {
      lex_.fail(ex.what(), pos);
    }
  }

  Atom atom() {
    const Token t = lex_.peek();
    switch (t.type) {
      case Token::Type::LParen: {
        lex_.take();
        OpElement el = expr();
        if (lex_.peek().type != Token::Type::RParen)
          lex_.fail("expected ')'", lex_.peek().pos);
        lex_.take();
        return {el};
      }
      case Token::Type::Number:
        return rational_atom();
      case Token::Type::Ident:
        return ident_atom();
      default:
        lex_.fail("expected an atom", t.pos);
    }
  }

  Atom rational_atom() {
    Token num = lex_.take();
    Rational r(num.text);
    if (lex_.peek().type == Token::Type::Slash) {
      size_t pos = lex_.take().pos;
      if (lex_.peek().type != Token::Type::Number)
        lex_.fail("expected a denominator", lex_.peek().pos);
      Token den = lex_.take();
      Rational d(den.text);
      if (d == 0) lex_.fail("division by zero", pos);
      r /= d;
    }
    Atom a;
    a.spow = [this, r](long long n) {
      Rational v(1);
      Rational base = r;
      if (n < 0) {
        if (r == 0) throw std::domain_error("0 has no inverse");
        base = Rational(1) / r;
        n = -n;
      }
      for (long long i = 0; i < n; ++i) v *= base;
      return Scalar::from_rational(fl_, N_, v);
    };
    a.el = OpElement::scalar_element(kind_, N_, a.spow(1));
    return a;
  }

  Atom ident_atom() {
    Token t = lex_.take();
    const std::string& s = t.text;
    auto gen_atom = [&](Gen g) {
      Atom a;
      a.is_gen = true;
      a.gen = checked(g, t.pos);
      a.el = OpElement::generator(kind_, N_, g);
      return a;
    };
    if (s == "X") return gen_atom(Gen::X);
    if (s == "W") return gen_atom(Gen::W);
    if (s == "Y") return gen_atom(Gen::Y);
    if (s == "Z") return gen_atom(Gen::Z);
    if (s == "F") return gen_atom(Gen::F);
    if (s == "G") return gen_atom(Gen::G);
    if (s == "E") return gen_atom(Gen::E);

    auto scal_atom = [&](std::function<Scalar(long long)> spow) {
      Atom a;
      a.spow = std::move(spow);
      a.el = OpElement::scalar_element(kind_, N_, scalar_power(a, 1, t.pos));
      return a;
    };
    if (s == "eps")
      return scal_atom([this](long long n) { return Scalar::eps_pow(fl_, N_, n); });
    if (s == "delta") {
      if (fl_ != Flavor::Torus)
        lex_.fail("delta is a torus scalar", t.pos);
      return scal_atom([this](long long n) { return Scalar::delta_pow(N_, n); });
    }
    if (s == "a" || s == "alpha") {
      if ((s == "a") != (fl_ == Flavor::Affine))
        lex_.fail("scalar name does not match the algebra", t.pos);
      return scal_atom(
          [this](long long n) { return Scalar::const_pow(fl_, N_, n, 0); });
    }
    if (s == "b" || s == "beta") {
      if ((s == "beta") != (fl_ == Flavor::Torus))
        lex_.fail("scalar name does not match the algebra", t.pos);
      return scal_atom(
          [this](long long n) { return Scalar::const_pow(fl_, N_, 0, n); });
    }
    if (s == "i")
      return scal_atom([this](long long n) {
        Scalar im = Scalar::imaginary_unit(fl_, N_);
        Scalar v = Scalar::one(fl_, N_);
        long long r = ((n % 4) + 4) % 4;
        for (long long j = 0; j < r; ++j) v *= im;
        return v;
      });
    if (s == "adj") {
      if (lex_.peek().type != Token::Type::LParen)
        lex_.fail("expected '(' after adj", lex_.peek().pos);
      lex_.take();
      OpElement el = expr();
      if (lex_.peek().type != Token::Type::RParen)
        lex_.fail("expected ')'", lex_.peek().pos);
      size_t pos = lex_.take().pos;
      try {
        return {el.adjoint()};
      } catch (const std::exception& ex) {
        lex_.fail(ex.what(), pos);
      }
    }
    lex_.fail("unknown name '" + s + "'", t.pos);
  }

  AlgebraKind kind_;
  int N_;
  Flavor fl_;
  Lexer lex_;
};

}  // namespace

OpElement parse_element(AlgebraKind kind, int N, const std::string& text) {
  return Parser(kind, N, text).run();
}

}  // namespace nczar
