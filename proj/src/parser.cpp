#include "distcalc/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <variant>

#include "distcalc/builders.hpp"

namespace distcalc {

namespace {

enum class Tok {
  Number, Ident, Plus, Minus, Star, Caret, LParen, RParen,
  Bar, Slash, Semi, Quote, End
};

struct Token {
  Tok kind;
  double num = 0.0;
  std::string text;
  int pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { next(); }

  const Token& peek() const { return tok_; }

  Token eat() {
    Token t = tok_;
    next();
    return t;
  }

  [[noreturn]] void fail(const std::string& what,
                         const std::string& expected = {}) const {
    throw ParseError("parse error at position " + std::to_string(tok_.pos) +
                         ": " + what,
                     tok_.pos, expected);
  }

  Token expect(Tok k, const std::string& what) {
    if (tok_.kind != k) fail("expected " + what, what);
    return eat();
  }

 private:
  void next() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_])))
      ++i_;
    tok_ = Token{Tok::End, 0.0, "", static_cast<int>(i_)};
    if (i_ >= src_.size()) return;
    const char c = src_[i_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t end = i_;
      while (end < src_.size() &&
             (std::isdigit(static_cast<unsigned char>(src_[end])) ||
              src_[end] == '.'))
        ++end;
      if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
        size_t e = end + 1;
        if (e < src_.size() && (src_[e] == '+' || src_[e] == '-')) ++e;
        if (e < src_.size() && std::isdigit(static_cast<unsigned char>(src_[e]))) {
          while (e < src_.size() &&
                 std::isdigit(static_cast<unsigned char>(src_[e])))
            ++e;
          end = e;
        }
      }
      tok_.kind = Tok::Number;
      tok_.text = src_.substr(i_, end - i_);
      const auto res = std::from_chars(tok_.text.data(),
                                       tok_.text.data() + tok_.text.size(),
                                       tok_.num);
      if (res.ec != std::errc() ||
          res.ptr != tok_.text.data() + tok_.text.size())
        throw ParseError("parse error: malformed number '" + tok_.text +
                             "' at position " + std::to_string(i_),
                         static_cast<int>(i_));
      i_ = end;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t end = i_;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) ||
              src_[end] == '_'))
        ++end;
      tok_.kind = Tok::Ident;
      tok_.text = src_.substr(i_, end - i_);
      i_ = end;
      return;
    }
    switch (c) {
      case '+': tok_.kind = Tok::Plus; break;
      case '-': tok_.kind = Tok::Minus; break;
      case '*': tok_.kind = Tok::Star; break;
      case '^': tok_.kind = Tok::Caret; break;
      case '(': tok_.kind = Tok::LParen; break;
      case ')': tok_.kind = Tok::RParen; break;
      case '|': tok_.kind = Tok::Bar; break;
      case '/': tok_.kind = Tok::Slash; break;
      case ';': tok_.kind = Tok::Semi; break;
      case '\'': tok_.kind = Tok::Quote; break;
      default:
        throw ParseError("parse error: unexpected character '" +
                             std::string(1, c) + "' at position " +
                             std::to_string(i_),
                         static_cast<int>(i_));
    }
    ++i_;
  }

  const std::string& src_;
  size_t i_ = 0;
  Token tok_;
};

// A parse value is either a scalar or a distribution.
struct Value {
  std::variant<Complex, Expression> v;

  bool scalar() const { return v.index() == 0; }
  Complex as_scalar() const { return std::get<0>(v); }
  const Expression& as_expr() const { return std::get<1>(v); }
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  Expression run() {
    Value v = parse_expr();
    if (lex_.peek().kind != Tok::End) lex_.fail("trailing input");
    if (v.scalar()) return constant(v.as_scalar());
    return canonicalize(v.as_expr());
  }

  RationalSpec run_rational() {
    expect_ident("rat");
    RationalSpec r = parse_rat_body();
    if (lex_.peek().kind != Tok::End) lex_.fail("trailing input");
    return r;
  }

 private:
  Lexer lex_;

  void expect_ident(const std::string& name) {
    if (lex_.peek().kind != Tok::Ident || lex_.peek().text != name)
      lex_.fail("expected '" + name + "'", name);
    lex_.eat();
  }

  double parse_signed_real() {
    double sign = 1.0;
    while (lex_.peek().kind == Tok::Minus || lex_.peek().kind == Tok::Plus) {
      if (lex_.eat().kind == Tok::Minus) sign = -sign;
    }
    const Token t = lex_.expect(Tok::Number, "number");
    return sign * t.num;
  }

  Value parse_expr() {
    bool neg = false;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.eat();
      neg = true;
    }
    Value acc = parse_term();
    if (neg) acc = scale(acc, -1.0);
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      const bool minus = lex_.eat().kind == Tok::Minus;
      Value rhs = parse_term();
      if (minus) rhs = scale(rhs, -1.0);
      acc = add(acc, rhs);
    }
    return acc;
  }

  Value parse_term() {
    Value acc = parse_factor();
    while (lex_.peek().kind == Tok::Star) {
      lex_.eat();
      Value rhs = parse_factor();
      acc = mul(acc, rhs);
    }
    return acc;
  }

  Value parse_factor() {
    Value base = parse_base();
    if (lex_.peek().kind == Tok::Caret) {
      lex_.eat();
      Value ex = parse_base();
      if (!base.scalar() || !ex.scalar())
        lex_.fail("'^' applies to scalars only");
      return Value{branch_pow(base.as_scalar(), ex.as_scalar())};
    }
    return base;
  }

  Value parse_base() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Number:
        return Value{Complex(lex_.eat().num, 0.0)};
      case Tok::Minus: {
        lex_.eat();
        Value v = parse_base();
        return scale(v, -1.0);
      }
      case Tok::LParen: {
        lex_.eat();
        Value v = parse_expr();
        lex_.expect(Tok::RParen, "')'");
        return v;
      }
      case Tok::Ident:
        return parse_ident();
      default:
        lex_.fail("expected a number, constant, atom or '('");
    }
  }

  Value parse_ident() {
    const std::string name = lex_.eat().text;
    if (name == "i") return Value{Complex(0.0, 1.0)};
    if (name == "pi") return Value{Complex(kPi, 0.0)};
    if (name == "gamma_em") return Value{Complex(kEulerGamma, 0.0)};
    if (name == "sqrt") {
      lex_.expect(Tok::LParen, "'('");
      Value v = parse_expr();
      lex_.expect(Tok::RParen, "')'");
      if (!v.scalar()) lex_.fail("sqrt applies to scalars only");
      return Value{branch_pow(v.as_scalar(), 0.5)};
    }
    if (name == "Vp") {
      lex_.expect(Tok::LParen, "'('");
      const Token one = lex_.expect(Tok::Number, "'1'");
      if (one.num != 1.0) lex_.fail("expected Vp(1/x)");
      lex_.expect(Tok::Slash, "'/'");
      expect_ident("x");
      lex_.expect(Tok::RParen, "')'");
      return Value{vp_recip()};
    }
    if (name == "Pf") return parse_pf();
    if (name == "H") {
      lex_.expect(Tok::LParen, "'('");
      int sign = 1;
      if (lex_.peek().kind == Tok::Minus) {
        lex_.eat();
        sign = -1;
      }
      expect_ident("x");
      lex_.expect(Tok::RParen, "')'");
      return Value{heaviside(sign)};
    }
    if (name == "sgn") {
      lex_.expect(Tok::LParen, "'('");
      expect_ident("x");
      lex_.expect(Tok::RParen, "')'");
      return Value{sgn()};
    }
    if (name == "log") {
      if (lex_.peek().kind == Tok::Bar) {
        parse_abs_x();
        return Value{log_abs()};
      }
      lex_.expect(Tok::LParen, "'('");
      expect_ident("x");
      lex_.expect(Tok::RParen, "')'");
      return Value{log_x()};
    }
    if (name == "delta") {
      int order = 0;
      while (lex_.peek().kind == Tok::Quote) {
        lex_.eat();
        ++order;
      }
      double shift = 0.0;
      if (lex_.peek().kind == Tok::LParen) {
        lex_.eat();
        shift = parse_signed_real();
        lex_.expect(Tok::RParen, "')'");
      }
      return Value{delta(order, shift)};
    }
    if (name == "exp") {
      lex_.expect(Tok::LParen, "'('");
      expect_ident("i");
      lex_.expect(Tok::Star, "'*'");
      const double a = parse_signed_real();
      lex_.expect(Tok::Star, "'*'");
      expect_ident("x");
      lex_.expect(Tok::RParen, "')'");
      return Value{harmonic(a)};
    }
    if (name == "rat") return Value{rational(parse_rat_body())};
    if (name == "pole") {
      // pole(re+im*i; mult) -- canonical render of Pf(x - z)^{-mult}
      lex_.expect(Tok::LParen, "'('");
      const double re = parse_signed_real();
      double im = 0.0;
      if (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
        im = parse_signed_real();
        lex_.expect(Tok::Star, "'*'");
        expect_ident("i");
      }
      lex_.expect(Tok::Semi, "';'");
      const Token m = lex_.expect(Tok::Number, "multiplicity");
      lex_.expect(Tok::RParen, "')'");
      return Value{Expression(
          1.0, pole_atom(Complex(re, im),
                         static_cast<int>(std::llround(m.num))))};
    }
    if (name == "kernel") {
      lex_.expect(Tok::LParen, "'('");
      const std::string kind = lex_.expect(Tok::Ident, "fermi|bose").text;
      if (kind != "fermi" && kind != "bose")
        lex_.fail("expected fermi or bose");
      lex_.expect(Tok::Semi, "';'");
      const double beta = parse_signed_real();
      lex_.expect(Tok::RParen, "')'");
      Expression e(1.0, kernel_atom(kind == "fermi" ? KernelKind::FermiSinh
                                                    : KernelKind::BoseCoth,
                                    beta));
      return Value{e};
    }
    lex_.fail("unknown identifier '" + name + "'");
  }

  void parse_abs_x() {
    lex_.expect(Tok::Bar, "'|'");
    expect_ident("x");
    lex_.expect(Tok::Bar, "'|'");
  }

  // Pf( x^g [*log|x|] | |x|^g [*log|x|] | H(+-x) (* factor)* )
  Value parse_pf() {
    lex_.expect(Tok::LParen, "'('");
    if (lex_.peek().kind == Tok::Bar) {
      parse_abs_x();
      lex_.expect(Tok::Caret, "'^'");
      const double g = parse_signed_real();
      bool with_log = false;
      if (lex_.peek().kind == Tok::Star) {
        lex_.eat();
        expect_ident("log");
        parse_abs_x();
        with_log = true;
      }
      lex_.expect(Tok::RParen, "')'");
      if (!with_log) return Value{pf_abs_power(g)};
      Expression e;
      e.terms.push_back({1.0, power_atom(Side::Positive, g, 1)});
      e.terms.push_back({1.0, power_atom(Side::Negative, g, 1)});
      return Value{e};
    }
    const Token& t = lex_.peek();
    if (t.kind == Tok::Ident && t.text == "x") {
      lex_.eat();
      lex_.expect(Tok::Caret, "'^'");
      const double g = parse_signed_real();
      bool with_log = false;
      if (lex_.peek().kind == Tok::Star) {
        lex_.eat();
        expect_ident("log");
        parse_abs_x();
        with_log = true;
      }
      lex_.expect(Tok::RParen, "')'");
      if (!with_log) return Value{pf_power(g)};
      if (!near_int(g)) lex_.fail("x^g*log|x| requires integer g");
      const auto n = std::llround(g);
      Expression e;
      e.terms.push_back({1.0, power_atom(Side::Positive, g, 1)});
      e.terms.push_back({(n % 2 == 0) ? 1.0 : -1.0,
                         power_atom(Side::Negative, g, 1)});
      return Value{e};
    }
    if (t.kind == Tok::Ident && t.text == "H") return parse_pf_halfline();
    lex_.fail("expected x^, |x|^ or H inside Pf(...)");
  }

  Value parse_pf_halfline() {
    expect_ident("H");
    lex_.expect(Tok::LParen, "'('");
    Side side = Side::Positive;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.eat();
      side = Side::Negative;
    }
    expect_ident("x");
    lex_.expect(Tok::RParen, "')'");
    double gamma = 0.0;
    int log_pow = 0;
    double omega = 0.0;
    double decay = 0.0;
    while (lex_.peek().kind == Tok::Star) {
      lex_.eat();
      const Token& t = lex_.peek();
      if (t.kind == Tok::Bar) {
        parse_abs_x();
        lex_.expect(Tok::Caret, "'^'");
        gamma = parse_signed_real();
      } else if (t.kind == Tok::Ident && t.text == "x") {
        lex_.eat();
        lex_.expect(Tok::Caret, "'^'");
        gamma = parse_signed_real();
      } else if (t.kind == Tok::Ident && t.text == "log") {
        lex_.eat();
        if (lex_.peek().kind == Tok::Bar) {
          parse_abs_x();
        } else {
          lex_.expect(Tok::LParen, "'('");
          expect_ident("x");
          lex_.expect(Tok::RParen, "')'");
        }
        log_pow = 1;
      } else if (t.kind == Tok::Ident && t.text == "exp") {
        lex_.eat();
        lex_.expect(Tok::LParen, "'('");
        lex_.expect(Tok::Minus, "'-'");
        if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "i") {
          lex_.eat();
          lex_.expect(Tok::Star, "'*'");
          omega = parse_signed_real();
          lex_.expect(Tok::Star, "'*'");
          expect_ident("x");
        } else {
          decay = parse_signed_real();
          lex_.expect(Tok::Star, "'*'");
          parse_abs_x();
        }
        lex_.expect(Tok::RParen, "')'");
      } else {
        lex_.fail("unexpected factor inside Pf(H(..)*...)");
      }
    }
    lex_.expect(Tok::RParen, "')'");
    return Value{Expression(1.0, power_atom(side, gamma, log_pow, omega,
                                            decay))};
  }

  // ---- polynomial sub-grammar for rat(P; Q)

  using Poly = std::vector<Complex>;

  static Poly poly_add(Poly a, const Poly& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0.0);
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
  }

  static Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
  }

  RationalSpec parse_rat_body() {
    lex_.expect(Tok::LParen, "'('");
    RationalSpec r;
    r.num = parse_poly();
    lex_.expect(Tok::Semi, "';'");
    r.den = parse_poly();
    lex_.expect(Tok::RParen, "')'");
    return r;
  }

  Poly parse_poly() {
    bool neg = false;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.eat();
      neg = true;
    }
    Poly acc = parse_poly_term();
    if (neg)
      for (auto& c : acc) c = -c;
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      const bool minus = lex_.eat().kind == Tok::Minus;
      Poly rhs = parse_poly_term();
      if (minus)
        for (auto& c : rhs) c = -c;
      acc = poly_add(std::move(acc), rhs);
    }
    return acc;
  }

  Poly parse_poly_term() {
    Poly acc = parse_poly_factor();
    while (lex_.peek().kind == Tok::Star) {
      lex_.eat();
      acc = poly_mul(acc, parse_poly_factor());
    }
    return acc;
  }

  Poly parse_poly_factor() {
    Poly base = parse_poly_base();
    if (lex_.peek().kind == Tok::Caret) {
      lex_.eat();
      const Token t = lex_.expect(Tok::Number, "integer exponent");
      if (!near_int(t.num) || t.num < 0) lex_.fail("integer exponent");
      Poly acc{Complex(1.0)};
      for (int k = 0; k < static_cast<int>(std::llround(t.num)); ++k)
        acc = poly_mul(acc, base);
      return acc;
    }
    return base;
  }

  Poly parse_poly_base() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Number) return Poly{Complex(lex_.eat().num, 0.0)};
    if (t.kind == Tok::Minus) {
      lex_.eat();
      Poly p = parse_poly_base();
      for (auto& c : p) c = -c;
      return p;
    }
    if (t.kind == Tok::Ident && t.text == "i") {
      lex_.eat();
      return Poly{Complex(0.0, 1.0)};
    }
    if (t.kind == Tok::Ident && t.text == "pi") {
      lex_.eat();
      return Poly{Complex(kPi, 0.0)};
    }
    if (t.kind == Tok::Ident && t.text == "x") {
      lex_.eat();
      return Poly{Complex(0.0), Complex(1.0)};
    }
    if (t.kind == Tok::LParen) {
      lex_.eat();
      Poly p = parse_poly();
      lex_.expect(Tok::RParen, "')'");
      return p;
    }
    lex_.fail("expected a polynomial factor");
  }

  // ---- value combinators

  static Value scale(Value v, Complex c) {
    if (v.scalar()) return Value{v.as_scalar() * c};
    return Value{c * v.as_expr()};
  }

  Value add(Value a, Value b) {
    if (a.scalar() && b.scalar())
      return Value{a.as_scalar() + b.as_scalar()};
    Expression ea = a.scalar() ? constant(a.as_scalar()) : a.as_expr();
    Expression eb = b.scalar() ? constant(b.as_scalar()) : b.as_expr();
    return Value{ea + eb};
  }

  Value mul(Value a, Value b) {
    if (a.scalar() && b.scalar())
      return Value{a.as_scalar() * b.as_scalar()};
    if (a.scalar()) return scale(b, a.as_scalar());
    if (b.scalar()) return scale(a, b.as_scalar());
    lex_.fail("product of two distributions is not representable");
  }
};

}  // namespace

Expression parse(const std::string& src) { return Parser(src).run(); }

std::optional<RationalSpec> try_parse_rational(const std::string& src) {
  try {
    return Parser(src).run_rational();
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

}  // namespace distcalc
