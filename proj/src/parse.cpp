#include "ginv/parse.hpp"

#include <cctype>
#include <variant>

namespace ginv {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

using Value = std::variant<ExpPoly, BoundaryFunctional>;

enum class Mode { kExpression, kOperator };

class Parser {
 public:
  Parser(std::string_view text, Mode mode) : text_(text), mode_(mode) {}

  Value parse() {
    skip();
    if (pos_ == text_.size()) fail("empty expression");
    Value v = expr();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return v;
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& message) const {
    int line = 1, column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ == text_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  bool keyword(std::string_view word) {
    skip();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(pos_ == text_.size() ? "unexpected end of input" : "expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  int small_integer() {
    const std::size_t at = pos_;
    const mpz_class n = integer();
    if (!n.fits_sint_p() || n > 1000000) fail_at(at, "integer too large");
    return static_cast<int>(n.get_si());
  }

  static const ExpPoly* as_function(const Value& v) { return std::get_if<ExpPoly>(&v); }

  RatFuncE constant(const Value& v, std::size_t at, const char* what) const {
    const ExpPoly* f = as_function(v);
    if (f == nullptr || !f->is_constant()) fail_at(at, std::string(what) + " must be a constant");
    return f->constant_value();
  }

  Value expr() {
    Value v = term();
    for (;;) {
      const bool plus = peek('+');
      if (!plus && !peek('-')) return v;
      const std::size_t op_at = pos_;
      ++pos_;
      Value r = term();
      if (v.index() != r.index()) fail_at(op_at, "cannot add a function and a functional");
      if (const ExpPoly* f = as_function(v)) {
        v = plus ? *f + std::get<ExpPoly>(r) : *f - std::get<ExpPoly>(r);
      } else {
        const auto& b = std::get<BoundaryFunctional>(v);
        v = plus ? b + std::get<BoundaryFunctional>(r) : b - std::get<BoundaryFunctional>(r);
      }
    }
  }

  Value term() {
    skip();
    const std::size_t left_at = pos_;
    Value v = unary();
    for (;;) {
      const bool mul = peek('*');
      if (!mul && !peek('/')) return v;
      ++pos_;
      skip();
      const std::size_t right_at = pos_;
      Value r = unary();
      if (mul) {
        v = multiply(v, left_at, r, right_at);
      } else {
        const RatFuncE c = constant(r, right_at, "divisor");
        if (c.is_zero()) fail_at(right_at, "division by zero");
        v = scale(v, inverse(c));
      }
    }
  }

  static Value scale(const Value& v, const RatFuncE& c) {
    if (const ExpPoly* f = as_function(v)) return *f * c;
    return std::get<BoundaryFunctional>(v) * c;
  }

  Value multiply(const Value& l, std::size_t l_at, const Value& r, std::size_t r_at) const {
    const ExpPoly* lf = as_function(l);
    const ExpPoly* rf = as_function(r);
    if (lf && rf) return *lf * *rf;
    if (!lf && !rf) fail_at(r_at, "cannot multiply two functionals");
    if (lf) return scale(r, constant(l, l_at, "factor of a functional"));
    return scale(l, constant(r, r_at, "factor of a functional"));
  }

  Value unary() {
    if (accept('-')) return scale(unary(), RatFuncE(-1));
    return power();
  }

  Value power() {
    skip();
    const std::size_t at = pos_;
    Value v = primary();
    if (!accept('^')) return v;
    const bool negative = accept('-');
    const int n = small_integer();
    const ExpPoly* f = as_function(v);
    if (f == nullptr) fail_at(at, "a functional cannot be raised to a power");
    if (negative) {
      const RatFuncE c = constant(v, at, "base of a negative power");
      if (c.is_zero()) fail_at(at, "division by zero");
      return ExpPoly(pow(c, -n));
    }
    ExpPoly out(1);
    for (int i = 0; i < n; ++i) out *= *f;
    return out;
  }

  Value primary() {
    skip();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return ExpPoly(RatFuncE(Rational(mpq_class(integer()))));
    if (accept('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    if (mode_ == Mode::kOperator) {
      if (keyword("D")) return ExpPoly::x();
      fail(std::string("unexpected character '") + c + "'");
    }
    if (keyword("exp")) {
      expect('(');
      skip();
      const std::size_t arg_at = pos_;
      Value arg = expr();
      expect(')');
      return ExpPoly::exp(exponent(arg, arg_at));
    }
    if (keyword("int")) {
      expect('(');
      skip();
      const std::size_t arg_at = pos_;
      Value w = expr();
      expect(')');
      const ExpPoly* f = as_function(w);
      if (f == nullptr) fail_at(arg_at, "integral weight must be a function");
      return BoundaryFunctional::integral(*f);
    }
    if (keyword("e")) return ExpPoly(RatFuncE::e_power(1));
    if (keyword("x")) return ExpPoly::x();
    if (c == 'E' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '[') {
      pos_ += 2;
      skip();
      const std::size_t point_at = pos_;
      const int point = small_integer();
      if (point != 0 && point != 1) fail_at(point_at, "evaluation point must be 0 or 1");
      expect(']');
      int order = 0;
      if (accept('D')) {
        order = 1;
        if (accept('^')) order = small_integer();
      }
      return BoundaryFunctional::eval(point, order);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      fail("unknown identifier '" + std::string(text_.substr(pos_, end - pos_)) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  int exponent(const Value& arg, std::size_t at) const {
    const ExpPoly* f = as_function(arg);
    if (f == nullptr) fail_at(at, "exp expects an integer multiple of x");
    if (f->is_zero()) return 0;
    if (f->terms().size() != 1 || f->terms().begin()->first != ExpKey{0, 1})
      fail_at(at, "exp expects an integer multiple of x");
    const auto r = f->terms().begin()->second.as_rational();
    if (!r || !r->is_integer() || !r->numerator().fits_sint_p()) fail_at(at, "exp expects an integer multiple of x");
    return static_cast<int>(r->numerator().get_si());
  }

  std::string_view text_;
  Mode mode_;
  std::size_t pos_ = 0;
};

}  // namespace

ExpPoly parse_exppoly(std::string_view text) {
  Parser p(text, Mode::kExpression);
  Value v = p.parse();
  if (auto* f = std::get_if<ExpPoly>(&v)) return *f;
  p.fail_at(0, "expected a function, found a functional");
}

BoundaryFunctional parse_functional(std::string_view text) {
  Parser p(text, Mode::kExpression);
  Value v = p.parse();
  if (auto* b = std::get_if<BoundaryFunctional>(&v)) return *b;
  const ExpPoly& f = std::get<ExpPoly>(v);
  if (f.is_zero()) return {};
  p.fail_at(0, "expected a functional, found a function");
}

RatFuncE parse_scalar(std::string_view text) {
  Parser p(text, Mode::kExpression);
  Value v = p.parse();
  const auto* f = std::get_if<ExpPoly>(&v);
  if (f == nullptr || !f->is_constant()) p.fail_at(0, "expected a constant");
  return f->constant_value();
}

Rational parse_rational(std::string_view text) {
  Parser p(text, Mode::kExpression);
  const RatFuncE c = parse_scalar(text);
  const auto r = c.as_rational();
  if (!r) p.fail_at(0, "expected a rational number");
  return *r;
}

DiffOp parse_diffop(std::string_view text) {
  Parser p(text, Mode::kOperator);
  const ExpPoly f = std::get<ExpPoly>(p.parse());
  std::vector<Rational> coeffs;
  for (const auto& [key, c] : f.terms()) {
    const auto r = c.as_rational();
    if (!r) p.fail_at(0, "operator coefficients must be rational");
    if (coeffs.size() <= static_cast<std::size_t>(key.k)) coeffs.resize(static_cast<std::size_t>(key.k) + 1, Rational(0));
    coeffs[static_cast<std::size_t>(key.k)] = *r;
  }
  try {
    return DiffOp(std::move(coeffs));
  } catch (const std::invalid_argument& e) {
    p.fail_at(0, e.what());
  }
}

}  // namespace ginv
