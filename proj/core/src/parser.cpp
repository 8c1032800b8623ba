#include "radsolve/parser.hpp"

#include "radsolve/errors.hpp"

#include <cctype>

namespace radsolve {

namespace {

constexpr unsigned long max_exponent = 4096;

std::string join(const std::vector<std::string> &items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i)
      out += i + 1 == items.size() ? " or " : ", ";
    out += items[i];
  }
  return out;
}

class Parser {
public:
  Parser(std::string_view text, ParseOptions options)
      : text_(text), options_(options) {}

  EquationAst equation() {
    Expr lhs = expr();
    expect('=', {"'='", "'+'", "'-'", "'*'", "'/'"});
    Expr rhs = expr();
    end({"'+'", "'-'", "'*'", "'/'", "end of input"});
    return {std::move(lhs), std::move(rhs)};
  }

  Expr single() {
    Expr e = expr();
    end({"'+'", "'-'", "'*'", "'/'", "end of input"});
    return e;
  }

private:
  Expr expr() {
    Expr acc = term();
    for (;;) {
      skip_space();
      if (peek() == '+') {
        ++pos_;
        acc = std::move(acc) + term();
      } else if (peek() == '-') {
        ++pos_;
        acc = std::move(acc) - term();
      } else {
        return acc;
      }
    }
  }

  Expr term() {
    Expr acc = factor();
    for (;;) {
      skip_space();
      if (peek() == '*') {
        ++pos_;
        acc = std::move(acc) * factor();
      } else if (peek() == '/') {
        ++pos_;
        acc = std::move(acc) / factor();
      } else {
        return acc;
      }
    }
  }

  Expr factor() {
    skip_space();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    Expr base = atom();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      base = Expr::power(std::move(base), exponent());
    }
    return negate ? -std::move(base) : base;
  }

  Expr atom() {
    skip_space();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)))
      return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return identifier();
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      expect(')', {"')'", "'+'", "'-'", "'*'", "'/'"});
      return inner;
    }
    fail(pos_, {"number", "'x'", "'sqrt'", "'('"});
  }

  Expr number() {
    std::string whole = digits();
    if (peek() == '.') {
      ++pos_;
      std::string frac = digits();
      if (frac.empty())
        fail(pos_, {"digit"});
      return Expr::constant(parse_rational(whole + "." + frac));
    }
    if (peek() == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      const std::size_t den_at = pos_ + 1;
      ++pos_;
      std::string den = digits();
      if (Integer(den, 10) == 0)
        throw SyntaxError(den_at, {"positive integer"},
                          "zero denominator in literal at offset " +
                              std::to_string(den_at));
      return Expr::constant(parse_rational(whole + "/" + den));
    }
    return Expr::constant(parse_rational(whole));
  }

  Expr identifier() {
    const std::size_t start = pos_;
    std::string name;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      name += text_[pos_++];
    if (name == "x")
      return Expr::variable();
    if (name == "sqrt") {
      expect('(', {"'('"});
      Expr inner = expr();
      expect(')', {"')'", "'+'", "'-'", "'*'", "'/'"});
      return sqrt(std::move(inner));
    }
    if (!options_.allow_parameters)
      throw SyntaxError(start, {"number", "'x'", "'sqrt'", "'('"},
                        "unknown identifier '" + name + "' at offset " +
                            std::to_string(start) +
                            " (parameters need bindings)");
    return Expr::parameter(std::move(name));
  }

  unsigned exponent() {
    const std::size_t start = pos_;
    std::string d = digits();
    if (d.empty())
      fail(pos_, {"non-negative integer exponent"});
    if (d.size() > 6 || std::stoul(d) > max_exponent)
      throw SyntaxError(start, {"exponent <= 4096"},
                        "exponent too large at offset " + std::to_string(start));
    return static_cast<unsigned>(std::stoul(d));
  }

  std::string digits() {
    std::string out;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      out += text_[pos_++];
    return out;
  }

  void expect(char c, std::vector<std::string> expected) {
    skip_space();
    if (peek() != c)
      fail(pos_, std::move(expected));
    ++pos_;
  }

  void end(std::vector<std::string> expected) {
    skip_space();
    if (pos_ != text_.size())
      fail(pos_, std::move(expected));
  }

  [[noreturn]] void fail(std::size_t at, std::vector<std::string> expected) {
    std::string found = at < text_.size()
                            ? "'" + std::string(1, text_[at]) + "'"
                            : std::string("end of input");
    std::string message = "syntax error at offset " + std::to_string(at) +
                          ": expected " + join(expected) + ", found " + found;
    throw SyntaxError(at, std::move(expected), message);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  ParseOptions options_;
  std::size_t pos_ = 0;
};

} // namespace

EquationAst parse_equation(std::string_view text, ParseOptions options) {
  return Parser(text, options).equation();
}

Expr parse_expression(std::string_view text, ParseOptions options) {
  return Parser(text, options).single();
}

} // namespace radsolve
