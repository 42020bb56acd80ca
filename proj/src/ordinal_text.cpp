#include "cb/ordinal_text.hpp"

#include <cctype>
#include <limits>

namespace cb {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ordinal run() {
    Ordinal value = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::uint64_t parse_nat() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected a natural number", pos_);
    }
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        throw ParseError("natural number too large", pos_);
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  Ordinal parse_sum() {
    Ordinal value = parse_prod();
    while (eat('+')) value = value + parse_prod();
    return value;
  }

  Ordinal parse_prod() {
    Ordinal value = parse_atom();
    if (eat('*')) value = value * Ordinal(parse_nat());
    return value;
  }

  Ordinal parse_atom() {
    char c = peek();
    if (c == 'w') {
      ++pos_;
      if (eat('^')) return omega_pow(parse_atom());
      return Ordinal::omega();
    }
    if (c == '(') {
      ++pos_;
      Ordinal inner = parse_sum();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Ordinal(parse_nat());
    throw ParseError("expected 'w', a number, or '('", pos_);
  }
};

// An exponent prints without parentheses exactly when its rendering is a
// single atom: a bare natural, "w", or a right-nested "w^atom" power.
bool is_atom_exponent(const Ordinal& e) {
  if (e.is_finite()) return true;
  if (e.terms().size() != 1) return false;
  const auto& t = e.terms()[0];
  if (t.coefficient != 1) return false;
  return is_atom_exponent(t.exponent);
}

void print_term(const Ordinal::Term& t, std::string& out) {
  if (t.exponent.is_zero()) {
    out += std::to_string(t.coefficient);
    return;
  }
  out += 'w';
  if (!(t.exponent == Ordinal(1))) {
    out += '^';
    if (is_atom_exponent(t.exponent)) {
      print_term(t.exponent.terms()[0], out);
    } else {
      out += '(';
      // Nested sums print compactly, without spaces around '+'.
      const auto& ts = t.exponent.terms();
      for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i > 0) out += '+';
        print_term(ts[i], out);
      }
      out += ')';
    }
  }
  if (t.coefficient != 1) {
    out += '*';
    out += std::to_string(t.coefficient);
  }
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return Parser(text).run(); }

std::string print_ordinal(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  const auto& ts = a.terms();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i > 0) out += " + ";
    print_term(ts[i], out);
  }
  return out;
}

}  // namespace cb
