// Recursive-descent parser for coefficient expressions.
//
// Grammar (whitespace-insensitive):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('-')? atom ('^' ('-')? integer)?
//   atom   := integer | identifier | '(' expr ')'
// Adjacency of an integer and an identifier ("2t") is implicit multiplication.
#pragma once

#include <cctype>
#include <set>
#include <string>
#include <string_view>

#include "degver/rational_function.hpp"

namespace degver {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

class UnknownIdentifierError : public ParseError {
 public:
  UnknownIdentifierError(const std::string& name, size_t position)
      : ParseError("unknown identifier '" + name + "'", position) {}
};

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, const std::set<std::string>& allowed)
      : text_(text), allowed_(allowed) {}

  RationalFunction parse() {
    RationalFunction v = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return v;
  }

 private:
  RationalFunction expr() {
    RationalFunction v = term();
    for (;;) {
      skip_ws();
      if (consume('+'))
        v += term();
      else if (consume('-'))
        v -= term();
      else
        return v;
    }
  }

  RationalFunction term() {
    RationalFunction v = factor();
    for (;;) {
      skip_ws();
      if (consume('*')) {
        v *= factor();
      } else if (consume('/')) {
        size_t at = pos_;
        RationalFunction d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        v /= d;
      } else {
        return v;
      }
    }
  }

  RationalFunction factor() {
    skip_ws();
    bool neg = consume('-');
    RationalFunction v = powered_atom();
    // implicit multiplication: integer literal immediately followed by identifier
    while (last_atom_was_integer_ && peek_is_ident_start()) v *= powered_atom();
    return neg ? -v : v;
  }

  RationalFunction powered_atom() {
    RationalFunction v = atom();
    bool was_int = last_atom_was_integer_;
    skip_ws();
    if (consume('^')) {
      skip_ws();
      bool eneg = consume('-');
      size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("expected integer exponent", at);
      long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        e = e * 10 + (text_[pos_++] - '0');
      if (eneg && v.is_zero()) throw ParseError("zero to a negative power", at);
      v = v.pow(static_cast<int>(eneg ? -e : e));
      last_atom_was_integer_ = false;
    } else {
      last_atom_was_integer_ = was_int;
    }
    return v;
  }

  RationalFunction atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      last_atom_was_integer_ = true;
      return RationalFunction(
          Rational::from_string(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (allowed_.find(name) == allowed_.end()) throw UnknownIdentifierError(name, start);
      last_atom_was_integer_ = false;
      return RationalFunction::variable(name);
    }
    if (c == '(') {
      ++pos_;
      RationalFunction v = expr();
      skip_ws();
      if (!consume(')')) throw ParseError("expected ')'", pos_);
      last_atom_was_integer_ = false;
      return v;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  bool peek_is_ident_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view text_;
  const std::set<std::string>& allowed_;
  size_t pos_ = 0;
  bool last_atom_was_integer_ = false;
};

}  // namespace detail

/// Parses a coefficient expression over the given indeterminates.
inline RationalFunction parse_expr(std::string_view text, const std::set<std::string>& allowed) {
  return detail::ExprParser(text, allowed).parse();
}

}  // namespace degver
