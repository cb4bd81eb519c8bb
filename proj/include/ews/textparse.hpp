#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ews/constraint.hpp"
#include "ews/formula.hpp"
#include "ews/rational.hpp"

namespace ews {

class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

namespace text {

inline bool ident_start(char c) { return std::isalpha(unsigned(c)) || c == '_'; }
inline bool ident_char(char c) {
  return std::isalnum(unsigned(c)) || c == '_' || c == '\'';
}

/// Whitespace-tolerant cursor over one logical statement.
class Cursor {
public:
  Cursor(std::string s, int line) : s_(std::move(s)), line_(line) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(unsigned(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool try_consume(const std::string& tok) {
    skip_ws();
    if (s_.compare(pos_, tok.size(), tok) != 0) return false;
    // A word token must not run into an identifier tail.
    if (ident_start(tok[0]) && pos_ + tok.size() < s_.size() &&
        ident_char(s_[pos_ + tok.size()]))
      return false;
    pos_ += tok.size();
    return true;
  }
  void expect(const std::string& tok) {
    if (!try_consume(tok)) fail("expected '" + tok + "'");
  }
  std::string ident() {
    skip_ws();
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    if (pos_ >= s_.size() || !std::isdigit(unsigned(s_[pos_])))
      fail("expected integer");
    while (pos_ < s_.size() && std::isdigit(unsigned(s_[pos_]))) ++pos_;
    return std::stoll(s_.substr(start, pos_ - start));
  }
  Rational rational() {
    std::int64_t num = integer();
    if (try_consume("/")) return Rational(num, integer());
    return Rational(num);
  }
  std::string rest() {
    skip_ws();
    return s_.substr(pos_);
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(line_, what + " near '" + s_.substr(pos_, 16) + "'");
  }
  int line() const { return line_; }

private:
  std::string s_;
  std::size_t pos_ = 0;
  int line_;
};

// Propositional formulas: implication (right-assoc) over 'or' over 'and'
// over 'not' over atoms and parentheses.
PropFormula parse_formula(Cursor& c);

inline PropFormula parse_formula_primary(Cursor& c) {
  if (c.try_consume("(")) {
    PropFormula f = parse_formula(c);
    c.expect(")");
    return f;
  }
  if (c.try_consume("not")) return PropFormula::negate(parse_formula_primary(c));
  return PropFormula::atom(c.ident());
}

inline PropFormula parse_formula_and(Cursor& c) {
  std::vector<PropFormula> kids{parse_formula_primary(c)};
  while (c.try_consume("and")) kids.push_back(parse_formula_primary(c));
  return kids.size() == 1 ? kids[0] : PropFormula::conj(std::move(kids));
}

inline PropFormula parse_formula_or(Cursor& c) {
  std::vector<PropFormula> kids{parse_formula_and(c)};
  while (c.try_consume("or")) kids.push_back(parse_formula_and(c));
  return kids.size() == 1 ? kids[0] : PropFormula::disj(std::move(kids));
}

inline PropFormula parse_formula(Cursor& c) {
  PropFormula lhs = parse_formula_or(c);
  if (c.try_consume("->")) return PropFormula::implies(lhs, parse_formula(c));
  return lhs;
}

inline PropFormula parse_formula(const std::string& s, int line) {
  Cursor c(s, line);
  PropFormula f = parse_formula(c);
  if (!c.at_end()) c.fail("trailing input after formula");
  return f;
}

/// Linear side: term (+/- term)*, term = [int *] var | int.  Returns the
/// variable coefficients and the accumulated constant.
inline void parse_linear_side(Cursor& c,
                              std::map<std::string, std::int64_t>& coeffs,
                              std::int64_t& constant, std::int64_t sign) {
  bool first = true;
  for (;;) {
    std::int64_t term_sign = sign;
    if (c.try_consume("+")) {
    } else if (c.try_consume("-")) {
      term_sign = -term_sign;
    } else if (!first) {
      break;
    }
    first = false;
    char p = c.peek();
    if (std::isdigit(unsigned(p))) {
      std::int64_t k = c.integer();
      if (c.try_consume("*")) {
        coeffs[c.ident()] += term_sign * k;
      } else {
        constant += term_sign * k;
      }
    } else if (ident_start(p)) {
      coeffs[c.ident()] += term_sign;
    } else {
      c.fail("expected linear term");
    }
  }
}

/// lhs rel rhs with linear expressions on both sides, normalized to
/// coeffs . x rel constant.
inline LinearConstraint parse_linear_constraint(Cursor& c) {
  std::map<std::string, std::int64_t> coeffs;
  std::int64_t constant = 0;
  parse_linear_side(c, coeffs, constant, +1);
  Rel rel;
  if (c.try_consume("<=")) rel = Rel::Le;
  else if (c.try_consume(">=")) rel = Rel::Ge;
  else if (c.try_consume("!=")) rel = Rel::Ne;
  else if (c.try_consume("<")) rel = Rel::Lt;
  else if (c.try_consume(">")) rel = Rel::Gt;
  else if (c.try_consume("=")) rel = Rel::Eq;
  else { c.fail("expected relation"); }
  parse_linear_side(c, coeffs, constant, -1);
  LinearConstraint out;
  for (const auto& [v, b] : coeffs)
    if (b != 0) out.terms.push_back({b, v});
  out.rel = rel;
  out.rhs = -constant;
  return out;
}

inline LinearConstraint parse_linear_constraint(const std::string& s, int line) {
  Cursor c(s, line);
  LinearConstraint lc = parse_linear_constraint(c);
  if (!c.at_end()) c.fail("trailing input after constraint");
  return lc;
}

/// Splits text into (line-number, trimmed-content) pairs, dropping blank
/// lines and lines whose first non-space char starts a comment.
inline std::vector<std::pair<int, std::string>> logical_lines(
    const std::string& text, const std::string& comment_prefix) {
  std::vector<std::pair<int, std::string>> out;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
    ++lineno;
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a != std::string::npos) {
      std::size_t b = line.find_last_not_of(" \t\r");
      std::string trimmed = line.substr(a, b - a + 1);
      if (comment_prefix.empty() ||
          trimmed.compare(0, comment_prefix.size(), comment_prefix) != 0)
        out.push_back({lineno, trimmed});
    }
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return out;
}

}  // namespace text
}  // namespace ews
