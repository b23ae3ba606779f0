#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace reducts {

enum class TermKind : std::uint8_t { Var, Zero, One, Not, And, Or, Xor, Median };

/// Syntax tree of a Boolean term over {&, |, !, ^, 0, 1, median}.
///
/// Children are held by value; a Term is an ordinary regular type and
/// comparing two terms compares the whole tree.
class Term {
public:
  static Term var(std::string name);
  static Term zero();
  static Term one();
  static Term negate(Term child);
  static Term conj(Term lhs, Term rhs);
  static Term disj(Term lhs, Term rhs);
  static Term exclusive_or(Term lhs, Term rhs);
  static Term median(Term a, Term b, Term c);

  TermKind kind() const noexcept { return kind_; }
  /// Variable name; empty unless kind() == TermKind::Var.
  const std::string& name() const noexcept { return name_; }
  const std::vector<Term>& children() const noexcept { return children_; }

  /// Variables in order of first occurrence (left to right, depth first).
  std::vector<std::string> variables() const;

  friend bool operator==(const Term&, const Term&) = default;

private:
  Term(TermKind kind, std::string name, std::vector<Term> children);

  TermKind kind_;
  std::string name_;
  std::vector<Term> children_;
};

/// True iff `name` is a legal variable identifier.
bool is_identifier(std::string_view name);

/// Parses `text` with precedence ! > & > ^ > |, binary operators left
/// associative. Throws ParseError.
Term parse(std::string_view text);

/// Boolean value of `term` on the two-element algebra; bit i of
/// `assignment` is the value of vars[i].
bool evaluate(const Term& term, const std::vector<std::string>& vars, std::uint64_t assignment);

/// Renders with the minimal parentheses needed to reparse to the same tree.
std::string render_term(const Term& term);

} // namespace reducts
