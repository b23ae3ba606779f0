#include "reducts/term.hpp"

#include "reducts/error.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace reducts {

ParseError::ParseError(std::size_t offset, std::string message, std::string input)
    : Error("parse error at offset " + std::to_string(offset) + ": " + message),
      offset_(offset), message_(std::move(message)), input_(std::move(input)) {}

std::string ParseError::excerpt() const {
  std::string caret(offset_ > 0 ? offset_ - 1 : 0, ' ');
  caret += '^';
  return input_ + "\n" + caret;
}

Term::Term(TermKind kind, std::string name, std::vector<Term> children)
    : kind_(kind), name_(std::move(name)), children_(std::move(children)) {}

Term Term::var(std::string name) {
  if (!is_identifier(name)) {
    throw Error("invalid variable name '" + name + "'");
  }
  return Term(TermKind::Var, std::move(name), {});
}

Term Term::zero() { return Term(TermKind::Zero, {}, {}); }
Term Term::one() { return Term(TermKind::One, {}, {}); }

Term Term::negate(Term child) {
  std::vector<Term> c;
  c.push_back(std::move(child));
  return Term(TermKind::Not, {}, std::move(c));
}

Term Term::conj(Term lhs, Term rhs) {
  std::vector<Term> c;
  c.push_back(std::move(lhs));
  c.push_back(std::move(rhs));
  return Term(TermKind::And, {}, std::move(c));
}

Term Term::disj(Term lhs, Term rhs) {
  std::vector<Term> c;
  c.push_back(std::move(lhs));
  c.push_back(std::move(rhs));
  return Term(TermKind::Or, {}, std::move(c));
}

Term Term::exclusive_or(Term lhs, Term rhs) {
  std::vector<Term> c;
  c.push_back(std::move(lhs));
  c.push_back(std::move(rhs));
  return Term(TermKind::Xor, {}, std::move(c));
}

Term Term::median(Term a, Term b, Term c) {
  std::vector<Term> ch;
  ch.push_back(std::move(a));
  ch.push_back(std::move(b));
  ch.push_back(std::move(c));
  return Term(TermKind::Median, {}, std::move(ch));
}

std::vector<std::string> Term::variables() const {
  std::vector<std::string> out;
  std::vector<const Term*> stack{this};
  while (!stack.empty()) {
    const Term* t = stack.back();
    stack.pop_back();
    if (t->kind_ == TermKind::Var) {
      if (std::find(out.begin(), out.end(), t->name_) == out.end()) {
        out.push_back(t->name_);
      }
      continue;
    }
    for (auto it = t->children_.rbegin(); it != t->children_.rend(); ++it) {
      stack.push_back(&*it);
    }
  }
  return out;
}

bool is_identifier(std::string_view name) {
  if (name.empty() || name == "median") {
    return false;
  }
  auto head = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(head) || head == '_')) {
    return false;
  }
  return std::all_of(name.begin() + 1, name.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || c == '_';
  });
}

bool evaluate(const Term& term, const std::vector<std::string>& vars, std::uint64_t assignment) {
  const auto& c = term.children();
  switch (term.kind()) {
  case TermKind::Var: {
    auto it = std::find(vars.begin(), vars.end(), term.name());
    if (it == vars.end()) {
      throw Error("variable '" + term.name() + "' has no value");
    }
    return (assignment >> (it - vars.begin())) & 1u;
  }
  case TermKind::Zero:
    return false;
  case TermKind::One:
    return true;
  case TermKind::Not:
    return !evaluate(c[0], vars, assignment);
  case TermKind::And:
    return evaluate(c[0], vars, assignment) && evaluate(c[1], vars, assignment);
  case TermKind::Or:
    return evaluate(c[0], vars, assignment) || evaluate(c[1], vars, assignment);
  case TermKind::Xor:
    return evaluate(c[0], vars, assignment) != evaluate(c[1], vars, assignment);
  case TermKind::Median: {
    const int ones = int(evaluate(c[0], vars, assignment)) + int(evaluate(c[1], vars, assignment)) +
                     int(evaluate(c[2], vars, assignment));
    return ones >= 2;
  }
  }
  return false;
}

namespace {

// Binding strength; higher binds tighter.
int level(TermKind kind) {
  switch (kind) {
  case TermKind::Or:
    return 1;
  case TermKind::Xor:
    return 2;
  case TermKind::And:
    return 3;
  case TermKind::Not:
    return 4;
  default:
    return 5;
  }
}

const char* symbol(TermKind kind) {
  switch (kind) {
  case TermKind::Or:
    return " | ";
  case TermKind::Xor:
    return " ^ ";
  default:
    return " & ";
  }
}

void render(const Term& t, std::string& out);

void render_operand(const Term& t, bool parenthesize, std::string& out) {
  if (parenthesize) {
    out += '(';
    render(t, out);
    out += ')';
  } else {
    render(t, out);
  }
}

void render(const Term& t, std::string& out) {
  switch (t.kind()) {
  case TermKind::Var:
    out += t.name();
    return;
  case TermKind::Zero:
    out += '0';
    return;
  case TermKind::One:
    out += '1';
    return;
  case TermKind::Not:
    out += '!';
    render_operand(t.children()[0], level(t.children()[0].kind()) < level(TermKind::Not), out);
    return;
  case TermKind::Median:
    out += "median(";
    for (std::size_t i = 0; i < 3; ++i) {
      if (i) {
        out += ',';
      }
      render(t.children()[i], out);
    }
    out += ')';
    return;
  case TermKind::And:
  case TermKind::Or:
  case TermKind::Xor: {
    const int own = level(t.kind());
    // Left associative: a right operand at the same level keeps its parens.
    render_operand(t.children()[0], level(t.children()[0].kind()) < own, out);
    out += symbol(t.kind());
    render_operand(t.children()[1], level(t.children()[1].kind()) <= own, out);
    return;
  }
  }
}

} // namespace

std::string render_term(const Term& term) {
  std::string out;
  render(term, out);
  return out;
}

} // namespace reducts
