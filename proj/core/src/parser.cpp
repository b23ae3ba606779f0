#include "reducts/error.hpp"
#include "reducts/term.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

namespace reducts {
namespace {

enum class Tok { Ident, Zero, One, Not, And, Or, Xor, LParen, RParen, Comma, Median, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset; // 1-based
};

std::string describe(const Token& t) {
  switch (t.kind) {
  case Tok::End:
    return "end of input";
  case Tok::Ident:
    return "identifier '" + t.text + "'";
  default:
    return "'" + t.text + "'";
  }
}

std::vector<Token> tokenize(std::string_view text, const std::string& input) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t at = i + 1;
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      std::string word(text.substr(i, j - i));
      out.push_back({word == "median" ? Tok::Median : Tok::Ident, std::move(word), at});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
    case '0':
      kind = Tok::Zero;
      break;
    case '1':
      kind = Tok::One;
      break;
    case '!':
      kind = Tok::Not;
      break;
    case '&':
      kind = Tok::And;
      break;
    case '|':
      kind = Tok::Or;
      break;
    case '^':
      kind = Tok::Xor;
      break;
    case '(':
      kind = Tok::LParen;
      break;
    case ')':
      kind = Tok::RParen;
      break;
    case ',':
      kind = Tok::Comma;
      break;
    default:
      throw ParseError(at, std::string("unknown character '") + static_cast<char>(c) + "'",
                       input);
    }
    out.push_back({kind, std::string(1, static_cast<char>(c)), at});
    ++i;
  }
  out.push_back({Tok::End, {}, text.size() + 1});
  return out;
}

class Parser {
public:
  Parser(std::vector<Token> tokens, std::string input)
      : tokens_(std::move(tokens)), input_(std::move(input)) {}

  Term parse_all() {
    Term t = parse_or();
    if (peek().kind == Tok::RParen) {
      fail(peek(), "unbalanced parenthesis: unexpected ')'");
    }
    if (peek().kind != Tok::End) {
      fail(peek(), "expected an operator or end of input, found " + describe(peek()));
    }
    return t;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const Token& at, std::string message) const {
    throw ParseError(at.offset, std::move(message), input_);
  }

  Term parse_or() {
    Term lhs = parse_xor();
    while (peek().kind == Tok::Or) {
      advance();
      lhs = Term::disj(std::move(lhs), parse_xor());
    }
    return lhs;
  }

  Term parse_xor() {
    Term lhs = parse_and();
    while (peek().kind == Tok::Xor) {
      advance();
      lhs = Term::exclusive_or(std::move(lhs), parse_and());
    }
    return lhs;
  }

  Term parse_and() {
    Term lhs = parse_unary();
    while (peek().kind == Tok::And) {
      advance();
      lhs = Term::conj(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Term parse_unary() {
    if (peek().kind == Tok::Not) {
      advance();
      return Term::negate(parse_unary());
    }
    return parse_atom();
  }

  Term parse_atom() {
    const Token& t = advance();
    switch (t.kind) {
    case Tok::Zero:
      return Term::zero();
    case Tok::One:
      return Term::one();
    case Tok::Ident:
      return Term::var(t.text);
    case Tok::LParen: {
      Term inner = parse_or();
      if (peek().kind != Tok::RParen) {
        fail(peek(), "unbalanced parenthesis: expected ')' to close '(' at offset " +
                         std::to_string(t.offset) + ", found " + describe(peek()));
      }
      advance();
      return inner;
    }
    case Tok::Median:
      return parse_median(t);
    case Tok::RParen:
      fail(t, "unbalanced parenthesis: unexpected ')'");
    default:
      fail(t, "expected a term (variable, 0, 1, '!', '(' or median), found " + describe(t));
    }
  }

  Term parse_median(const Token& keyword) {
    if (peek().kind != Tok::LParen) {
      fail(peek(), "expected '(' after median, found " + describe(peek()));
    }
    const Token& open = advance();
    std::vector<Term> args;
    if (peek().kind != Tok::RParen) {
      args.push_back(parse_or());
    }
    while (!args.empty() && peek().kind == Tok::Comma) {
      advance();
      args.push_back(parse_or());
    }
    if (peek().kind != Tok::RParen) {
      fail(peek(), "unbalanced parenthesis: expected ',' or ')' to close '(' at offset " +
                       std::to_string(open.offset) + ", found " + describe(peek()));
    }
    advance();
    if (args.size() != 3) {
      fail(keyword, "median expects 3 arguments, got " + std::to_string(args.size()));
    }
    return Term::median(std::move(args[0]), std::move(args[1]), std::move(args[2]));
  }

  std::vector<Token> tokens_;
  std::string input_;
  std::size_t pos_ = 0;
};

} // namespace

Term parse(std::string_view text) {
  std::string input(text);
  Parser parser(tokenize(text, input), input);
  return parser.parse_all();
}

} // namespace reducts
