#pragma once

#include "reducts/term.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace reducts {

/// Set of variable indices; bit i set means x_i occurs. 0 is the constant 1.
using Monomial = std::uint32_t;

inline constexpr std::size_t kMaxVariables = 32;

inline int degree(Monomial m) noexcept { return std::popcount(m); }

/// Canonical monomial order: by degree, then lexicographically by the
/// ascending index lists.
bool canonical_less(Monomial a, Monomial b) noexcept;

/// A term function in algebraic normal form: a multilinear polynomial over
/// GF(2) in a fixed, named list of variables. The monomial list is kept
/// duplicate-free and in canonical order, so equality is structural.
class Anf {
public:
  /// The zero polynomial in no variables.
  Anf() = default;

  /// Sum of `monomials` modulo 2; a monomial listed twice cancels.
  Anf(std::vector<std::string> vars, std::vector<Monomial> monomials);

  static Anf zero(std::vector<std::string> vars);
  static Anf one(std::vector<std::string> vars);
  static Anf variable(std::vector<std::string> vars, std::size_t index);

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t variable_count() const noexcept { return vars_.size(); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

  bool is_zero() const noexcept { return monomials_.empty(); }
  bool contains(Monomial m) const noexcept;
  /// Largest monomial degree; -1 for the zero polynomial.
  int degree() const noexcept;
  /// Union of all monomials: the essential variables.
  Monomial support() const noexcept;

  friend bool operator==(const Anf&, const Anf&) = default;

private:
  std::vector<std::string> vars_;
  std::vector<Monomial> monomials_;
};

struct ConstantShape {
  bool value;
  friend bool operator==(const ConstantShape&, const ConstantShape&) = default;
};
struct ProjectionShape {
  std::size_t variable;
  friend bool operator==(const ProjectionShape&, const ProjectionShape&) = default;
};
/// x_1 + ... + x_m + alpha with m >= 1 essential variables.
struct LinearShape {
  std::size_t essential;
  bool alpha;
  friend bool operator==(const LinearShape&, const LinearShape&) = default;
};
struct NonLinearShape {
  friend bool operator==(const NonLinearShape&, const NonLinearShape&) = default;
};

using Shape = std::variant<ConstantShape, ProjectionShape, LinearShape, NonLinearShape>;

/// Normal form of `term` over `order`, which must list every variable of
/// the term exactly once (extra variables are allowed).
Anf to_anf(const Term& term, const std::vector<std::string>& order);
/// Normal form using the term's first-occurrence variable order.
Anf to_anf(const Term& term);

Anf add(const Anf& f, const Anf& g);
Anf mul(const Anf& f, const Anf& g);
inline Anf operator+(const Anf& f, const Anf& g) { return add(f, g); }
inline Anf operator*(const Anf& f, const Anf& g) { return mul(f, g); }

/// Substitutes subs[i] for x_i. All substitutes share one variable list,
/// which becomes the variable list of the result.
Anf compose(const Anf& f, std::span<const Anf> subs);

/// Replaces x_j by x_i (i < j) and drops x_j; indices above j shift down.
Anf identify(const Anf& f, std::size_t i, std::size_t j);

/// Replaces x_i by a constant and drops x_i.
Anf restrict_variable(const Anf& f, std::size_t i, bool value);

/// Re-expresses `f` over `vars`, which must contain every variable of f.
Anf embed(const Anf& f, const std::vector<std::string>& vars);

/// f(x + c, ..., x + c) + f(x, ..., x) with a fresh variable c appended.
Anf translation_defect(const Anf& f);

/// Name for a fresh variable not in `taken`, preferring `base`.
std::string fresh_name(const std::vector<std::string>& taken, const std::string& base);

/// Value on the two-element algebra; bit i of `assignment` is x_i.
bool evaluate(const Anf& f, std::uint64_t assignment);

Shape shape(const Anf& f);

/// Canonical text: "1 + x + x*y", "0" for the zero polynomial.
std::string render_anf(const Anf& f);

/// Sorted index list of a monomial.
std::vector<std::size_t> indices(Monomial m);

} // namespace reducts
