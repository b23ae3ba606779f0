#pragma once

#include "reducts/anf.hpp"
#include "reducts/lattice.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace reducts {

/// An element of the Boolean algebra with n atoms, read as a set of atoms.
using Element = std::uint8_t;

inline constexpr unsigned kMaxAtoms = 4;

/// The Boolean algebra on {0, ..., 2^n - 1} with bitwise operations.
class FiniteBooleanAlgebra {
public:
  explicit FiniteBooleanAlgebra(unsigned atoms);

  unsigned atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return std::size_t{1} << atoms_; }
  Element bottom() const noexcept { return 0; }
  Element top() const noexcept { return static_cast<Element>(size() - 1); }

  Element meet(Element a, Element b) const noexcept { return a & b; }
  Element join(Element a, Element b) const noexcept { return a | b; }
  Element complement(Element a) const noexcept { return a ^ top(); }
  Element add(Element a, Element b) const noexcept { return a ^ b; }

private:
  unsigned atoms_;
};

/// A bijection of {0, ..., size-1}, stored as its image array.
class Permutation {
public:
  /// Throws Error unless `images` is a bijection.
  explicit Permutation(std::vector<Element> images);
  static Permutation identity(std::size_t size);

  std::size_t size() const noexcept { return images_.size(); }
  Element operator()(Element x) const { return images_[x]; }
  const std::vector<Element>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Element> images) : images_(std::move(images)) {}
  friend Permutation operator*(const Permutation&, const Permutation&);

  std::vector<Element> images_;
};

/// Composition: (p * q)(x) = p(q(x)).
Permutation operator*(const Permutation& p, const Permutation& q);

/// Translation by c: x -> x + c.
Permutation translation(Element c, unsigned atoms);

/// A permutation group on the 2^n elements, stored as its sorted element list.
class FiniteGroup {
public:
  /// Sorts and de-duplicates; closure is the caller's responsibility (see
  /// is_closed).
  FiniteGroup(unsigned atoms, std::vector<Permutation> elements);

  unsigned atoms() const noexcept { return atoms_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  bool contains(const Permutation& p) const;
  /// Contains the identity and is closed under composition and inverse.
  bool is_closed() const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

private:
  unsigned atoms_;
  std::vector<Permutation> elements_;
};

/// Groups constructed directly from their definition.
enum class GroupKind {
  Sym,
  AutBa,
  Translations,
  Stab0,
  Stab1,
  Stab01,
  NegCentralizer,
  Gl,
  Gl1,
  SigmaGroup,
  Sigma1Group,
  MedianGroup,
  Neg01,
  Lin01,
};

std::string_view name(GroupKind kind);
std::optional<GroupKind> group_kind_from_name(std::string_view name);
/// The builtin group expected to be the stabilizer of a class representative.
GroupKind group_kind_for(ReductNode node);

/// Explicit construction for 1 <= atoms <= 3.
FiniteGroup builtin_group(GroupKind kind, unsigned atoms);

/// Value of f on the algebra with `atoms` atoms: the sum over monomials of
/// the meet of the assigned elements.
Element eval_anf(const Anf& f, std::span<const Element> assignment, unsigned atoms);

/// Value of `term` on the n-atom algebra computed directly from the lattice
/// operations (no normal form involved).
Element evaluate_term(const Term& term, const std::vector<std::string>& vars,
                      std::span<const Element> assignment, unsigned atoms);

/// All values of a k-ary term function on the n-atom algebra. Tuple
/// (a_0, ..., a_{k-1}) has index sum a_i * 2^(n*i).
class ValueTable {
public:
  ValueTable(const Anf& f, unsigned atoms);

  unsigned atoms() const noexcept { return atoms_; }
  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return values_.size(); }
  Element operator[](std::size_t tuple) const { return values_[tuple]; }

private:
  unsigned atoms_;
  std::size_t arity_;
  std::vector<Element> values_;
};

/// p(f(a)) == f(p(a)) for every tuple a.
bool preserves(const Permutation& p, const Anf& f, unsigned atoms);
bool preserves(const Permutation& p, const ValueTable& table);

/// Repeated preservation tests of k-ary functions against one fixed group.
/// Tuple images under every group element are computed once.
class PreserverScan {
public:
  PreserverScan(const FiniteGroup& g, std::size_t arity);

  std::size_t arity() const noexcept { return arity_; }
  /// The elements of the group preserving f; f must have `arity` variables.
  FiniteGroup preservers(const Anf& f) const;

private:
  const FiniteGroup* group_;
  std::size_t arity_;
  std::vector<std::vector<std::uint8_t>> locals_;   // per atom, per tuple
  std::vector<std::vector<std::uint32_t>> images_;  // per element, per tuple
};

enum class SearchMethod { Exhaustive, Backtracking };

struct SearchLimits {
  /// Largest group the search may return.
  std::size_t max_elements = 1'000'000;
  /// Backtracking nodes explored before giving up.
  std::size_t max_nodes = 100'000'000;
};

/// All permutations of the 2^n elements preserving every function in `fs`.
/// Exhaustive requires atoms <= 3; backtracking atoms <= 4.
FiniteGroup stabilizer(std::span<const Anf> fs, unsigned atoms, SearchMethod method,
                       const SearchLimits& limits = {});

FiniteGroup intersect(const FiniteGroup& g, const FiniteGroup& h);
/// Breadth-first closure of `generators` under composition.
FiniteGroup generated_by(unsigned atoms, std::span<const Permutation> generators,
                         std::size_t cap = 1'000'000);
FiniteGroup generated_by(std::span<const FiniteGroup> groups, std::size_t cap = 1'000'000);
bool is_subgroup(const FiniteGroup& h, const FiniteGroup& g);
bool is_normal(const FiniteGroup& n, const FiniteGroup& g);

enum class WitnessKind { FourCycle, SixCycle };

/// FourCycle: a -> a+1 -> b -> 1 -> a. SixCycle: a -> b -> 0 -> a+1 -> b+1
/// -> 1 -> a. "+1" is complement; every other element is fixed.
Permutation witness_cycle(WitnessKind kind, Element a, Element b, unsigned atoms);

/// Orbits of g acting coordinatewise on k-tuples, k <= 2, atoms <= 3.
std::size_t orbit_count(const FiniteGroup& g, unsigned k);

} // namespace reducts
