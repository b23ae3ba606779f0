#include "reducts/error.hpp"
#include "reducts/finite_models.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace reducts {

FiniteBooleanAlgebra::FiniteBooleanAlgebra(unsigned atoms) : atoms_(atoms) {
  if (atoms < 1 || atoms > kMaxAtoms) {
    throw Error("atom count must be between 1 and " + std::to_string(kMaxAtoms) + ", got " +
                std::to_string(atoms));
  }
}

namespace {

constexpr std::array<std::pair<GroupKind, std::string_view>, 14> kGroupNames{{
    {GroupKind::Sym, "sym"},
    {GroupKind::AutBa, "aut_ba"},
    {GroupKind::Translations, "translations"},
    {GroupKind::Stab0, "stab0"},
    {GroupKind::Stab1, "stab1"},
    {GroupKind::Stab01, "stab01"},
    {GroupKind::NegCentralizer, "neg_centralizer"},
    {GroupKind::Gl, "gl"},
    {GroupKind::Gl1, "gl1"},
    {GroupKind::SigmaGroup, "sigma_group"},
    {GroupKind::Sigma1Group, "sigma1_group"},
    {GroupKind::MedianGroup, "median_group"},
    {GroupKind::Neg01, "neg01"},
    {GroupKind::Lin01, "lin01"},
}};

std::vector<Permutation> all_permutations(std::size_t size) {
  std::vector<Element> images(size);
  std::iota(images.begin(), images.end(), Element{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

template <class Pred>
std::vector<Permutation> filtered(std::vector<Permutation> ps, Pred keep) {
  std::erase_if(ps, [&](const Permutation& p) { return !keep(p); });
  return ps;
}

// Linear bijection determined by the images of the atoms.
Permutation linear_map(std::span<const Element> atom_images, std::size_t size) {
  std::vector<Element> images(size, 0);
  for (std::size_t x = 0; x < size; ++x) {
    Element v = 0;
    for (std::size_t i = 0; i < atom_images.size(); ++i) {
      if (x & (std::size_t{1} << i)) {
        v ^= atom_images[i];
      }
    }
    images[x] = v;
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> general_linear(unsigned atoms) {
  const std::size_t size = std::size_t{1} << atoms;
  std::vector<Permutation> out;
  std::vector<Element> basis(atoms);
  // Choose each atom image outside the span of the previous ones.
  auto extend = [&](auto&& self, unsigned i, std::vector<bool>& span) -> void {
    if (i == atoms) {
      out.push_back(linear_map(basis, size));
      return;
    }
    for (std::size_t v = 1; v < size; ++v) {
      if (span[v]) {
        continue;
      }
      basis[i] = static_cast<Element>(v);
      std::vector<bool> next = span;
      for (std::size_t s = 0; s < size; ++s) {
        if (span[s]) {
          next[s ^ v] = true;
        }
      }
      self(self, i + 1, next);
    }
  };
  std::vector<bool> span(size, false);
  span[0] = true;
  extend(extend, 0, span);
  return out;
}

std::vector<Permutation> atom_permutations(unsigned atoms) {
  const std::size_t size = std::size_t{1} << atoms;
  std::vector<unsigned> sigma(atoms);
  std::iota(sigma.begin(), sigma.end(), 0u);
  std::vector<Permutation> out;
  do {
    std::vector<Element> images(atoms);
    for (unsigned i = 0; i < atoms; ++i) {
      images[i] = static_cast<Element>(1u << sigma[i]);
    }
    out.push_back(linear_map(images, size));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::vector<Permutation> translations(unsigned atoms) {
  std::vector<Permutation> out;
  for (std::size_t c = 0; c < (std::size_t{1} << atoms); ++c) {
    out.push_back(translation(static_cast<Element>(c), atoms));
  }
  return out;
}

// {t_c * q : c, q in qs}
std::vector<Permutation> with_translations(const std::vector<Permutation>& qs, unsigned atoms) {
  std::vector<Permutation> out;
  for (const auto& t : translations(atoms)) {
    for (const auto& q : qs) {
      out.push_back(t * q);
    }
  }
  return out;
}

// Permute the complementary pairs and flip any of them.
std::vector<Permutation> neg_centralizer(unsigned atoms) {
  const std::size_t size = std::size_t{1} << atoms;
  const Element top = static_cast<Element>(size - 1);
  const std::size_t pairs = size / 2;
  // Representative of pair i is i itself: the top atom is clear below size/2.
  std::vector<std::size_t> pi(pairs);
  std::iota(pi.begin(), pi.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    for (std::size_t flips = 0; flips < (std::size_t{1} << pairs); ++flips) {
      std::vector<Element> images(size);
      for (std::size_t i = 0; i < pairs; ++i) {
        Element img = static_cast<Element>(pi[i]);
        if (flips & (std::size_t{1} << i)) {
          img ^= top;
        }
        images[i] = img;
        images[i ^ top] = img ^ top;
      }
      out.emplace_back(std::move(images));
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

} // namespace

std::string_view name(GroupKind kind) {
  for (auto [k, n] : kGroupNames) {
    if (k == kind) {
      return n;
    }
  }
  return "?";
}

std::optional<GroupKind> group_kind_from_name(std::string_view text) {
  for (auto [k, n] : kGroupNames) {
    if (n == text) {
      return k;
    }
  }
  return std::nullopt;
}

GroupKind group_kind_for(ReductNode node) {
  switch (node) {
  case ReductNode::Sym:
    return GroupKind::Sym;
  case ReductNode::Stab0:
    return GroupKind::Stab0;
  case ReductNode::Stab1:
    return GroupKind::Stab1;
  case ReductNode::Neg:
    return GroupKind::NegCentralizer;
  case ReductNode::Sigma:
    return GroupKind::SigmaGroup;
  case ReductNode::Stab01:
    return GroupKind::Stab01;
  case ReductNode::Plus0:
    return GroupKind::Gl;
  case ReductNode::Plus1:
    return GroupKind::Gl1;
  case ReductNode::Sigma1:
    return GroupKind::Sigma1Group;
  case ReductNode::Neg01:
    return GroupKind::Neg01;
  case ReductNode::Lin01:
    return GroupKind::Lin01;
  case ReductNode::Median:
    return GroupKind::MedianGroup;
  case ReductNode::Ba:
    return GroupKind::AutBa;
  }
  throw Error("unknown reduct node");
}

FiniteGroup builtin_group(GroupKind kind, unsigned atoms) {
  const FiniteBooleanAlgebra ba(atoms);
  if (atoms > 3) {
    throw Error("builtin_group: explicit groups are limited to 3 atoms");
  }
  const Element top = ba.top();
  auto fixes = [](Element x) { return [x](const Permutation& p) { return p(x) == x; }; };
  std::vector<Permutation> elements;
  switch (kind) {
  case GroupKind::Sym:
    elements = all_permutations(ba.size());
    break;
  case GroupKind::AutBa:
    elements = atom_permutations(atoms);
    break;
  case GroupKind::Translations:
    elements = translations(atoms);
    break;
  case GroupKind::Stab0:
    elements = filtered(all_permutations(ba.size()), fixes(0));
    break;
  case GroupKind::Stab1:
    elements = filtered(all_permutations(ba.size()), fixes(top));
    break;
  case GroupKind::Stab01:
    elements = filtered(all_permutations(ba.size()),
                        [&](const Permutation& p) { return p(0) == 0 && p(top) == top; });
    break;
  case GroupKind::NegCentralizer:
    elements = neg_centralizer(atoms);
    break;
  case GroupKind::Gl:
    elements = general_linear(atoms);
    break;
  case GroupKind::Gl1: {
    const Permutation t1 = translation(top, atoms);
    for (const auto& l : general_linear(atoms)) {
      elements.push_back(t1 * l * t1);
    }
    break;
  }
  case GroupKind::SigmaGroup:
    elements = with_translations(general_linear(atoms), atoms);
    break;
  case GroupKind::Sigma1Group:
    elements = with_translations(filtered(general_linear(atoms), fixes(top)), atoms);
    break;
  case GroupKind::MedianGroup:
    elements = with_translations(atom_permutations(atoms), atoms);
    break;
  case GroupKind::Neg01:
    elements = filtered(neg_centralizer(atoms), fixes(0));
    break;
  case GroupKind::Lin01:
    elements = filtered(general_linear(atoms), fixes(top));
    break;
  }
  return FiniteGroup(atoms, std::move(elements));
}

Element eval_anf(const Anf& f, std::span<const Element> assignment, unsigned atoms) {
  const FiniteBooleanAlgebra ba(atoms);
  if (assignment.size() != f.variable_count()) {
    throw Error("eval_anf: expected " + std::to_string(f.variable_count()) + " arguments, got " +
                std::to_string(assignment.size()));
  }
  for (Element a : assignment) {
    if (a > ba.top()) {
      throw Error("eval_anf: element " + std::to_string(a) + " outside the algebra");
    }
  }
  Element value = 0;
  for (Monomial m : f.monomials()) {
    Element product = ba.top();
    for (std::size_t i : indices(m)) {
      product &= assignment[i];
    }
    value ^= product;
  }
  return value;
}

Element evaluate_term(const Term& term, const std::vector<std::string>& vars,
                      std::span<const Element> assignment, unsigned atoms) {
  const FiniteBooleanAlgebra ba(atoms);
  if (assignment.size() != vars.size()) {
    throw Error("evaluate_term: assignment length differs from the variable list");
  }
  auto eval = [&](auto&& self, const Term& t) -> Element {
    const auto& c = t.children();
    switch (t.kind()) {
    case TermKind::Var: {
      auto it = std::find(vars.begin(), vars.end(), t.name());
      if (it == vars.end()) {
        throw Error("variable '" + t.name() + "' has no value");
      }
      return assignment[static_cast<std::size_t>(it - vars.begin())];
    }
    case TermKind::Zero:
      return ba.bottom();
    case TermKind::One:
      return ba.top();
    case TermKind::Not:
      return ba.complement(self(self, c[0]));
    case TermKind::And:
      return ba.meet(self(self, c[0]), self(self, c[1]));
    case TermKind::Or:
      return ba.join(self(self, c[0]), self(self, c[1]));
    case TermKind::Xor:
      return ba.add(self(self, c[0]), self(self, c[1]));
    case TermKind::Median: {
      const Element a = self(self, c[0]);
      const Element b = self(self, c[1]);
      const Element d = self(self, c[2]);
      return ba.meet(ba.meet(ba.join(a, b), ba.join(b, d)), ba.join(d, a));
    }
    }
    return 0;
  };
  return eval(eval, term);
}

ValueTable::ValueTable(const Anf& f, unsigned atoms) : atoms_(atoms), arity_(f.variable_count()) {
  const FiniteBooleanAlgebra ba(atoms);
  const std::size_t bits = atoms * arity_;
  if (bits > 24) {
    throw Error("value table too large: " + std::to_string(arity_) + " arguments on " +
                std::to_string(atoms) + " atoms");
  }
  // Term functions act atom by atom, so the two-element truth table
  // determines every value.
  std::vector<bool> truth(std::size_t{1} << arity_);
  for (std::size_t a = 0; a < truth.size(); ++a) {
    truth[a] = evaluate(f, a);
  }
  values_.resize(std::size_t{1} << bits);
  const std::size_t mask = ba.size() - 1;
  for (std::size_t t = 0; t < values_.size(); ++t) {
    Element v = 0;
    for (unsigned atom = 0; atom < atoms; ++atom) {
      std::size_t local = 0;
      for (std::size_t i = 0; i < arity_; ++i) {
        const std::size_t coord = (t >> (atoms * i)) & mask;
        local |= ((coord >> atom) & 1u) << i;
      }
      if (truth[local]) {
        v |= static_cast<Element>(1u << atom);
      }
    }
    values_[t] = v;
  }
}

bool preserves(const Permutation& p, const ValueTable& table) {
  const unsigned n = table.atoms();
  if (p.size() != (std::size_t{1} << n)) {
    throw Error("preserves: permutation size does not match the algebra");
  }
  const std::size_t mask = p.size() - 1;
  for (std::size_t t = 0; t < table.size(); ++t) {
    std::size_t image = 0;
    for (std::size_t i = 0; i < table.arity(); ++i) {
      image |= std::size_t{p((t >> (n * i)) & mask)} << (n * i);
    }
    if (p(table[t]) != table[image]) {
      return false;
    }
  }
  return true;
}

bool preserves(const Permutation& p, const Anf& f, unsigned atoms) {
  return preserves(p, ValueTable(f, atoms));
}

Permutation witness_cycle(WitnessKind kind, Element a, Element b, unsigned atoms) {
  const FiniteBooleanAlgebra ba(atoms);
  const Element top = ba.top();
  if (a > top || b > top) {
    throw Error("witness_cycle: element outside the algebra");
  }
  if (a == 0 || a == top || b == 0 || b == top) {
    throw Error("witness_cycle: a and b must differ from 0 and 1");
  }
  if (a == ba.complement(b)) {
    throw Error("witness_cycle: requires a != complement of b");
  }
  std::vector<Element> cycle;
  if (kind == WitnessKind::FourCycle) {
    cycle = {a, ba.complement(a), b, top};
  } else {
    cycle = {a, b, 0, ba.complement(a), ba.complement(b), top};
  }
  std::vector<Element> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error("witness_cycle: cycle points are not distinct");
  }
  std::vector<Element> images(ba.size());
  std::iota(images.begin(), images.end(), Element{0});
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

namespace {

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

} // namespace

std::size_t orbit_count(const FiniteGroup& g, unsigned k) {
  if (g.atoms() > 3) {
    throw Error("orbit_count: limited to 3 atoms");
  }
  if (k > 2) {
    throw Error("orbit_count: tuple length must be at most 2");
  }
  const std::size_t size = std::size_t{1} << g.atoms();
  std::size_t points = 1;
  for (unsigned i = 0; i < k; ++i) {
    points *= size;
  }
  std::vector<std::size_t> parent(points);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& p : g.elements()) {
    for (std::size_t t = 0; t < points; ++t) {
      std::size_t image = 0;
      std::size_t rest = t;
      std::size_t scale = 1;
      for (unsigned i = 0; i < k; ++i) {
        image += std::size_t{p(static_cast<Element>(rest % size))} * scale;
        rest /= size;
        scale *= size;
      }
      parent[find(parent, t)] = find(parent, image);
    }
  }
  std::size_t orbits = 0;
  for (std::size_t t = 0; t < points; ++t) {
    orbits += find(parent, t) == t ? 1 : 0;
  }
  return orbits;
}

} // namespace reducts

namespace reducts {

PreserverScan::PreserverScan(const FiniteGroup& g, std::size_t arity)
    : group_(&g), arity_(arity) {
  const unsigned n = g.atoms();
  if (n * arity > 24 || arity > 8) {
    throw Error("preserver scan: table too large");
  }
  const std::size_t tuples = std::size_t{1} << (n * arity);
  const std::size_t mask = (std::size_t{1} << n) - 1;
  locals_.assign(n, std::vector<std::uint8_t>(tuples));
  for (std::size_t t = 0; t < tuples; ++t) {
    for (unsigned atom = 0; atom < n; ++atom) {
      std::uint8_t local = 0;
      for (std::size_t i = 0; i < arity; ++i) {
        local |= static_cast<std::uint8_t>((((t >> (n * i)) & mask) >> atom & 1u) << i);
      }
      locals_[atom][t] = local;
    }
  }
  for (const auto& p : g.elements()) {
    std::vector<std::uint32_t> image(tuples);
    for (std::size_t t = 0; t < tuples; ++t) {
      std::size_t u = 0;
      for (std::size_t i = 0; i < arity; ++i) {
        u |= std::size_t{p((t >> (n * i)) & mask)} << (n * i);
      }
      image[t] = static_cast<std::uint32_t>(u);
    }
    images_.push_back(std::move(image));
  }
}

FiniteGroup PreserverScan::preservers(const Anf& f) const {
  if (f.variable_count() != arity_) {
    throw Error("preserver scan: expected " + std::to_string(arity_) + " variables, got " +
                std::to_string(f.variable_count()));
  }
  const unsigned n = group_->atoms();
  std::vector<bool> truth(std::size_t{1} << arity_);
  for (std::size_t a = 0; a < truth.size(); ++a) {
    truth[a] = evaluate(f, a);
  }
  const std::size_t tuples = locals_.empty() ? 1 : locals_[0].size();
  std::vector<Element> values(tuples, 0);
  for (unsigned atom = 0; atom < n; ++atom) {
    const auto& local = locals_[atom];
    for (std::size_t t = 0; t < tuples; ++t) {
      values[t] |= static_cast<Element>(truth[local[t]] << atom);
    }
  }
  std::vector<Permutation> out;
  const auto& elements = group_->elements();
  for (std::size_t e = 0; e < elements.size(); ++e) {
    const auto& p = elements[e];
    const auto& image = images_[e];
    bool ok = true;
    for (std::size_t t = 0; t < tuples && ok; ++t) {
      ok = p(values[t]) == values[image[t]];
    }
    if (ok) {
      out.push_back(p);
    }
  }
  return FiniteGroup(n, std::move(out));
}

} // namespace reducts
