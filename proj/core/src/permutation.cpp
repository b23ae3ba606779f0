#include "reducts/error.hpp"
#include "reducts/finite_models.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace reducts {

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Element x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw Error("not a permutation: image list is not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<Element> images(size);
  for (std::size_t i = 0; i < size; ++i) {
    images[i] = static_cast<Element>(i);
  }
  return Permutation(Unchecked{}, std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Element> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<Element>(i);
  }
  return Permutation(Unchecked{}, std::move(inv));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw Error("cannot compose permutations of different sizes");
  }
  std::vector<Element> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    out[i] = p.images_[q.images_[i]];
  }
  return Permutation(Permutation::Unchecked{}, std::move(out));
}

Permutation translation(Element c, unsigned atoms) {
  FiniteBooleanAlgebra ba(atoms);
  if (c > ba.top()) {
    throw Error("translation: element out of range");
  }
  std::vector<Element> images(ba.size());
  for (std::size_t x = 0; x < ba.size(); ++x) {
    images[x] = static_cast<Element>(x ^ c);
  }
  return Permutation(std::move(images));
}

FiniteGroup::FiniteGroup(unsigned atoms, std::vector<Permutation> elements)
    : atoms_(atoms), elements_(std::move(elements)) {
  const FiniteBooleanAlgebra ba(atoms);
  for (const auto& p : elements_) {
    if (p.size() != ba.size()) {
      throw Error("group element acts on " + std::to_string(p.size()) + " points, expected " +
                  std::to_string(ba.size()));
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool FiniteGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool FiniteGroup::is_closed() const {
  if (elements_.empty() || !contains(Permutation::identity(elements_.front().size()))) {
    return false;
  }
  for (const auto& p : elements_) {
    if (!contains(p.inverse())) {
      return false;
    }
    for (const auto& q : elements_) {
      if (!contains(p * q)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

void require_same_atoms(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.atoms() != h.atoms()) {
    throw Error("groups act on algebras with different atom counts");
  }
}

} // namespace

FiniteGroup intersect(const FiniteGroup& g, const FiniteGroup& h) {
  require_same_atoms(g, h);
  std::vector<Permutation> out;
  std::set_intersection(g.elements().begin(), g.elements().end(), h.elements().begin(),
                        h.elements().end(), std::back_inserter(out));
  return FiniteGroup(g.atoms(), std::move(out));
}

FiniteGroup generated_by(unsigned atoms, std::span<const Permutation> generators,
                         std::size_t cap) {
  const FiniteBooleanAlgebra ba(atoms);
  std::set<Permutation> seen{Permutation::identity(ba.size())};
  std::deque<Permutation> frontier{Permutation::identity(ba.size())};
  while (!frontier.empty()) {
    Permutation p = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation q = g * p;
      if (seen.insert(q).second) {
        if (seen.size() > cap) {
          throw Error("generated_by: closure exceeds " + std::to_string(cap) + " elements");
        }
        frontier.push_back(std::move(q));
      }
    }
  }
  return FiniteGroup(atoms, std::vector<Permutation>(seen.begin(), seen.end()));
}

FiniteGroup generated_by(std::span<const FiniteGroup> groups, std::size_t cap) {
  if (groups.empty()) {
    throw Error("generated_by: no groups given");
  }
  std::vector<Permutation> generators;
  for (const auto& g : groups) {
    require_same_atoms(g, groups.front());
    generators.insert(generators.end(), g.elements().begin(), g.elements().end());
  }
  return generated_by(groups.front().atoms(), generators, cap);
}

bool is_subgroup(const FiniteGroup& h, const FiniteGroup& g) {
  require_same_atoms(g, h);
  return std::includes(g.elements().begin(), g.elements().end(), h.elements().begin(),
                       h.elements().end());
}

bool is_normal(const FiniteGroup& n, const FiniteGroup& g) {
  if (!is_subgroup(n, g)) {
    return false;
  }
  for (const auto& x : g.elements()) {
    const Permutation xi = x.inverse();
    for (const auto& m : n.elements()) {
      if (!n.contains(xi * m * x)) {
        return false;
      }
    }
  }
  return true;
}

} // namespace reducts
