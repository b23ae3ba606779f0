#include "reducts/error.hpp"
#include "reducts/finite_models.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>

namespace reducts {
namespace {

std::vector<ValueTable> tables_for(std::span<const Anf> fs, unsigned atoms) {
  std::vector<ValueTable> tables;
  tables.reserve(fs.size());
  for (const auto& f : fs) {
    tables.emplace_back(f, atoms);
  }
  // Small tables reject most candidates fastest.
  std::stable_sort(tables.begin(), tables.end(),
                   [](const ValueTable& a, const ValueTable& b) { return a.size() < b.size(); });
  return tables;
}

bool preserves_all(const Permutation& p, const std::vector<ValueTable>& tables) {
  return std::all_of(tables.begin(), tables.end(),
                     [&](const ValueTable& t) { return preserves(p, t); });
}

FiniteGroup exhaustive(std::span<const Anf> fs, unsigned atoms, const SearchLimits& limits) {
  if (atoms > 3) {
    throw Error("exhaustive stabilizer search is limited to 3 atoms");
  }
  const auto tables = tables_for(fs, atoms);
  const std::size_t size = std::size_t{1} << atoms;

  // One worker per image of element 0; each enumerates the remaining images
  // in lexicographic order, so concatenating the shards is already sorted.
  std::vector<std::vector<Permutation>> shards(size);
  auto work = [&](std::size_t first) {
    std::vector<Element> rest;
    for (std::size_t v = 0; v < size; ++v) {
      if (v != first) {
        rest.push_back(static_cast<Element>(v));
      }
    }
    std::vector<Element> images(size);
    do {
      images[0] = static_cast<Element>(first);
      std::copy(rest.begin(), rest.end(), images.begin() + 1);
      Permutation p(images);
      if (preserves_all(p, tables)) {
        shards[first].push_back(std::move(p));
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  };
  std::vector<std::thread> workers;
  for (std::size_t first = 0; first < size; ++first) {
    workers.emplace_back(work, first);
  }
  for (auto& w : workers) {
    w.join();
  }
  std::vector<Permutation> all;
  for (auto& s : shards) {
    all.insert(all.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  }
  if (all.size() > limits.max_elements) {
    throw Error("stabilizer exceeds " + std::to_string(limits.max_elements) + " elements");
  }
  return FiniteGroup(atoms, std::move(all));
}

constexpr int kUnassigned = -1;

// Element-by-element image assignment in rank order. Every tuple whose
// arguments are all assigned either forces the image of its value or is
// checked against it.
class Backtracker {
public:
  Backtracker(std::span<const Anf> fs, unsigned atoms, const SearchLimits& limits)
      : atoms_(atoms), size_(std::size_t{1} << atoms), limits_(limits),
        tables_(tables_for(fs, atoms)), image_(size_, kUnassigned), preimage_(size_, kUnassigned) {
    order_.resize(size_);
    std::iota(order_.begin(), order_.end(), Element{0});
    std::stable_sort(order_.begin(), order_.end(), [](Element a, Element b) {
      return std::popcount(unsigned{a}) < std::popcount(unsigned{b});
    });
  }

  FiniteGroup run() {
    // Nullary functions are constants and must be fixed.
    for (const auto& t : tables_) {
      if (t.arity() == 0 && !assign(t[0], t[0])) {
        return FiniteGroup(atoms_, {});
      }
    }
    if (propagate()) {
      search();
    }
    return FiniteGroup(atoms_, std::move(found_));
  }

private:
  bool assign(Element x, Element y) {
    if (image_[x] != kUnassigned) {
      return image_[x] == y;
    }
    if (preimage_[y] != kUnassigned) {
      return false;
    }
    image_[x] = y;
    preimage_[y] = x;
    trail_.push_back(x);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Element x = trail_.back();
      trail_.pop_back();
      preimage_[static_cast<std::size_t>(image_[x])] = kUnassigned;
      image_[x] = kUnassigned;
    }
    queue_head_ = std::min(queue_head_, mark);
  }

  // Processes trail entries not yet propagated.
  bool propagate() {
    while (queue_head_ < trail_.size()) {
      const Element e = trail_[queue_head_++];
      assigned_.clear();
      for (std::size_t x = 0; x < size_; ++x) {
        if (image_[x] != kUnassigned) {
          assigned_.push_back(static_cast<Element>(x));
        }
      }
      for (const auto& t : tables_) {
        if (t.arity() > 0 && !check_tuples_with(t, e)) {
          return false;
        }
      }
    }
    return true;
  }

  // Tuples over assigned elements that contain e somewhere.
  bool check_tuples_with(const ValueTable& t, Element e) {
    const std::size_t k = t.arity();
    const std::size_t m = assigned_.size();
    std::vector<std::size_t> digit(k, 0);
    while (true) {
      bool has_e = false;
      std::size_t tuple = 0;
      std::size_t image = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const Element a = assigned_[digit[i]];
        has_e = has_e || a == e;
        tuple |= std::size_t{a} << (atoms_ * i);
        image |= static_cast<std::size_t>(image_[a]) << (atoms_ * i);
      }
      if (has_e && !assign(t[tuple], t[image])) {
        return false;
      }
      std::size_t i = 0;
      while (i < k && ++digit[i] == m) {
        digit[i] = 0;
        ++i;
      }
      if (i == k) {
        return true;
      }
    }
  }

  void search() {
    if (++nodes_ > limits_.max_nodes) {
      throw Error("backtracking search exceeded " + std::to_string(limits_.max_nodes) + " nodes");
    }
    auto next = std::find_if(order_.begin(), order_.end(),
                             [&](Element x) { return image_[x] == kUnassigned; });
    if (next == order_.end()) {
      std::vector<Element> images(size_);
      for (std::size_t x = 0; x < size_; ++x) {
        images[x] = static_cast<Element>(image_[x]);
      }
      found_.emplace_back(std::move(images));
      if (found_.size() > limits_.max_elements) {
        throw Error("stabilizer exceeds " + std::to_string(limits_.max_elements) + " elements");
      }
      return;
    }
    for (std::size_t y = 0; y < size_; ++y) {
      if (preimage_[y] != kUnassigned) {
        continue;
      }
      const std::size_t mark = trail_.size();
      if (assign(*next, static_cast<Element>(y)) && propagate()) {
        search();
      }
      undo(mark);
    }
  }

  unsigned atoms_;
  std::size_t size_;
  SearchLimits limits_;
  std::vector<ValueTable> tables_;
  std::vector<int> image_;
  std::vector<int> preimage_;
  std::vector<Element> order_;
  std::vector<Element> trail_;
  std::vector<Element> assigned_;
  std::size_t queue_head_ = 0;
  std::size_t nodes_ = 0;
  std::vector<Permutation> found_;
};

} // namespace

FiniteGroup stabilizer(std::span<const Anf> fs, unsigned atoms, SearchMethod method,
                       const SearchLimits& limits) {
  const FiniteBooleanAlgebra ba(atoms);
  if (method == SearchMethod::Exhaustive) {
    return exhaustive(fs, atoms, limits);
  }
  return Backtracker(fs, atoms, limits).run();
}

} // namespace reducts
