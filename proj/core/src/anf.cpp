#include "reducts/anf.hpp"

#include "reducts/error.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>
#include <utility>

namespace reducts {

bool canonical_less(Monomial a, Monomial b) noexcept {
  const int da = std::popcount(a);
  const int db = std::popcount(b);
  if (da != db) {
    return da < db;
  }
  if (a == b) {
    return false;
  }
  // The lists agree below the lowest differing index; whoever holds that
  // index has the smaller entry at the first differing position.
  const Monomial lowest = (a ^ b) & (~(a ^ b) + 1);
  return (a & lowest) != 0;
}

namespace {

Monomial variable_mask(std::size_t count) {
  return count >= 32 ? ~Monomial{0} : ((Monomial{1} << count) - 1);
}

// Sum modulo 2 followed by canonical ordering.
std::vector<Monomial> reduce(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) {
      ++j;
    }
    if ((j - i) % 2 == 1) {
      out.push_back(terms[i]);
    }
    i = j;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

void require_same_vars(const Anf& f, const Anf& g, const char* op) {
  if (f.vars() != g.vars()) {
    throw Error(std::string(op) + ": variable lists differ");
  }
}

void check_vars(const std::vector<std::string>& vars) {
  if (vars.size() > kMaxVariables) {
    throw Error("too many variables: " + std::to_string(vars.size()) + " (limit " +
                std::to_string(kMaxVariables) + ")");
  }
  std::unordered_set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) {
      throw Error("empty variable name");
    }
    if (!seen.insert(v).second) {
      throw Error("duplicate variable '" + v + "'");
    }
  }
}

} // namespace

Anf::Anf(std::vector<std::string> vars, std::vector<Monomial> monomials) : vars_(std::move(vars)) {
  check_vars(vars_);
  const Monomial allowed = variable_mask(vars_.size());
  for (Monomial m : monomials) {
    if ((m & ~allowed) != 0) {
      throw Error("monomial mentions a variable index beyond " + std::to_string(vars_.size()));
    }
  }
  monomials_ = reduce(std::move(monomials));
}

Anf Anf::zero(std::vector<std::string> vars) { return Anf(std::move(vars), {}); }

Anf Anf::one(std::vector<std::string> vars) { return Anf(std::move(vars), {Monomial{0}}); }

Anf Anf::variable(std::vector<std::string> vars, std::size_t index) {
  if (index >= vars.size()) {
    throw Error("variable index " + std::to_string(index) + " out of range");
  }
  return Anf(std::move(vars), {Monomial{1} << index});
}

bool Anf::contains(Monomial m) const noexcept {
  return std::binary_search(monomials_.begin(), monomials_.end(), m, canonical_less);
}

int Anf::degree() const noexcept {
  return monomials_.empty() ? -1 : std::popcount(monomials_.back());
}

Monomial Anf::support() const noexcept {
  Monomial s = 0;
  for (Monomial m : monomials_) {
    s |= m;
  }
  return s;
}

std::vector<std::size_t> indices(Monomial m) {
  std::vector<std::size_t> out;
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

namespace {

// Polynomials are carried as raw reduced monomial vectors while walking the
// term so that the variable list is validated once.
std::vector<Monomial> sum(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  std::vector<Monomial> t(a);
  t.insert(t.end(), b.begin(), b.end());
  return reduce(std::move(t));
}

std::vector<Monomial> product(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  std::vector<Monomial> t;
  t.reserve(a.size() * b.size());
  for (Monomial x : a) {
    for (Monomial y : b) {
      t.push_back(x | y);
    }
  }
  return reduce(std::move(t));
}

std::vector<Monomial> normalize(const Term& t, const std::vector<std::string>& order) {
  switch (t.kind()) {
  case TermKind::Var: {
    auto it = std::find(order.begin(), order.end(), t.name());
    if (it == order.end()) {
      throw Error("variable '" + t.name() + "' is missing from the variable order");
    }
    return {Monomial{1} << static_cast<unsigned>(it - order.begin())};
  }
  case TermKind::Zero:
    return {};
  case TermKind::One:
    return {0};
  case TermKind::Not:
    return sum(normalize(t.children()[0], order), {0});
  case TermKind::And:
    return product(normalize(t.children()[0], order), normalize(t.children()[1], order));
  case TermKind::Or: {
    auto x = normalize(t.children()[0], order);
    auto y = normalize(t.children()[1], order);
    return sum(sum(product(x, y), x), y);
  }
  case TermKind::Xor:
    return sum(normalize(t.children()[0], order), normalize(t.children()[1], order));
  case TermKind::Median: {
    auto x = normalize(t.children()[0], order);
    auto y = normalize(t.children()[1], order);
    auto z = normalize(t.children()[2], order);
    return sum(sum(product(x, y), product(y, z)), product(z, x));
  }
  }
  return {};
}

} // namespace

Anf to_anf(const Term& term, const std::vector<std::string>& order) {
  check_vars(order);
  return Anf(order, normalize(term, order));
}

Anf to_anf(const Term& term) { return to_anf(term, term.variables()); }

Anf add(const Anf& f, const Anf& g) {
  require_same_vars(f, g, "add");
  return Anf(f.vars(), sum(f.monomials(), g.monomials()));
}

Anf mul(const Anf& f, const Anf& g) {
  require_same_vars(f, g, "mul");
  return Anf(f.vars(), product(f.monomials(), g.monomials()));
}

Anf compose(const Anf& f, std::span<const Anf> subs) {
  if (subs.size() != f.variable_count()) {
    throw Error("compose: expected " + std::to_string(f.variable_count()) +
                " substitutes, got " + std::to_string(subs.size()));
  }
  std::vector<std::string> target;
  if (!subs.empty()) {
    target = subs.front().vars();
    for (const auto& s : subs) {
      if (s.vars() != target) {
        throw Error("compose: substitutes use different variable lists");
      }
    }
  }
  std::vector<Monomial> acc;
  for (Monomial m : f.monomials()) {
    std::vector<Monomial> term{0};
    for (std::size_t i : indices(m)) {
      term = product(term, subs[i].monomials());
      if (term.empty()) {
        break;
      }
    }
    acc.insert(acc.end(), term.begin(), term.end());
  }
  return Anf(std::move(target), std::move(acc));
}

Anf identify(const Anf& f, std::size_t i, std::size_t j) {
  const std::size_t k = f.variable_count();
  if (i >= k || j >= k) {
    throw Error("identify: index out of range for " + std::to_string(k) + " variables");
  }
  if (i == j) {
    throw Error("identify: indices must differ");
  }
  if (i > j) {
    throw Error("identify: requires i < j");
  }
  const Monomial below = (Monomial{1} << j) - 1;
  std::vector<Monomial> out;
  out.reserve(f.monomials().size());
  for (Monomial m : f.monomials()) {
    if (m & (Monomial{1} << j)) {
      m |= Monomial{1} << i;
    }
    const Monomial high = j + 1 >= 32 ? 0 : (m >> (j + 1));
    out.push_back((m & below) | (high << j));
  }
  std::vector<std::string> vars = f.vars();
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(j));
  return Anf(std::move(vars), std::move(out));
}

Anf restrict_variable(const Anf& f, std::size_t i, bool value) {
  if (i >= f.variable_count()) {
    throw Error("restrict: index out of range");
  }
  const Monomial bit = Monomial{1} << i;
  const Monomial below = bit - 1;
  std::vector<Monomial> out;
  for (Monomial m : f.monomials()) {
    if ((m & bit) && !value) {
      continue;
    }
    const Monomial high = i + 1 >= 32 ? 0 : (m >> (i + 1));
    out.push_back((m & below) | (high << i));
  }
  std::vector<std::string> vars = f.vars();
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(i));
  return Anf(std::move(vars), std::move(out));
}

Anf embed(const Anf& f, const std::vector<std::string>& vars) {
  check_vars(vars);
  std::vector<unsigned> target(f.variable_count());
  for (std::size_t i = 0; i < f.variable_count(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), f.vars()[i]);
    if (it == vars.end()) {
      throw Error("embed: variable '" + f.vars()[i] + "' is missing from the target list");
    }
    target[i] = static_cast<unsigned>(it - vars.begin());
  }
  std::vector<Monomial> out;
  out.reserve(f.monomials().size());
  for (Monomial m : f.monomials()) {
    Monomial r = 0;
    for (std::size_t i : indices(m)) {
      r |= Monomial{1} << target[i];
    }
    out.push_back(r);
  }
  return Anf(vars, std::move(out));
}

std::string fresh_name(const std::vector<std::string>& taken, const std::string& base) {
  auto free = [&](const std::string& n) {
    return std::find(taken.begin(), taken.end(), n) == taken.end();
  };
  if (free(base)) {
    return base;
  }
  for (std::size_t i = 1;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (free(candidate)) {
      return candidate;
    }
  }
}

Anf translation_defect(const Anf& f) {
  const std::size_t k = f.variable_count();
  if (k + 1 > kMaxVariables) {
    throw Error("translation_defect: at most " + std::to_string(kMaxVariables - 1) +
                " variables supported");
  }
  std::vector<std::string> vars = f.vars();
  vars.push_back(fresh_name(f.vars(), "c"));
  const Monomial c = Monomial{1} << k;
  std::vector<Anf> shifted;
  shifted.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    shifted.emplace_back(vars, std::vector<Monomial>{Monomial{1} << i, c});
  }
  return compose(f, shifted) + embed(f, vars);
}

bool evaluate(const Anf& f, std::uint64_t assignment) {
  bool value = false;
  for (Monomial m : f.monomials()) {
    if ((static_cast<std::uint64_t>(m) & ~assignment) == 0) {
      value = !value;
    }
  }
  return value;
}

Shape shape(const Anf& f) {
  const auto& ms = f.monomials();
  if (f.support() == 0) {
    return ConstantShape{!ms.empty()};
  }
  if (f.degree() >= 2) {
    return NonLinearShape{};
  }
  const bool alpha = f.contains(0);
  const std::size_t essential = ms.size() - (alpha ? 1 : 0);
  if (essential == 1 && !alpha) {
    return ProjectionShape{static_cast<std::size_t>(std::countr_zero(ms.front()))};
  }
  return LinearShape{essential, alpha};
}

std::string render_anf(const Anf& f) {
  if (f.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (Monomial m : f.monomials()) {
    if (!first) {
      out += " + ";
    }
    first = false;
    if (m == 0) {
      out += '1';
      continue;
    }
    bool first_var = true;
    for (std::size_t i : indices(m)) {
      if (!first_var) {
        out += '*';
      }
      first_var = false;
      out += f.vars()[i];
    }
  }
  return out;
}

} // namespace reducts
