#include "reducts/acceptance.hpp"

#include "reducts/anf.hpp"
#include "reducts/classifier.hpp"
#include "reducts/error.hpp"
#include "reducts/finite_models.hpp"
#include "reducts/identities.hpp"
#include "reducts/lattice.hpp"
#include "reducts/term.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace reducts {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", seconds);
  return buf;
}

const std::vector<std::string>& four_vars() {
  static const std::vector<std::string> vars{"x1", "x2", "x3", "x4"};
  return vars;
}

// The Anf on x1..x4 whose monomial set is given by the bits of `code`:
// bit m set means the monomial with variable mask m is present.
Anf anf_from_code(std::uint32_t code, const std::vector<std::string>& vars) {
  std::vector<Monomial> ms;
  const std::uint32_t count = std::uint32_t{1} << vars.size();
  for (Monomial m = 0; m < count; ++m) {
    if ((code >> m) & 1u) {
      ms.push_back(m);
    }
  }
  return Anf(vars, std::move(ms));
}

bool is_nonlinear(const Anf& f) { return std::holds_alternative<NonLinearShape>(shape(f)); }

std::vector<Anf> representative_anfs(ReductNode node) {
  std::vector<Anf> out;
  for (const auto& text : representatives(node)) {
    out.push_back(to_anf(parse(text)));
  }
  return out;
}

FiniteGroup node_group(ReductNode node, SearchMethod method) {
  const auto fs = representative_anfs(node);
  return stabilizer(fs, 3, method);
}

CriterionResult identities_criterion() {
  CriterionResult r{1, "identity suite verifies symbolically", false, 0.0, {}, {}};
  const auto start = Clock::now();
  const auto checks = identity_suite();
  r.seconds = seconds_since(start);
  std::size_t holding = 0;
  std::size_t counted = 0;
  for (const auto& c : checks) {
    if (c.finding) {
      r.findings.push_back((c.holds ? "holds: " : "fails: ") + c.name + "  (" + c.lhs + " vs " +
                           c.rhs + ")");
      continue;
    }
    ++counted;
    if (c.holds) {
      ++holding;
    } else {
      r.details.push_back("FAILED " + c.name + ": " + c.lhs + " != " + c.rhs);
    }
  }
  r.details.insert(r.details.begin(),
                   std::to_string(holding) + "/" + std::to_string(counted) + " identities hold");
  r.passed = holding == counted && r.seconds < 1.0;
  if (r.seconds >= 1.0) {
    r.details.push_back("runtime " + fixed(r.seconds) + " s exceeds 1 s");
  }
  return r;
}

CriterionResult sweep_criterion() {
  CriterionResult r{2, "classifier sweep over all 4-variable normal forms", false, 0.0, {}, {}};
  const auto start = Clock::now();
  std::size_t nonlinear = 0;
  std::size_t disagreements = 0;
  std::size_t replay_failures = 0;
  std::size_t errors = 0;
  std::array<std::size_t, kAllNodes.size()> histogram{};
  for (std::uint32_t code = 0; code < (1u << 16); ++code) {
    try {
      const Anf f = anf_from_code(code, four_vars());
      const ReductNode node = classify_term(f);
      ++histogram[index_of(node)];
      if (!is_nonlinear(f)) {
        continue;
      }
      ++nonlinear;
      const Trace trace = reduction_trace(f);
      if (trace.result != node) {
        if (++disagreements <= 5) {
          r.details.push_back("verdict mismatch for " + render_anf(f));
        }
      }
      if (auto mismatch = replay(trace)) {
        if (++replay_failures <= 5) {
          r.details.push_back("replay failed for " + render_anf(f) + ": " + *mismatch);
        }
      }
    } catch (const Error& e) {
      if (++errors <= 5) {
        r.details.push_back("error on code " + std::to_string(code) + ": " + e.what());
      }
    }
  }
  r.seconds = seconds_since(start);
  std::ostringstream counts;
  counts << "65536 classified, " << nonlinear << " non-linear traced;";
  for (ReductNode n : kAllNodes) {
    if (histogram[index_of(n)] != 0) {
      counts << ' ' << identifier(n) << '=' << histogram[index_of(n)];
    }
  }
  r.details.insert(r.details.begin(), counts.str());
  r.passed = errors == 0 && disagreements == 0 && replay_failures == 0 && r.seconds < 30.0;
  if (r.seconds >= 30.0) {
    r.details.push_back("runtime " + fixed(r.seconds) + " s exceeds 30 s");
  }
  return r;
}

constexpr std::array<std::size_t, 13> kExpectedOrders{40320, 5040, 5040, 384, 1344, 720, 168,
                                                      168,   192,  48,   24,  48,   6};

CriterionResult stabilizer_criterion() {
  CriterionResult r{3, "finite stabilizer table at 3 atoms", true, 0.0, {}, {}};
  const auto start = Clock::now();
  std::vector<FiniteGroup> exhaustive;
  std::ostringstream orders;
  orders << "orders:";
  for (ReductNode n : kAllNodes) {
    exhaustive.push_back(node_group(n, SearchMethod::Exhaustive));
    const auto& g = exhaustive.back();
    orders << ' ' << identifier(n) << '=' << g.order();
    if (g.order() != kExpectedOrders[index_of(n)]) {
      r.passed = false;
      r.details.push_back(std::string(identifier(n)) + ": order " + std::to_string(g.order()) +
                          ", expected " + std::to_string(kExpectedOrders[index_of(n)]));
    }
    if (!(g == builtin_group(group_kind_for(n), 3))) {
      r.passed = false;
      r.details.push_back(std::string(identifier(n)) + " differs from builtin " +
                          std::string(name(group_kind_for(n))));
    }
  }
  const double exhaustive_seconds = seconds_since(start);
  for (std::size_t i = 0; i < exhaustive.size(); ++i) {
    for (std::size_t j = i + 1; j < exhaustive.size(); ++j) {
      if (exhaustive[i] == exhaustive[j]) {
        r.passed = false;
        r.details.push_back(std::string(identifier(kAllNodes[i])) + " and " +
                            std::string(identifier(kAllNodes[j])) + " give the same group");
      }
    }
  }
  const auto bt_start = Clock::now();
  for (ReductNode n : kAllNodes) {
    if (!(node_group(n, SearchMethod::Backtracking) == exhaustive[index_of(n)])) {
      r.passed = false;
      r.details.push_back(std::string(identifier(n)) + ": backtracking differs from exhaustive");
    }
  }
  const double bt_seconds = seconds_since(bt_start);
  r.seconds = seconds_since(start);
  r.details.insert(r.details.begin(), orders.str());
  r.details.insert(r.details.begin() + 1, "exhaustive " + fixed(exhaustive_seconds) +
                                              " s, backtracking " + fixed(bt_seconds) + " s");
  if (exhaustive_seconds >= 300.0 || bt_seconds >= 10.0) {
    r.passed = false;
    r.details.push_back("time limit exceeded");
  }
  return r;
}

CriterionResult lattice_criterion() {
  CriterionResult r{4, "lattice order mirrors finite groups", true, 0.0, {}, {}};
  const auto start = Clock::now();
  std::vector<FiniteGroup> groups;
  for (ReductNode n : kAllNodes) {
    groups.push_back(node_group(n, SearchMethod::Backtracking));
  }
  std::size_t pairs = 0;
  for (ReductNode a : kAllNodes) {
    for (ReductNode b : kAllNodes) {
      ++pairs;
      const auto& ga = groups[index_of(a)];
      const auto& gb = groups[index_of(b)];
      const std::string tag =
          "(" + std::string(identifier(a)) + ", " + std::string(identifier(b)) + ")";
      if (is_subgroup(ga, gb) != leq(a, b)) {
        r.passed = false;
        r.details.push_back("inclusion disagrees with leq at " + tag);
      }
      if (!(intersect(ga, gb) == groups[index_of(meet(a, b))])) {
        r.passed = false;
        r.details.push_back("intersection disagrees with meet at " + tag);
      }
    }
  }
  std::size_t triples = 0;
  for (ReductNode a : kAllNodes) {
    if (meet(a, a) != a || join(a, a) != a) {
      r.passed = false;
      r.details.push_back("idempotence fails at " + std::string(identifier(a)));
    }
    for (ReductNode b : kAllNodes) {
      const bool ok = meet(a, b) == meet(b, a) && join(a, b) == join(b, a) &&
                      meet(a, join(a, b)) == a && join(a, meet(a, b)) == a &&
                      leq(meet(a, b), a) && leq(a, join(a, b));
      if (!ok) {
        r.passed = false;
        r.details.push_back("commutativity/absorption fails at " + std::string(identifier(a)) +
                            ", " + std::string(identifier(b)));
      }
      for (ReductNode c : kAllNodes) {
        ++triples;
        if (meet(meet(a, b), c) != meet(a, meet(b, c)) ||
            join(join(a, b), c) != join(a, join(b, c))) {
          r.passed = false;
          r.details.push_back("associativity fails");
        }
      }
    }
  }
  r.seconds = seconds_since(start);
  r.details.insert(r.details.begin(), std::to_string(pairs) + " pairs, " +
                                          std::to_string(triples) + " triples checked");
  return r;
}

CriterionResult semidirect_criterion() {
  CriterionResult r{5, "semidirect decompositions at 3 atoms", true, 0.0, {}, {}};
  const auto start = Clock::now();
  auto expect = [&](bool ok, const std::string& what) {
    r.details.push_back((ok ? "ok: " : "FAILED: ") + what);
    r.passed = r.passed && ok;
  };
  const FiniteGroup t = builtin_group(GroupKind::Translations, 3);
  const FiniteGroup aut = builtin_group(GroupKind::AutBa, 3);
  const FiniteGroup gl = builtin_group(GroupKind::Gl, 3);

  expect(intersect(t, aut).order() == 1, "T meets Aut(BA) trivially");
  const std::array<FiniteGroup, 2> median_parts{t, aut};
  const FiniteGroup tm = generated_by(median_parts);
  expect(is_normal(t, tm), "T is normal in <T, Aut(BA)>");
  const std::array<Anf, 1> median{to_anf(parse("median(x,y,z)"))};
  const FiniteGroup sm = stabilizer(median, 3, SearchMethod::Backtracking);
  expect(tm.order() == 48 && sm.order() == 48 && tm == sm,
         "|<T, Aut(BA)>| = " + std::to_string(tm.order()) + " = |Stab(median)| = " +
             std::to_string(sm.order()) + " (8*6)");

  expect(intersect(t, gl).order() == 1, "T meets GL trivially");
  const std::array<FiniteGroup, 2> sigma_parts{t, gl};
  const FiniteGroup tg = generated_by(sigma_parts);
  expect(is_normal(t, tg), "T is normal in <T, GL>");
  const std::array<Anf, 1> sigma{to_anf(parse("x ^ y ^ z"))};
  const FiniteGroup ss = stabilizer(sigma, 3, SearchMethod::Backtracking);
  expect(tg.order() == 1344 && ss.order() == 1344 && tg == ss,
         "|<T, GL>| = " + std::to_string(tg.order()) + " = |Stab(Sigma)| = " +
             std::to_string(ss.order()) + " (8*168)");
  r.seconds = seconds_since(start);
  return r;
}

CriterionResult witness_criterion() {
  CriterionResult r{6, "antichain witnesses at 3 atoms", true, 0.0, {}, {}};
  const auto start = Clock::now();
  constexpr unsigned n = 3;
  constexpr Element a = 0b001;
  constexpr Element b = 0b010;
  const FiniteBooleanAlgebra ba(n);

  auto preserves_node = [&](const Permutation& p, ReductNode node) {
    for (const auto& f : representative_anfs(node)) {
      if (!preserves(p, f, n)) {
        return false;
      }
    }
    return true;
  };
  // p lies in Aut(inside) but not in Aut(outside).
  auto witness = [&](const std::string& label, const Permutation& p, ReductNode inside,
                     ReductNode outside) {
    const bool ok = preserves_node(p, inside) && !preserves_node(p, outside);
    r.details.push_back(std::string(ok ? "ok: " : "FAILED: ") + std::string(identifier(inside)) +
                        " not in " + std::string(identifier(outside)) + " via " + label);
    r.passed = r.passed && ok;
  };

  const Permutation four = witness_cycle(WitnessKind::FourCycle, a, b, n);
  const Permutation six = witness_cycle(WitnessKind::SixCycle, a, b, n);
  const Permutation t1 = translation(ba.top(), n);
  const Permutation four_dual = t1 * four * t1;
  const Permutation ta = translation(a, n);
  // x -> x + x_0 * b: sends atom 0 to a+b, fixes the other atoms.
  std::vector<Element> shear(ba.size());
  for (std::size_t x = 0; x < ba.size(); ++x) {
    shear[x] = static_cast<Element>(x ^ ((x & a) ? b : 0));
  }
  const Permutation lin{shear};

  witness("4-cycle", four, ReductNode::Stab0, ReductNode::Stab1);
  witness("4-cycle", four, ReductNode::Stab0, ReductNode::Neg);
  witness("4-cycle", four, ReductNode::Stab0, ReductNode::Sigma);
  witness("conjugated 4-cycle", four_dual, ReductNode::Stab1, ReductNode::Stab0);
  witness("conjugated 4-cycle", four_dual, ReductNode::Stab1, ReductNode::Neg);
  witness("conjugated 4-cycle", four_dual, ReductNode::Stab1, ReductNode::Sigma);
  witness("6-cycle", six, ReductNode::Neg, ReductNode::Stab0);
  witness("6-cycle", six, ReductNode::Neg, ReductNode::Stab1);
  witness("6-cycle", six, ReductNode::Neg, ReductNode::Sigma);
  witness("translation by a", ta, ReductNode::Sigma, ReductNode::Stab0);
  witness("translation by a", ta, ReductNode::Sigma, ReductNode::Stab1);
  witness("linear map moving 1", lin, ReductNode::Sigma, ReductNode::Neg);

  // The 4-cycle fixes 0 = Sigma(a, a+1, 1); the images give Sigma(a+1, b, a).
  const Element image = static_cast<Element>(four(a) ^ four(ba.complement(a)) ^ four(ba.top()));
  const bool value_ok = image == static_cast<Element>(b ^ ba.top());
  r.details.push_back(std::string(value_ok ? "ok: " : "FAILED: ") +
                      "Sigma of the 4-cycle images of (a, a+1, 1) is b+1 = " +
                      std::to_string(image));
  r.passed = r.passed && value_ok;
  r.seconds = seconds_since(start);
  return r;
}

// Random terms over the first `var_count` of x, y, z, w.
class TermSampler {
public:
  explicit TermSampler(std::uint64_t seed) : rng_(seed) {}

  Term sample(std::size_t var_count, int depth) {
    const int leaf_bias = depth <= 0 ? 100 : 30;
    if (pick(100) < static_cast<std::size_t>(leaf_bias)) {
      const std::size_t r = pick(var_count + 2);
      if (r == var_count) {
        return Term::zero();
      }
      if (r == var_count + 1) {
        return Term::one();
      }
      return Term::var(kNames[r]);
    }
    switch (pick(5)) {
    case 0:
      return Term::negate(sample(var_count, depth - 1));
    case 1:
      return Term::conj(sample(var_count, depth - 1), sample(var_count, depth - 1));
    case 2:
      return Term::disj(sample(var_count, depth - 1), sample(var_count, depth - 1));
    case 3:
      return Term::exclusive_or(sample(var_count, depth - 1), sample(var_count, depth - 1));
    default:
      return Term::median(sample(var_count, depth - 1), sample(var_count, depth - 1),
                          sample(var_count, depth - 1));
    }
  }

  std::size_t pick(std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
  }

  static constexpr std::array<const char*, 4> kNames{"x", "y", "z", "w"};

private:
  std::mt19937_64 rng_;
};

CriterionResult headline_criterion() {
  CriterionResult r{7, "thirteen classes and the two-element bridge", true, 0.0, {}, {}};
  const auto start = Clock::now();
  std::set<ReductNode> realized;
  std::size_t single = 0;
  for (std::size_t k = 0; k <= 4; ++k) {
    const std::vector<std::string> vars(four_vars().begin(), four_vars().begin() + k);
    for (std::uint32_t code = 0; code < (std::uint32_t{1} << (1u << k)); ++code) {
      const std::array<Anf, 1> reduct{anf_from_code(code, vars)};
      realized.insert(classify_reduct(reduct));
      ++single;
    }
  }
  const std::size_t from_single = realized.size();
  for (ReductNode n : {ReductNode::Stab01, ReductNode::Neg01, ReductNode::Lin01}) {
    const auto fs = representative_anfs(n);
    const ReductNode got = classify_reduct(fs);
    realized.insert(got);
    if (got != n) {
      r.passed = false;
      r.details.push_back("representative of " + std::string(identifier(n)) + " classifies as " +
                          std::string(identifier(got)));
    }
  }
  r.details.push_back(std::to_string(single) + " single terms realize " +
                      std::to_string(from_single) + " classes; with the multi-term " +
                      "representatives " + std::to_string(realized.size()));
  if (realized.size() != 13 || from_single != 10) {
    r.passed = false;
  }

  TermSampler sampler(0x5eed'0bad'cafeULL);
  constexpr std::size_t kSamples = 10'000;
  std::size_t identities = 0;
  std::size_t mismatches = 0;
  for (std::size_t s = 0; s < kSamples; ++s) {
    const std::size_t var_count = 1 + sampler.pick(3);
    const int depth = 1 + static_cast<int>(sampler.pick(4));
    const Term lhs = sampler.sample(var_count, depth);
    const Term rhs = sampler.sample(var_count, depth);
    const std::vector<std::string> vars(TermSampler::kNames.begin(),
                                        TermSampler::kNames.begin() + var_count);
    const bool symbolic = to_anf(lhs, vars) == to_anf(rhs, vars);
    bool pointwise = true;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << var_count) && pointwise; ++a) {
      pointwise = evaluate(lhs, vars, a) == evaluate(rhs, vars, a);
    }
    identities += symbolic ? 1 : 0;
    if (symbolic != pointwise) {
      r.passed = false;
      if (++mismatches <= 5) {
        r.details.push_back("bridge fails: " + render_term(lhs) + " vs " + render_term(rhs));
      }
    }
  }
  r.details.push_back(std::to_string(kSamples) + " random term pairs, " +
                      std::to_string(identities) + " identities, " + std::to_string(mismatches) +
                      " bridge mismatches");
  r.seconds = seconds_since(start);
  return r;
}

CriterionResult discrepancy_criterion() {
  CriterionResult r{8, "discrepancy sweep inside the median group", true, 0.0, {}, {}};
  const auto start = Clock::now();
  const FiniteGroup median_group = builtin_group(GroupKind::MedianGroup, 3);
  const FiniteGroup aut = builtin_group(GroupKind::AutBa, 3);
  std::size_t scanned = 0;
  std::size_t matched = 0;
  std::size_t counterexamples = 0;
  for (std::size_t k = 2; k <= 4; ++k) {
    const std::vector<std::string> vars(four_vars().begin(), four_vars().begin() + k);
    const PreserverScan scan(median_group, k);
    for (std::uint32_t code = 0; code < (std::uint32_t{1} << (1u << k)); ++code) {
      const Anf f = anf_from_code(code, vars);
      if (!is_nonlinear(f)) {
        continue;
      }
      ++scanned;
      const ReductNode node = classify_term(f);
      const FiniteGroup found = scan.preservers(f);
      const FiniteGroup& expected = node == ReductNode::Median ? median_group : aut;
      if (found == expected) {
        ++matched;
      } else if (++counterexamples <= 20) {
        r.findings.push_back(render_anf(f) + ": classified " + std::string(identifier(node)) +
                             ", " + std::to_string(found.order()) + " preservers in the median group");
      }
    }
  }
  if (counterexamples > 20) {
    r.findings.push_back("... " + std::to_string(counterexamples - 20) + " more");
  }
  r.details.push_back(std::to_string(scanned) + " non-linear functions on 2..4 variables, " +
                      std::to_string(matched) + " match the classifier, " +
                      std::to_string(counterexamples) + " discrepancies");
  r.seconds = seconds_since(start);
  return r;
}

} // namespace

CriterionResult run_criterion(int id) {
  switch (id) {
  case 1:
    return identities_criterion();
  case 2:
    return sweep_criterion();
  case 3:
    return stabilizer_criterion();
  case 4:
    return lattice_criterion();
  case 5:
    return semidirect_criterion();
  case 6:
    return witness_criterion();
  case 7:
    return headline_criterion();
  case 8:
    return discrepancy_criterion();
  default:
    throw Error("no acceptance criterion " + std::to_string(id) + " (expected 1.." +
                std::to_string(kCriterionCount) + ")");
  }
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id));
  }
  return out;
}

std::string render_result(const CriterionResult& r) {
  std::string out = std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " +
                    r.title + " (" + fixed(r.seconds) + " s)\n";
  for (const auto& d : r.details) {
    out += "    " + d + "\n";
  }
  for (const auto& f : r.findings) {
    out += "    finding: " + f + "\n";
  }
  return out;
}

} // namespace reducts
