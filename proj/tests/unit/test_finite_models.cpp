#include "reducts/error.hpp"
#include "reducts/finite_models.hpp"
#include "reducts/term.hpp"

#include <doctest.h>

#include <random>

using namespace reducts;

namespace {

Anf n(const std::string& text) { return to_anf(parse(text)); }

std::vector<Anf> ns(std::initializer_list<const char*> texts) {
  std::vector<Anf> out;
  for (const char* t : texts) {
    out.push_back(n(t));
  }
  return out;
}

std::size_t order_of(std::initializer_list<const char*> texts, unsigned atoms, SearchMethod m) {
  const auto fs = ns(texts);
  return stabilizer(fs, atoms, m).order();
}

} // namespace

TEST_CASE("Boolean algebra axioms on small algebras") {
  for (unsigned atoms = 1; atoms <= 3; ++atoms) {
    const FiniteBooleanAlgebra ba(atoms);
    for (Element a = 0; a <= ba.top(); ++a) {
      CHECK(ba.meet(a, ba.complement(a)) == ba.bottom());
      CHECK(ba.join(a, ba.complement(a)) == ba.top());
      CHECK(ba.meet(a, ba.top()) == a);
      CHECK(ba.join(a, ba.bottom()) == a);
      for (Element b = 0; b <= ba.top(); ++b) {
        CHECK(ba.meet(a, ba.join(a, b)) == a);
        CHECK(ba.join(a, ba.meet(a, b)) == a);
        CHECK(ba.complement(ba.meet(a, b)) == ba.join(ba.complement(a), ba.complement(b)));
        for (Element c = 0; c <= ba.top(); ++c) {
          CHECK(ba.meet(a, ba.join(b, c)) == ba.join(ba.meet(a, b), ba.meet(a, c)));
        }
      }
    }
  }
  CHECK_THROWS_AS(FiniteBooleanAlgebra(0), Error);
  CHECK_THROWS_AS(FiniteBooleanAlgebra(5), Error);
}

TEST_CASE("eval_anf examples") {
  const std::vector<Element> a{0b011, 0b101};
  CHECK(eval_anf(n("x & y"), a, 3) == 0b001);
  const std::vector<Element> b{0b001, 0b010, 0b100};
  CHECK(eval_anf(n("x ^ y ^ z"), b, 3) == 0b111);
  for (Element p = 0; p < 8; ++p) {
    for (Element q = 0; q < 8; ++q) {
      const std::vector<Element> c{p, p, q};
      CHECK(eval_anf(n("median(x,y,z)"), c, 3) == p);
    }
  }
  const std::vector<Element> short_list{1};
  CHECK_THROWS_AS(eval_anf(n("x & y"), short_list, 3), Error);
  const std::vector<Element> out_of_range{8, 1};
  CHECK_THROWS_AS(eval_anf(n("x & y"), out_of_range, 3), Error);
}

TEST_CASE("polynomial values agree with lattice evaluation at three atoms") {
  std::mt19937_64 rng(21);
  const std::vector<std::string> vars{"x", "y", "z"};
  const char* samples[] = {"median(x,!y,z) | x & !z", "!(x ^ y) & (z | 1)", "x | y | z",
                           "median(x ^ y, y & z, !x)", "!(!x | !y) ^ median(z,z,x)"};
  for (const char* s : samples) {
    const Term t = parse(s);
    const Anf f = to_anf(t, vars);
    for (int k = 0; k < 200; ++k) {
      const std::vector<Element> a{static_cast<Element>(rng() % 8), static_cast<Element>(rng() % 8),
                                   static_cast<Element>(rng() % 8)};
      CHECK(eval_anf(f, a, 3) == evaluate_term(t, vars, a, 3));
    }
  }
}

TEST_CASE("preserves examples") {
  const Permutation id = Permutation::identity(8);
  CHECK(preserves(id, n("median(x,y,z) & w"), 3));
  for (Element c = 0; c < 8; ++c) {
    CHECK(preserves(translation(c, 3), n("median(x,y,z)"), 3));
  }
  const Permutation four = witness_cycle(WitnessKind::FourCycle, 0b001, 0b010, 3);
  CHECK_FALSE(preserves(four, n("!x"), 3));
  CHECK_THROWS_AS(preserves(Permutation::identity(4), n("x"), 3), Error);
}

TEST_CASE("permutations") {
  CHECK_THROWS_AS(Permutation({0, 0, 1, 2}), Error);
  CHECK_THROWS_AS(Permutation({0, 4, 1, 2}), Error);
  const Permutation p({1, 2, 3, 0});
  const Permutation q({0, 2, 1, 3});
  CHECK((p * q)(1) == p(q(1)));
  CHECK((p * p.inverse()).is_identity());
  CHECK_THROWS_AS(p * Permutation::identity(8), Error);
  CHECK_THROWS_AS(translation(8, 3), Error);
}

TEST_CASE("stabilizer examples") {
  for (SearchMethod m : {SearchMethod::Exhaustive, SearchMethod::Backtracking}) {
    CHECK(order_of({"x & y", "x | y", "!x", "0", "1"}, 3, m) == 6);
    CHECK(order_of({"median(x,y,z)"}, 3, m) == 48);
    CHECK(order_of({"x ^ y ^ z"}, 3, m) == 1344);
    CHECK(order_of({}, 2, m) == 24);
  }
  CHECK(order_of({"x & y"}, 1, SearchMethod::Exhaustive) == 1);
  CHECK(order_of({"!x"}, 1, SearchMethod::Backtracking) == 2);
}

TEST_CASE("both search methods return identical groups") {
  const char* terms[] = {"x & y", "median(x,y,z)", "x ^ y", "!x", "0", "x | y ^ z", "!(x ^ y)",
                         "median(x,y,z) ^ x"};
  for (unsigned atoms = 1; atoms <= 3; ++atoms) {
    for (const char* t : terms) {
      const std::vector<Anf> fs{n(t)};
      CHECK(stabilizer(fs, atoms, SearchMethod::Exhaustive) ==
            stabilizer(fs, atoms, SearchMethod::Backtracking));
    }
  }
}

TEST_CASE("backtracking at four atoms") {
  CHECK(order_of({"median(x,y,z)"}, 4, SearchMethod::Backtracking) == 16 * 24);
  CHECK(order_of({"x & y"}, 4, SearchMethod::Backtracking) == 24);
  CHECK_THROWS_AS(order_of({"x"}, 4, SearchMethod::Exhaustive), Error);
  const std::vector<Anf> fs{n("x")};
  SearchLimits tight;
  tight.max_nodes = 10;
  CHECK_THROWS_AS(stabilizer(fs, 3, SearchMethod::Backtracking, tight), Error);
  SearchLimits small;
  small.max_elements = 100;
  CHECK_THROWS_AS(stabilizer(fs, 3, SearchMethod::Exhaustive, small), Error);
}

TEST_CASE("builtin groups") {
  const FiniteGroup t = builtin_group(GroupKind::Translations, 3);
  CHECK(t.order() == 8);
  for (Element c = 0; c < 8; ++c) {
    CHECK(t.contains(translation(c, 3)));
  }
  CHECK(builtin_group(GroupKind::NegCentralizer, 3).order() == 384);
  CHECK(builtin_group(GroupKind::Lin01, 3).order() == 24);
  CHECK(builtin_group(GroupKind::Gl, 3).order() == 168);
  CHECK(builtin_group(GroupKind::Gl1, 3).order() == 168);
  CHECK(builtin_group(GroupKind::Sigma1Group, 3).order() == 192);
  CHECK(builtin_group(GroupKind::Sym, 2).order() == 24);
  for (unsigned atoms = 1; atoms <= 3; ++atoms) {
    for (GroupKind k : {GroupKind::AutBa, GroupKind::Translations, GroupKind::NegCentralizer,
                        GroupKind::Gl, GroupKind::Gl1, GroupKind::SigmaGroup,
                        GroupKind::Sigma1Group, GroupKind::MedianGroup, GroupKind::Neg01,
                        GroupKind::Lin01}) {
      CHECK_MESSAGE(builtin_group(k, atoms).is_closed(), name(k));
    }
  }
  CHECK_THROWS_AS(builtin_group(GroupKind::Sym, 4), Error);
  CHECK(group_kind_from_name("median_group") == GroupKind::MedianGroup);
  CHECK_FALSE(group_kind_from_name("nope").has_value());
}

TEST_CASE("group operations") {
  const FiniteGroup t = builtin_group(GroupKind::Translations, 3);
  const FiniteGroup aut = builtin_group(GroupKind::AutBa, 3);
  CHECK(intersect(t, aut).order() == 1);
  const std::vector<FiniteGroup> parts{t, aut};
  const FiniteGroup m = generated_by(parts);
  CHECK(m.order() == 48);
  CHECK(m == builtin_group(GroupKind::MedianGroup, 3));
  CHECK(is_normal(t, m));
  CHECK_FALSE(is_normal(aut, m));
  CHECK(is_subgroup(aut, m));
  CHECK_FALSE(is_subgroup(m, aut));
  CHECK_THROWS_AS(intersect(t, builtin_group(GroupKind::Translations, 2)), Error);
  const std::vector<FiniteGroup> big{builtin_group(GroupKind::Stab0, 3)};
  CHECK_THROWS_AS(generated_by(big, 1000), Error);
  CHECK_THROWS_AS(generated_by(std::vector<FiniteGroup>{}), Error);
}

TEST_CASE("witness cycles") {
  const FiniteBooleanAlgebra ba(3);
  const Element a = 0b001;
  const Element b = 0b010;
  const Permutation four = witness_cycle(WitnessKind::FourCycle, a, b, 3);
  CHECK(four(a) == ba.complement(a));
  CHECK(four(ba.complement(a)) == b);
  CHECK(four(b) == ba.top());
  CHECK(four(ba.top()) == a);
  CHECK(four(0) == 0);
  CHECK(preserves(four, n("0"), 3));
  CHECK_FALSE(preserves(four, n("1"), 3));
  const Element sigma = four(a) ^ four(ba.complement(a)) ^ four(ba.top());
  CHECK(sigma == 0b101);
  const Permutation six = witness_cycle(WitnessKind::SixCycle, a, b, 3);
  CHECK(six(0) != 0);
  for (Element x = 0; x < 8; ++x) {
    CHECK(six(ba.complement(x)) == ba.complement(six(x)));
  }
  CHECK_THROWS_AS(witness_cycle(WitnessKind::FourCycle, 0, b, 3), Error);
  CHECK_THROWS_AS(witness_cycle(WitnessKind::FourCycle, a, 7, 3), Error);
  CHECK_THROWS_AS(witness_cycle(WitnessKind::FourCycle, a, 0b110, 3), Error);
  CHECK_THROWS_AS(witness_cycle(WitnessKind::SixCycle, a, a, 3), Error);
}

TEST_CASE("orbit counts") {
  CHECK(orbit_count(builtin_group(GroupKind::AutBa, 3), 1) == 4);
  CHECK(orbit_count(builtin_group(GroupKind::Sym, 3), 1) == 1);
  CHECK(orbit_count(builtin_group(GroupKind::MedianGroup, 3), 1) == 1);
  CHECK(orbit_count(builtin_group(GroupKind::Sym, 3), 2) == 2);
  CHECK(orbit_count(builtin_group(GroupKind::Translations, 2), 2) == 4);
  CHECK_THROWS_AS(orbit_count(builtin_group(GroupKind::Sym, 3), 3), Error);
}

TEST_CASE("preserver scan agrees with direct preservation") {
  const FiniteGroup g = builtin_group(GroupKind::MedianGroup, 3);
  std::mt19937_64 rng(31);
  const std::vector<std::string> vars{"a", "b", "c"};
  const PreserverScan scan(g, 3);
  for (int round = 0; round < 60; ++round) {
    std::vector<Monomial> ms;
    for (Monomial m = 0; m < 8; ++m) {
      if (rng() % 2) {
        ms.push_back(m);
      }
    }
    const Anf f(vars, ms);
    std::vector<Permutation> expected;
    for (const auto& p : g.elements()) {
      if (preserves(p, f, 3)) {
        expected.push_back(p);
      }
    }
    CHECK(scan.preservers(f) == FiniteGroup(3, expected));
  }
  CHECK_THROWS_AS(scan.preservers(n("x")), Error);
}
