#include "reducts/anf.hpp"
#include "reducts/error.hpp"
#include "reducts/term.hpp"

#include <doctest.h>

#include <random>

using namespace reducts;

namespace {

Anf n(const std::string& text) { return to_anf(parse(text)); }
Anf n(const std::string& text, const std::vector<std::string>& vars) {
  return to_anf(parse(text), vars);
}

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

Anf random_anf(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  std::vector<Monomial> ms;
  const Monomial count = Monomial{1} << vars.size();
  for (Monomial m = 0; m < count; ++m) {
    if (rng() % 4 == 0) {
      ms.push_back(m);
    }
  }
  return Anf(vars, ms);
}

std::vector<std::string> names(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back("v" + std::to_string(i));
  }
  return out;
}

} // namespace

TEST_CASE("to_anf examples") {
  CHECK(n("x | y") == Anf(kXY, {0b11, 0b01, 0b10}));
  CHECK(n("!(x & y) & (x | y)") == Anf(kXY, {0b01, 0b10}));
  CHECK(n("median(x,y,z)") == Anf(kXYZ, {0b011, 0b110, 0b101}));
  CHECK(n("x & x") == Anf::variable({"x"}, 0));
  CHECK(n("x ^ x").is_zero());
  CHECK(n("!x") == Anf({"x"}, {0, 1}));
}

TEST_CASE("to_anf honours an explicit order and rejects missing variables") {
  const Anf f = n("y & x", kXYZ);
  CHECK(f.vars() == kXYZ);
  CHECK(f.monomials() == std::vector<Monomial>{0b011});
  CHECK_THROWS_AS(n("w & x", kXY), Error);
  CHECK_THROWS_AS(n("x", {"x", "x"}), Error);
}

TEST_CASE("ring examples") {
  CHECK(n("x & y ^ x", kXY) + n("x & y", kXY) == n("x", kXY));
  CHECK(n("!x", kXY) + n("!y", kXY) == n("x ^ y", kXY));
  CHECK(n("!x", kXY) * n("!y", kXY) == Anf(kXY, {0b11, 0b01, 0b10, 0}));
  CHECK(n("!(x & y)", kXY) * n("x | y", kXY) == n("x ^ y", kXY));
  const Anf x = Anf::variable(kXY, 0);
  CHECK(x * x == x);
  CHECK_THROWS_AS(Anf::variable(kXY, 0) + Anf::variable(kXYZ, 0), Error);
}

TEST_CASE("constructor reduces modulo 2 and validates") {
  CHECK(Anf(kXY, {0b01, 0b01, 0b10}) == Anf::variable(kXY, 1));
  CHECK_THROWS_AS(Anf(kXY, {0b100}), Error);
  CHECK_THROWS_AS(Anf({"x", ""}, {}), Error);
  CHECK_THROWS_AS(Anf(names(33), {}), Error);
  CHECK_NOTHROW(Anf(names(32), {0x80000000u}));
  CHECK(Anf({}, {0}) == Anf::one({}));
}

TEST_CASE("canonical order and rendering") {
  CHECK(render_anf(Anf({"x", "y"}, {0b11, 0b01, 0})) == "1 + x + x*y");
  CHECK(render_anf(Anf::zero(kXY)) == "0");
  CHECK(render_anf(n("median(x,y,z)")) == "x*y + x*z + y*z");
  CHECK(canonical_less(0b001, 0b010));
  CHECK(canonical_less(0b011, 0b101));
  CHECK(canonical_less(0b101, 0b110));
  CHECK(canonical_less(0b100, 0b011));
  CHECK_FALSE(canonical_less(0b011, 0b011));
  CHECK(indices(0b1010) == std::vector<std::size_t>{1, 3});
}

TEST_CASE("compose examples") {
  const Anf x = Anf::variable(kXY, 0);
  const Anf y = Anf::variable(kXY, 1);
  const Anf f = Anf(kXY, {0b11, 0b01});
  const std::vector<Anf> a{x, compose(f, std::vector<Anf>{x, y})};
  CHECK(compose(f, a) == Anf(kXY, {0b11}));
  const Anf h = Anf(kXY, {0b11, 0});
  const std::vector<Anf> b{compose(h, std::vector<Anf>{x, x}), compose(h, std::vector<Anf>{y, y})};
  CHECK(compose(h, b) == n("x | y"));
  CHECK(compose(f, std::vector<Anf>{x, y}) == f);
  CHECK_THROWS_AS(compose(f, std::vector<Anf>{x}), Error);
  CHECK_THROWS_AS(compose(f, std::vector<Anf>{x, Anf::variable(kXYZ, 1)}), Error);
}

TEST_CASE("identify examples") {
  const auto v4 = std::vector<std::string>{"x1", "x2", "x3", "x4"};
  CHECK(identify(Anf(v4, {0b1111}), 2, 3) == Anf({"x1", "x2", "x3"}, {0b111}));
  const Anf g = identify(Anf(v4, {0b0011, 0b1100}), 1, 2);
  CHECK(g.monomials() == std::vector<Monomial>{0b011, 0b110});
  CHECK(g.variable_count() == 3);
  CHECK(render_anf(g) == "x1*x2 + x2*x4");
  const Anf h = identify(Anf({"x1", "x2"}, {0b11, 0b01, 0b10}), 0, 1);
  CHECK(h == Anf::variable({"x1"}, 0));
  CHECK_THROWS_AS(identify(h, 0, 0), Error);
  CHECK_THROWS_AS(identify(Anf(v4, {}), 2, 1), Error);
  CHECK_THROWS_AS(identify(Anf(v4, {}), 1, 4), Error);
}

TEST_CASE("shape examples") {
  CHECK(std::holds_alternative<NonLinearShape>(shape(n("x | y"))));
  const Shape s = shape(n("x ^ y ^ z ^ 1"));
  REQUIRE(std::holds_alternative<LinearShape>(s));
  CHECK(std::get<LinearShape>(s).essential == 3);
  CHECK(std::get<LinearShape>(s).alpha);
  REQUIRE(std::holds_alternative<ConstantShape>(shape(n("1"))));
  CHECK(std::get<ConstantShape>(shape(n("1"))).value);
  REQUIRE(std::holds_alternative<ProjectionShape>(shape(n("y", kXYZ))));
  CHECK(std::get<ProjectionShape>(shape(n("y", kXYZ))).variable == 1);
  const Shape neg = shape(n("!x"));
  REQUIRE(std::holds_alternative<LinearShape>(neg));
  CHECK(std::get<LinearShape>(neg).essential == 1);
  CHECK(std::holds_alternative<ConstantShape>(shape(n("x ^ x"))));
}

TEST_CASE("translation defect examples") {
  const Anf dm = translation_defect(n("median(x,y,z)"));
  CHECK(dm.vars() == std::vector<std::string>{"x", "y", "z", "c"});
  CHECK(dm == Anf::variable(dm.vars(), 3));
  const Anf dxy = translation_defect(n("x & y"));
  CHECK(restrict_variable(dxy, 2, true) == Anf(std::vector<std::string>{"x", "y"}, {0b01, 0b10, 0}));
  const Anf dx = translation_defect(n("x"));
  CHECK(dx == Anf::variable(dx.vars(), 1));
  CHECK(translation_defect(n("c & c_1")).vars().back() == "c_2");
  CHECK_THROWS_AS(translation_defect(Anf(names(32), {})), Error);
}

TEST_CASE("embed and restrict") {
  const Anf f = n("x & y");
  const Anf e = embed(f, {"y", "w", "x"});
  CHECK(e.monomials() == std::vector<Monomial>{0b101});
  CHECK_THROWS_AS(embed(f, {"x"}), Error);
  CHECK(restrict_variable(f, 0, false).is_zero());
  CHECK(restrict_variable(f, 0, true) == Anf::variable({"y"}, 0));
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(1);
  for (int round = 0; round < 300; ++round) {
    const auto vars = names(1 + rng() % 6);
    const Anf f = random_anf(rng, vars);
    const Anf g = random_anf(rng, vars);
    const Anf h = random_anf(rng, vars);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f + f).is_zero());
    CHECK(f * f == f);
    CHECK(f * Anf::one(vars) == f);
    CHECK(f + Anf::zero(vars) == f);
  }
}

TEST_CASE("normal form agrees with direct evaluation") {
  // Every term on up to 4 variables built from random syntax must have a
  // normal form whose truth table equals the term's own.
  std::mt19937_64 rng(2);
  const char* ops[] = {"&", "|", "^"};
  const std::vector<std::string> vars{"a", "b", "c", "d"};
  for (int round = 0; round < 500; ++round) {
    std::vector<std::string> pool{"a", "b", "c", "d", "0", "1"};
    std::string text = pool[rng() % pool.size()];
    for (int k = 0; k < 6; ++k) {
      const std::string rhs = pool[rng() % pool.size()];
      switch (rng() % 4) {
      case 0:
        text = "!(" + text + ")";
        break;
      case 1:
        text = "median(" + text + "," + rhs + "," + pool[rng() % pool.size()] + ")";
        break;
      default:
        text = "(" + text + ") " + ops[rng() % 3] + " " + rhs;
      }
    }
    const Term t = parse(text);
    const Anf f = to_anf(t, vars);
    for (std::uint64_t a = 0; a < 16; ++a) {
      REQUIRE_MESSAGE(evaluate(f, a) == evaluate(t, vars, a), text);
    }
  }
}

TEST_CASE("identify agrees with evaluation") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 300; ++round) {
    const std::size_t k = 2 + rng() % 5;
    const Anf f = random_anf(rng, names(k));
    const std::size_t i = rng() % (k - 1);
    const std::size_t j = i + 1 + rng() % (k - 1 - i);
    const Anf g = identify(f, i, j);
    REQUIRE(g.variable_count() == k - 1);
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << (k - 1)); ++a) {
      // Old variable j takes the value of old variable i; later ones shift.
      std::uint64_t full = a & ((std::uint64_t{1} << j) - 1);
      full |= ((a >> i) & 1) << j;
      full |= (a >> j) << (j + 1);
      CHECK(evaluate(g, a) == evaluate(f, full));
    }
  }
}

TEST_CASE("translation defect agrees with evaluation") {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 200; ++round) {
    const std::size_t k = 1 + rng() % 5;
    const Anf f = random_anf(rng, names(k));
    const Anf d = translation_defect(f);
    const std::uint64_t ones = (std::uint64_t{1} << k) - 1;
    for (std::uint64_t a = 0; a <= ones; ++a) {
      for (std::uint64_t c = 0; c < 2; ++c) {
        const bool expected = evaluate(f, a ^ (c ? ones : 0)) != evaluate(f, a);
        CHECK(evaluate(d, a | (c << k)) == expected);
      }
    }
  }
}

TEST_CASE("compose is associative and agrees with evaluation") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 100; ++round) {
    const auto u = names(1 + rng() % 3);
    const auto v = names(1 + rng() % 3);
    const auto w = std::vector<std::string>{"p", "q", "r"};
    const Anf f = random_anf(rng, u);
    std::vector<Anf> gs;
    for (std::size_t i = 0; i < u.size(); ++i) {
      gs.push_back(random_anf(rng, v));
    }
    std::vector<Anf> hs;
    for (std::size_t i = 0; i < v.size(); ++i) {
      hs.push_back(random_anf(rng, w));
    }
    std::vector<Anf> ghs;
    for (const auto& g : gs) {
      ghs.push_back(compose(g, hs));
    }
    const Anf left = compose(compose(f, gs), hs);
    CHECK(left == compose(f, ghs));
    for (std::uint64_t a = 0; a < 8; ++a) {
      std::uint64_t inner = 0;
      for (std::size_t i = 0; i < gs.size(); ++i) {
        std::uint64_t mid = 0;
        for (std::size_t m = 0; m < hs.size(); ++m) {
          mid |= std::uint64_t{evaluate(hs[m], a)} << m;
        }
        inner |= std::uint64_t{evaluate(gs[i], mid)} << i;
      }
      CHECK(evaluate(left, a) == evaluate(f, inner));
    }
  }
}
