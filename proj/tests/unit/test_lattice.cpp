#include "reducts/lattice.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

using namespace reducts;
using N = ReductNode;

TEST_CASE("thirteen nodes with unique identifiers") {
  std::set<std::string> ids;
  for (N n : kAllNodes) {
    ids.insert(std::string(identifier(n)));
    CHECK(node_from_identifier(identifier(n)) == n);
    CHECK_FALSE(display_name(n).empty());
    CHECK_FALSE(description(n).empty());
  }
  CHECK(ids.size() == 13);
  CHECK_FALSE(node_from_identifier("LIN").has_value());
  CHECK(display_name(N::Median) == "median class (Aut(M)=T⋊Aut(BA))");
}

TEST_CASE("representatives") {
  CHECK(representatives(N::Median) == std::vector<std::string>{"median(x,y,z)"});
  CHECK(representatives(N::Lin01) == std::vector<std::string>{"x ^ y", "1"});
  CHECK(representatives(N::Ba) == std::vector<std::string>{"x & y"});
  CHECK(representatives(N::Neg01) == std::vector<std::string>{"!x", "0"});
  CHECK(representatives(N::Sigma1) == std::vector<std::string>{"!(x ^ y ^ z)"});
}

TEST_CASE("order examples") {
  CHECK(leq(N::Median, N::Sigma1));
  CHECK_FALSE(leq(N::Median, N::Stab0));
  for (N n : kAllNodes) {
    CHECK(leq(N::Ba, n));
    CHECK(leq(n, N::Sym));
  }
}

TEST_CASE("coatoms, top and bottom") {
  std::set<N> coatoms;
  for (N n : kAllNodes) {
    if (n == N::Sym) {
      continue;
    }
    const bool maximal = std::none_of(kAllNodes.begin(), kAllNodes.end(), [&](N m) {
      return m != n && m != N::Sym && leq(n, m);
    });
    if (maximal) {
      coatoms.insert(n);
    }
  }
  CHECK(coatoms == std::set<N>{N::Stab0, N::Stab1, N::Neg, N::Sigma});
}

TEST_CASE("meet and join examples") {
  CHECK(meet(N::Stab0, N::Sigma) == N::Plus0);
  CHECK(meet(N::Sigma, N::Neg) == N::Sigma1);
  CHECK(meet(N::Median, N::Stab0) == N::Ba);
  CHECK(join(N::Plus0, N::Plus1) == N::Sigma);
  CHECK(join(N::Median, N::Lin01) == N::Sigma1);
  CHECK(meet(N::Sigma1, N::Stab0) == N::Lin01);
}

TEST_CASE("coatom intersections") {
  CHECK(meet(N::Stab0, N::Stab1) == N::Stab01);
  CHECK(meet(N::Stab0, N::Neg) == N::Neg01);
  CHECK(meet(N::Stab1, N::Neg) == N::Neg01);
  CHECK(meet(N::Stab1, N::Sigma) == N::Plus1);
  CHECK(meet(meet(N::Stab0, N::Stab1), N::Neg) == N::Neg01);
  CHECK(meet(meet(N::Stab0, N::Stab1), N::Sigma) == N::Lin01);
  CHECK(meet(meet(N::Stab0, N::Neg), N::Sigma) == N::Lin01);
  CHECK(meet(meet(N::Stab1, N::Neg), N::Sigma) == N::Lin01);
  CHECK(meet(meet(N::Stab0, N::Stab1), meet(N::Neg, N::Sigma)) == N::Lin01);
}

TEST_CASE("covers generate the order and none is redundant") {
  const auto& edges = hasse_edges();
  CHECK(edges.size() == 21);
  CHECK(std::find(edges.begin(), edges.end(), Cover{N::Median, N::Sigma1}) != edges.end());
  // Independent closure of the cover list.
  bool reach[13][13] = {};
  for (N n : kAllNodes) {
    reach[index_of(n)][index_of(n)] = true;
  }
  for (auto [lo, hi] : edges) {
    reach[index_of(lo)][index_of(hi)] = true;
  }
  for (int k = 0; k < 13; ++k) {
    for (int i = 0; i < 13; ++i) {
      for (int j = 0; j < 13; ++j) {
        reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
      }
    }
  }
  for (N a : kAllNodes) {
    for (N b : kAllNodes) {
      CHECK(reach[index_of(a)][index_of(b)] == leq(a, b));
    }
  }
  for (auto [lo, hi] : edges) {
    CHECK(lo != hi);
    const bool between = std::any_of(kAllNodes.begin(), kAllNodes.end(), [&](N m) {
      return m != lo && m != hi && leq(lo, m) && leq(m, hi);
    });
    CHECK_FALSE(between);
  }
}

TEST_CASE("lattice axioms over all triples") {
  for (N a : kAllNodes) {
    CHECK(meet(a, a) == a);
    CHECK(join(a, a) == a);
    for (N b : kAllNodes) {
      CHECK(meet(a, b) == meet(b, a));
      CHECK(join(a, b) == join(b, a));
      CHECK(meet(a, join(a, b)) == a);
      CHECK(join(a, meet(a, b)) == a);
      CHECK((leq(a, b) && leq(b, a)) == (a == b));
      for (N c : kAllNodes) {
        CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
        CHECK(join(join(a, b), c) == join(a, join(b, c)));
        // meet is the greatest lower bound
        if (leq(c, a) && leq(c, b)) {
          CHECK(leq(c, meet(a, b)));
        }
        if (leq(a, c) && leq(b, c)) {
          CHECK(leq(join(a, b), c));
        }
      }
    }
  }
}

TEST_CASE("dot export") {
  const std::string dot = to_dot();
  CHECK(dot.rfind("digraph reducts {\n", 0) == 0);
  CHECK(dot.back() == '\n');
  std::istringstream in(dot);
  std::string line;
  int nodes = 0;
  int edges = 0;
  while (std::getline(in, line)) {
    if (line.find("->") != std::string::npos) {
      ++edges;
    } else if (line.find("[label=") != std::string::npos) {
      ++nodes;
    }
  }
  CHECK(nodes == 13);
  CHECK(edges == 21);
  CHECK(dot.find("  MEDIAN -> SIGMA1;\n") != std::string::npos);
  CHECK(dot.find("  BA [label=\"BA\\nx & y\"];\n") != std::string::npos);
}

TEST_CASE("table export") {
  const std::string table = to_table();
  CHECK(table.rfind("id\tname\trepresentatives\n", 0) == 0);
  CHECK(std::count(table.begin(), table.end(), '\n') == 1 + 13 + 2 + 21);
}
