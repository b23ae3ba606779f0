#include "reducts/lattice.hpp"

#include "reducts/error.hpp"

#include <algorithm>

namespace reducts {
namespace {

using N = ReductNode;

struct NodeInfo {
  std::string_view id;
  std::string_view name;
  std::string_view description;
  std::vector<std::string> representatives;
};

const std::array<NodeInfo, kNodeCount>& infos() {
  static const std::array<NodeInfo, kNodeCount> table{{
      {"SYM", "full symmetric group", "projections only: no constraint on permutations", {"x"}},
      {"STAB0", "stabilizer of 0", "the constant 0", {"0"}},
      {"STAB1", "stabilizer of 1", "the constant 1", {"1"}},
      {"NEG", "complementation", "permutations commuting with complement", {"!x"}},
      {"SIGMA", "affine space", "x+y+z: translations composed with linear maps",
       {"x ^ y ^ z"}},
      {"STAB01", "pointwise stabilizer of 0 and 1", "both constants", {"0", "1"}},
      {"PLUS0", "vector space (zero 0)", "x+y: linear permutations", {"x ^ y"}},
      {"PLUS1", "vector space (zero 1)", "x+y+1: linear maps conjugated by t_1",
       {"!(x ^ y)"}},
      {"SIGMA1", "complement-preserving affine space",
       "x+y+z+1: translations composed with linear maps fixing 1", {"!(x ^ y ^ z)"}},
      {"NEG01", "complementation with constants", "complement-commuting permutations fixing 0",
       {"!x", "0"}},
      {"LIN01", "vector space with 1", "linear permutations fixing 1", {"x ^ y", "1"}},
      {"MEDIAN", "median class (Aut(M)=T⋊Aut(BA))",
       "xy+yz+zx: translations composed with automorphisms", {"median(x,y,z)"}},
      {"BA", "Boolean algebra", "automorphisms of the Boolean algebra", {"x & y"}},
  }};
  return table;
}

struct Tables {
  std::vector<Cover> covers;
  std::array<std::array<bool, kNodeCount>, kNodeCount> order{};
  std::array<std::array<N, kNodeCount>, kNodeCount> meets{};
  std::array<std::array<N, kNodeCount>, kNodeCount> joins{};
};

Tables build() {
  Tables t;
  t.covers = {
      {N::Stab0, N::Sym},    {N::Stab1, N::Sym},    {N::Neg, N::Sym},
      {N::Sigma, N::Sym},    {N::Stab01, N::Stab0}, {N::Plus0, N::Stab0},
      {N::Stab01, N::Stab1}, {N::Plus1, N::Stab1},  {N::Neg01, N::Neg},
      {N::Sigma1, N::Neg},   {N::Plus0, N::Sigma},  {N::Plus1, N::Sigma},
      {N::Sigma1, N::Sigma}, {N::Neg01, N::Stab01}, {N::Lin01, N::Plus0},
      {N::Lin01, N::Plus1},  {N::Lin01, N::Neg01},  {N::Lin01, N::Sigma1},
      {N::Median, N::Sigma1}, {N::Ba, N::Lin01},    {N::Ba, N::Median},
  };
  auto& le = t.order;
  for (std::size_t i = 0; i < kNodeCount; ++i) {
    le[i][i] = true;
  }
  for (auto [lo, hi] : t.covers) {
    le[index_of(lo)][index_of(hi)] = true;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < kNodeCount; ++k) {
    for (std::size_t i = 0; i < kNodeCount; ++i) {
      for (std::size_t j = 0; j < kNodeCount; ++j) {
        le[i][j] = le[i][j] || (le[i][k] && le[k][j]);
      }
    }
  }
  auto bound = [&](std::size_t a, std::size_t b, bool lower) -> N {
    std::vector<std::size_t> candidates;
    for (std::size_t c = 0; c < kNodeCount; ++c) {
      const bool ok = lower ? (le[c][a] && le[c][b]) : (le[a][c] && le[b][c]);
      if (ok) {
        candidates.push_back(c);
      }
    }
    for (std::size_t c : candidates) {
      const bool extreme = std::all_of(candidates.begin(), candidates.end(), [&](std::size_t d) {
        return lower ? le[d][c] : le[c][d];
      });
      if (extreme) {
        return static_cast<N>(c);
      }
    }
    throw Error("lattice tables: no unique bound");
  };
  for (std::size_t a = 0; a < kNodeCount; ++a) {
    for (std::size_t b = 0; b < kNodeCount; ++b) {
      t.meets[a][b] = bound(a, b, true);
      t.joins[a][b] = bound(a, b, false);
    }
  }
  return t;
}

const Tables& tables() {
  static const Tables t = build();
  return t;
}

} // namespace

std::string_view identifier(ReductNode n) { return infos()[index_of(n)].id; }

std::optional<ReductNode> node_from_identifier(std::string_view id) {
  for (ReductNode n : kAllNodes) {
    if (identifier(n) == id) {
      return n;
    }
  }
  return std::nullopt;
}

std::string_view display_name(ReductNode n) { return infos()[index_of(n)].name; }

std::string_view description(ReductNode n) { return infos()[index_of(n)].description; }

const std::vector<std::string>& representatives(ReductNode n) {
  return infos()[index_of(n)].representatives;
}

bool leq(ReductNode a, ReductNode b) { return tables().order[index_of(a)][index_of(b)]; }

ReductNode meet(ReductNode a, ReductNode b) { return tables().meets[index_of(a)][index_of(b)]; }

ReductNode join(ReductNode a, ReductNode b) { return tables().joins[index_of(a)][index_of(b)]; }

const std::vector<Cover>& hasse_edges() { return tables().covers; }

namespace {

std::string joined_representatives(ReductNode n) {
  std::string out;
  for (const auto& r : representatives(n)) {
    if (!out.empty()) {
      out += ", ";
    }
    out += r;
  }
  return out;
}

} // namespace

std::string to_dot() {
  std::string out = "digraph reducts {\n  rankdir=BT;\n  node [shape=box];\n";
  for (ReductNode n : kAllNodes) {
    out += "  ";
    out += identifier(n);
    out += " [label=\"";
    out += identifier(n);
    out += "\\n";
    out += joined_representatives(n);
    out += "\"];\n";
  }
  for (auto [lo, hi] : hasse_edges()) {
    out += "  ";
    out += identifier(lo);
    out += " -> ";
    out += identifier(hi);
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string to_table() {
  std::string out = "id\tname\trepresentatives\n";
  for (ReductNode n : kAllNodes) {
    out += identifier(n);
    out += '\t';
    out += display_name(n);
    out += '\t';
    out += joined_representatives(n);
    out += '\n';
  }
  out += "\ncovers (lower\tupper)\n";
  for (auto [lo, hi] : hasse_edges()) {
    out += identifier(lo);
    out += '\t';
    out += identifier(hi);
    out += '\n';
  }
  return out;
}

} // namespace reducts
