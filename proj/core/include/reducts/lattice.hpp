#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace reducts {

/// The 13 interdefinability classes of functional reducts, named after a
/// representative reduct. Ordered top (Sym) to bottom (Ba).
enum class ReductNode : std::uint8_t {
  Sym,
  Stab0,
  Stab1,
  Neg,
  Sigma,
  Stab01,
  Plus0,
  Plus1,
  Sigma1,
  Neg01,
  Lin01,
  Median,
  Ba,
};

inline constexpr std::size_t kNodeCount = 13;

inline constexpr std::array<ReductNode, kNodeCount> kAllNodes{
    ReductNode::Sym,   ReductNode::Stab0,  ReductNode::Stab1, ReductNode::Neg,
    ReductNode::Sigma, ReductNode::Stab01, ReductNode::Plus0, ReductNode::Plus1,
    ReductNode::Sigma1, ReductNode::Neg01, ReductNode::Lin01, ReductNode::Median,
    ReductNode::Ba,
};

constexpr std::size_t index_of(ReductNode n) noexcept { return static_cast<std::size_t>(n); }

/// "SYM", "STAB0", ...
std::string_view identifier(ReductNode n);
std::optional<ReductNode> node_from_identifier(std::string_view id);
std::string_view display_name(ReductNode n);
std::string_view description(ReductNode n);
/// Term strings of a reduct in this class, e.g. {"x ^ y", "1"} for LIN01.
const std::vector<std::string>& representatives(ReductNode n);

/// Cover pair (lower, upper): the group of `lower` is a maximal proper
/// subgroup of the group of `upper` among the 13 classes.
using Cover = std::pair<ReductNode, ReductNode>;

/// Order by inclusion of automorphism groups: leq(a, b) iff Aut(a) <= Aut(b).
/// Smaller groups define more.
bool leq(ReductNode a, ReductNode b);
ReductNode meet(ReductNode a, ReductNode b);
ReductNode join(ReductNode a, ReductNode b);

/// The 21 cover relations, lower node first.
const std::vector<Cover>& hasse_edges();

/// Graph-description (DOT) export: one node per class, one edge per cover
/// pointing from the lower class to the upper one.
std::string to_dot();

/// Tab-separated listing: a node table followed by the cover list.
std::string to_table();

} // namespace reducts
