#pragma once

#include <span>
#include <vector>

#include "ccs/core/pseudo_configuration.hpp"

namespace ccs {

/// A subset in convex position together with its boundary order.
/// `members` is sorted; `hull_cycle` starts at the smallest member and runs
/// counterclockwise (every other member lies to the left of each edge).
struct ConvexCertificate {
  std::vector<Label> members;
  std::vector<Label> hull_cycle;

  std::size_t size() const noexcept { return members.size(); }
  friend bool operator==(const ConvexCertificate&, const ConvexCertificate&) = default;
};

/// p lies in the pseudo-triangle abc: all of (a,b,p), (b,c,p), (c,a,p) share
/// the orientation of (a,b,c). Labels must be distinct.
inline bool inside_triangle(const PseudoConfiguration& cfg, Label p, Label a, Label b, Label c) noexcept {
  const Sign s = cfg.orient(a, b, c);
  return cfg.orient(a, b, p) == s && cfg.orient(b, c, p) == s && cfg.orient(c, a, p) == s;
}

/// Four distinct labels in convex position: none inside the others' triangle.
inline bool convex_quadruple(const PseudoConfiguration& cfg, Label a, Label b, Label c, Label d) noexcept {
  return !inside_triangle(cfg, a, b, c, d) && !inside_triangle(cfg, b, a, c, d) &&
         !inside_triangle(cfg, c, a, b, d) && !inside_triangle(cfg, d, a, b, c);
}

/// Checked form of inside_triangle. Throws RepeatedLabel.
bool in_triangle(const PseudoConfiguration& cfg, Label p, Label a, Label b, Label c);

/// Throws RepeatedLabel.
bool segments_cross(const PseudoConfiguration& cfg, Label a, Label b, Label c, Label d);

/// Every 4-subset of q is in convex position (pseudo-Caratheodory). Throws
/// SubsetTooSmall if |q| < 3.
bool is_convex_position(const PseudoConfiguration& cfg, std::span<const Label> q);

/// Members of q not inside any triangle of three other members, sorted.
std::vector<Label> hull_extremes(const PseudoConfiguration& cfg, std::span<const Label> q);

/// Extreme points of q with their counterclockwise boundary order. Throws
/// SubsetTooSmall, or HullCycleBroken when the sign table admits no
/// consistent cycle (only possible for tables that fail the axioms).
ConvexCertificate hull_cycle(const PseudoConfiguration& cfg, std::span<const Label> q);

/// p lies in some triangle spanned by extreme points of q. p must not be in q.
bool in_hull(const PseudoConfiguration& cfg, Label p, std::span<const Label> q);

/// Members are distinct, in convex position, and the cycle is a consistent
/// counterclockwise boundary order over exactly those members.
bool is_valid_certificate(const PseudoConfiguration& cfg, const ConvexCertificate& cert);

enum class SearchMode { Brute, ChainDp };

inline constexpr int kMaxBruteSize = 20;

/// Maximum-size subset in convex position; ties go to the lexicographically
/// smallest sorted member list. Brute enumerates subsets by decreasing size
/// (n <= 20, otherwise NTooLargeForBrute). ChainDp runs a longest convex chain
/// dynamic program around each anchor using orientation queries only.
ConvexCertificate largest_convex_subset(const PseudoConfiguration& cfg, SearchMode mode);

/// Size only; ChainDp without the lexicographic reconstruction.
int largest_convex_size(const PseudoConfiguration& cfg, SearchMode mode);

}  // namespace ccs
