#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ccs/convexity/convexity.hpp"

namespace ccs {

/// Outside points of a convex k-set X (k >= 4) grouped by spike. Spike i lies
/// beyond the hull edge (x_i, x_{i+1}); indices are 0-based and cyclic mod k.
struct SpikeDecomposition {
  ConvexCertificate x;
  /// Per label: the spike index, or nullopt for members of X and for points in
  /// no spike.
  std::vector<std::optional<int>> assignment;
  /// P_i, sorted.
  std::vector<std::vector<Label>> spikes;

  int k() const noexcept { return static_cast<int>(x.hull_cycle.size()); }
  Label vertex(int i) const noexcept {
    const int kk = k();
    return x.hull_cycle[((i % kk) + kk) % kk];
  }
  /// x_{i-1}: the anchor that left convex chains of spike i are convex with.
  Label left_anchor(int i) const noexcept { return vertex(i - 1); }
  /// x_{i+2}: the anchor for right convex chains.
  Label right_anchor(int i) const noexcept { return vertex(i + 2); }
  const std::vector<Label>& spike(int i) const { return spikes[((i % k()) + k()) % k()]; }
};

/// Spike of p: X u {p} is in convex position and p sits between x_i and
/// x_{i+1} on its boundary. Throws PInX, InvalidArgument (k < 4 or X not a
/// valid certificate).
std::optional<int> spike_of(const PseudoConfiguration& cfg, const ConvexCertificate& x, Label p);

/// spike_of applied to every label outside X.
SpikeDecomposition decompose(const PseudoConfiguration& cfg, const ConvexCertificate& x);

enum class SpikeRelation {
  VerticalBelow,     // p <v q
  VerticalAbove,     // q <v p
  HorizontalBefore,  // p <h q
  HorizontalAfter,   // q <h p
};

std::string_view to_string(SpikeRelation r);

/// p <v q: p lies in the triangle (x_{i-1}, q, x_{i+2}).
bool precedes_vertically(const PseudoConfiguration& cfg, const SpikeDecomposition& dec, int i, Label p, Label q);
/// p <h q: the pseudosegments x_{i-1}q and x_{i+2}p cross.
bool precedes_horizontally(const PseudoConfiguration& cfg, const SpikeDecomposition& dec, int i, Label p, Label q);

/// The unique relation between two distinct points of P_i. Throws
/// AmbiguousRelation / NoRelation if zero or several of the four hold.
SpikeRelation relation_in_spike(const PseudoConfiguration& cfg, const SpikeDecomposition& dec, int i,
                                Label p, Label q);

enum class VerticalClass { Left, Right };
enum class HorizontalClass { Inner, Outer };

std::string_view to_string(VerticalClass c);
std::string_view to_string(HorizontalClass c);

/// For p <v q <v r in P_i: Left iff {p,q,r,x_{i-1}} is in convex position,
/// Right iff {p,q,r,x_{i+2}} is. Throws BothOrNeither if not exactly one holds,
/// InvalidArgument if the points are not a vertical chain.
VerticalClass classify_vertical_triple(const PseudoConfiguration& cfg, const SpikeDecomposition& dec, int i,
                                       Label p, Label q, Label r);

/// For p <h q <h r in P_i: Inner iff {p,q,r,x_{i-1},x_{i+2}} is in convex
/// position. Throws InvalidArgument if the points are not a horizontal chain.
HorizontalClass classify_horizontal_triple(const PseudoConfiguration& cfg, const SpikeDecomposition& dec,
                                           int i, Label p, Label q, Label r);

struct ChainStats {
  int spike = 0;
  int size = 0;
  int v = 0, h = 0;  // longest vertical / horizontal chains
  int a = 0, b = 0;  // longest left / right sub-chain of the fixed vertical chain
  int c = 0, d = 0;  // longest inner / outer sub-chain of the fixed horizontal chain
  std::vector<Label> vertical_chain;
  std::vector<Label> horizontal_chain;
  std::vector<Label> left_chain;
  std::vector<Label> right_chain;
  std::vector<Label> inner_chain;
  std::vector<Label> outer_chain;
};

/// Longest chains of both orders (lexicographically smallest on ties) and the
/// left/right and inner/outer statistics inside those fixed chains.
ChainStats chain_stats(const PseudoConfiguration& cfg, const SpikeDecomposition& dec, int i);

}  // namespace ccs
