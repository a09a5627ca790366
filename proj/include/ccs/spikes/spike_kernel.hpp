#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ccs/spikes/spikes.hpp"

namespace ccs {

/// Spike assignment from orientation signs alone: for X in convex position,
/// p lies in spike i iff X u {p} is in convex position and p is on the
/// clockwise side of the edge (x_i, x_{i+1}). Agrees with decompose() on every
/// CC-system; it skips the hull construction that decompose() performs.
///
/// For configurations of at most 64 points the kernel precomputes, for every
/// triple, the bitmask of points that break convexity with it, so a whole
/// decomposition is a handful of word operations. Larger configurations use
/// the scalar path.
class SpikeKernel {
 public:
  static constexpr int kMaxBitsetPoints = 64;

  explicit SpikeKernel(const PseudoConfiguration& cfg, bool allow_bitset = true);

  bool uses_bitset() const noexcept { return !blocked_.empty(); }
  const PseudoConfiguration& configuration() const noexcept { return cfg_; }

  /// P_i lists (sorted) for a convex cycle x_0..x_{k-1} in counterclockwise
  /// order. The cycle is trusted.
  std::vector<std::vector<Label>> spikes(std::span<const Label> cycle) const;

  /// |P_i| for every spike of the cycle; `sizes` must have k entries.
  void spike_sizes(std::span<const Label> cycle, std::span<int> sizes) const;

  /// Full decomposition; checks the certificate like decompose() does.
  SpikeDecomposition decompose(const ConvexCertificate& x) const;

 private:
  std::uint64_t extension_mask(std::span<const Label> cycle) const;
  std::uint64_t blocked(Label a, Label b, Label c) const;

  PseudoConfiguration cfg_;
  std::vector<std::uint64_t> blocked_;   // per sorted triple, lex index
  std::vector<std::uint64_t> clockwise_;  // [a*n+b]: points r with (a,b,r) clockwise
};

}  // namespace ccs
