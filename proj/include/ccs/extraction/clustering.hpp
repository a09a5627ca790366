#pragma once

#include <cstdint>
#include <optional>

#include "ccs/core/bigint.hpp"
#include "ccs/spikes/spikes.hpp"

namespace ccs {

enum class ClusteringStrategy { Exhaustive, Sampled };

std::string_view to_string(ClusteringStrategy s);

inline constexpr int kMaxExhaustiveN = 60;
inline constexpr int kMaxExhaustiveK = 4;

struct ClusteringOptions {
  std::uint64_t seed = 1;
  /// Number of 2k-subset draws for Sampled; defaults to ceil(10 N ln N).
  std::optional<std::uint64_t> samples;
};

struct Clustering {
  SpikeDecomposition decomposition;
  BigInt product;
  ClusteringStrategy strategy = ClusteringStrategy::Exhaustive;
  /// Distinct k-sets scored.
  std::uint64_t candidates = 0;
  /// Sampled only: draws that produced a convex 2k-set.
  std::uint64_t convex_samples = 0;
  /// Sampled only: how many convex 2k-sets the returned X supports.
  std::uint64_t support = 0;

  const ConvexCertificate& x() const noexcept { return decomposition.x; }
};

/// |P_0| * ... * |P_{k-1}|.
BigInt spike_product(const SpikeDecomposition& dec);

/// product * 2^(8 k^2) >= N^k.
bool clustering_bound_holds(int n_points, int k, const BigInt& product);

/// A convex k-set X with many points in every spike.
///
/// Exhaustive maximizes the spike product over every convex k-subset (ties go
/// to the lexicographically smallest member list); it is limited to
/// N <= 60 and k == 4. Sampled draws random 2k-subsets grown greedily in
/// convex position, and scores the two alternating k-subsets of each, which
/// support it. The best product wins, then the larger support, then the
/// smaller member list.
///
/// Throws InvalidArgument unless k >= 4 is even and N >= k, NTooLarge when
/// Exhaustive is outside its limits, NoConvexKSet when no convex k-subset
/// exists.
Clustering find_clustering(const PseudoConfiguration& cfg, int k, ClusteringStrategy strategy,
                           const ClusteringOptions& options = {});

}  // namespace ccs
