#pragma once

#include <optional>
#include <string>

#include "ccs/extraction/clustering.hpp"

namespace ccs {

struct SpikeTrace {
  ChainStats stats;
  BigInt vh;              // v * h
  BigInt vertical_binom;  // C(a+b-2, a-1)
  BigInt horizontal_binom;  // C(c+d-2, c-1)
  BigInt relaxed;           // 2^(a+b) * d^c
  bool size_le_vh = false;
  bool v_le_binom = false;
  bool h_le_binom = false;
};

enum class CandidateSource { RightLeftJoin, InnerOdd, InnerEven, Outer, ConfigurationHull, Clustering };

std::string_view to_string(CandidateSource s);

struct CandidateTrace {
  CandidateSource source = CandidateSource::Clustering;
  int spike = -1;             // first spike involved, when there is one
  std::vector<Label> joined;  // the set the join lemma vouches for
  std::vector<Label> extended;  // after greedy insertion of members of X
};

struct CertificateTrace {
  int points = 0;
  int k = 0;
  ClusteringStrategy strategy = ClusteringStrategy::Exhaustive;
  ConvexCertificate x;
  BigInt product;  // prod |P_i|
  std::vector<SpikeTrace> spikes;
  BigInt product_vh;
  BigInt product_binomials;
  BigInt product_relaxed;

  bool clustering_bound = false;  // N^k / 2^(8k^2) <= prod |P_i|
  bool product_le_vh = false;
  bool vh_le_binomials = false;
  bool binomials_le_relaxed = false;

  /// Only evaluated when the caller names an n for which the configuration is
  /// known to have no convex n-subset.
  std::optional<int> target;
  std::optional<bool> outer_below_target;        // d_i < n
  std::optional<bool> right_left_below_target;   // b_i + a_{i+1} < n
  std::optional<bool> inner_sum_below_twice;     // sum c_i < 2n
  std::optional<bool> relaxed_below_power;       // prod 2^(a+b) d^c < 2^(kn + 2n log2 n)
  std::optional<bool> size_below_bound;          // N < 2^(n + 2n log2 n / k + 8k)

  std::vector<CandidateTrace> candidates;
  int chosen = -1;
};

struct PipelineOptions {
  /// Defaults to Exhaustive when it is allowed, Sampled otherwise.
  std::optional<ClusteringStrategy> strategy;
  ClusteringOptions clustering;
  std::optional<int> target;
  bool extend_with_x = true;
};

struct PipelineResult {
  ConvexCertificate certificate;
  CertificateTrace trace;
};

/// Clusters with find_clustering, computes chain statistics per spike and
/// assembles convex subsets from the joinable chains: the right chain of
/// spike i with the left chain of spike i+1, the inner chains of all odd and
/// of all even spikes, and each outer chain. The hull of the whole
/// configuration and X itself are candidates too. Candidates are extended
/// greedily with members of X and the largest one is returned.
///
/// Throws AssemblyContradiction if a join that must be convex is not, plus
/// everything find_clustering throws.
PipelineResult suk_pipeline(const PseudoConfiguration& cfg, int k, const PipelineOptions& options = {});

}  // namespace ccs
