#include "ccs/extraction/pipeline.hpp"

#include <algorithm>

namespace ccs {

std::string_view to_string(CandidateSource s) {
  switch (s) {
    case CandidateSource::RightLeftJoin: return "right-left";
    case CandidateSource::InnerOdd: return "inner-odd";
    case CandidateSource::InnerEven: return "inner-even";
    case CandidateSource::Outer: return "outer";
    case CandidateSource::ConfigurationHull: return "hull";
    case CandidateSource::Clustering: return "x";
  }
  return "unknown";
}

namespace {

bool convex_or_small(const PseudoConfiguration& cfg, const std::vector<Label>& set) {
  return set.size() < 3 || is_convex_position(cfg, set);
}

std::vector<Label> sorted_union(std::vector<Label> a, const std::vector<Label>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

void require_convex(const PseudoConfiguration& cfg, const std::vector<Label>& set, std::string_view what) {
  if (!convex_or_small(cfg, set)) {
    throw Error(ErrorCode::AssemblyContradiction, std::string(what) + " join is not in convex position", set);
  }
}

SpikeTrace trace_spike(const ChainStats& s) {
  SpikeTrace t;
  t.stats = s;
  t.vh = BigInt(s.v) * s.h;
  t.vertical_binom = binomial(s.a + s.b - 2, s.a - 1);
  t.horizontal_binom = binomial(s.c + s.d - 2, s.c - 1);
  // 0^0 = 1 for empty spikes.
  t.relaxed = power(2, s.a + s.b) * power(s.d, s.c);
  t.size_le_vh = BigInt(s.size) <= t.vh;
  t.v_le_binom = BigInt(s.v) <= t.vertical_binom;
  t.h_le_binom = BigInt(s.h) <= t.horizontal_binom;
  return t;
}

// 2^(2n log2 n) is n^(2n), so both power comparisons stay in integers.
void evaluate_target(CertificateTrace& trace, int n) {
  const int k = trace.k;
  trace.target = n;
  bool outer = true, right_left = true;
  long inner_sum = 0;
  for (int i = 0; i < k; ++i) {
    const ChainStats& s = trace.spikes[i].stats;
    const ChainStats& next = trace.spikes[(i + 1) % k].stats;
    outer = outer && s.d < n;
    right_left = right_left && s.b + next.a < n;
    inner_sum += s.c;
  }
  const BigInt n_pow = power(n, 2 * static_cast<unsigned>(n));
  trace.outer_below_target = outer;
  trace.right_left_below_target = right_left;
  trace.inner_sum_below_twice = inner_sum < 2L * n;
  trace.relaxed_below_power = trace.product_relaxed < power(2, static_cast<unsigned>(k * n)) * n_pow;
  // N < 2^(n + 2n log2 n / k + 8k)  <=>  N^k < 2^(kn + 8k^2) n^(2n)
  trace.size_below_bound = power(trace.points, static_cast<unsigned>(k)) <
                           power(2, static_cast<unsigned>(k * n + 8 * k * k)) * n_pow;
}

}  // namespace

PipelineResult suk_pipeline(const PseudoConfiguration& cfg, int k, const PipelineOptions& options) {
  const int n_points = cfg.size();
  const ClusteringStrategy strategy =
      options.strategy.value_or(n_points <= kMaxExhaustiveN && k <= kMaxExhaustiveK ? ClusteringStrategy::Exhaustive
                                                                                   : ClusteringStrategy::Sampled);
  Clustering clustering = find_clustering(cfg, k, strategy, options.clustering);
  const SpikeDecomposition& dec = clustering.decomposition;

  CertificateTrace trace;
  trace.points = n_points;
  trace.k = k;
  trace.strategy = strategy;
  trace.x = dec.x;
  trace.product = clustering.product;
  trace.product_vh = trace.product_binomials = trace.product_relaxed = 1;
  std::vector<ChainStats> stats;
  for (int i = 0; i < k; ++i) {
    stats.push_back(chain_stats(cfg, dec, i));
    trace.spikes.push_back(trace_spike(stats.back()));
    const SpikeTrace& t = trace.spikes.back();
    trace.product_vh *= t.vh;
    trace.product_binomials *= t.vertical_binom * t.horizontal_binom;
    trace.product_relaxed *= t.relaxed;
  }
  trace.clustering_bound = clustering_bound_holds(n_points, k, trace.product);
  trace.product_le_vh = trace.product <= trace.product_vh;
  trace.vh_le_binomials = trace.product_vh <= trace.product_binomials;
  trace.binomials_le_relaxed = trace.product_binomials <= trace.product_relaxed;
  if (options.target) evaluate_target(trace, *options.target);

  auto add = [&](CandidateSource source, int spike, std::vector<Label> joined) {
    std::sort(joined.begin(), joined.end());
    trace.candidates.push_back(CandidateTrace{source, spike, joined, joined});
  };
  for (int i = 0; i < k; ++i) {
    const auto joined = sorted_union(stats[i].right_chain, stats[(i + 1) % k].left_chain);
    require_convex(cfg, joined, "right-left");
    add(CandidateSource::RightLeftJoin, i, joined);
  }
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<Label> joined;
    for (int i = parity; i < k; i += 2) joined = sorted_union(joined, stats[i].inner_chain);
    require_convex(cfg, joined, "inner");
    add(parity == 0 ? CandidateSource::InnerEven : CandidateSource::InnerOdd, parity, joined);
  }
  for (int i = 0; i < k; ++i) {
    require_convex(cfg, stats[i].outer_chain, "outer");
    add(CandidateSource::Outer, i, stats[i].outer_chain);
  }
  std::vector<Label> all(n_points);
  for (Label p = 0; p < n_points; ++p) all[p] = p;
  add(CandidateSource::ConfigurationHull, -1, hull_extremes(cfg, all));
  add(CandidateSource::Clustering, -1, dec.x.members);

  if (options.extend_with_x) {
    for (CandidateTrace& c : trace.candidates) {
      for (Label x : dec.x.hull_cycle) {
        if (std::binary_search(c.extended.begin(), c.extended.end(), x)) continue;
        std::vector<Label> grown = sorted_union(c.extended, {x});
        if (convex_or_small(cfg, grown)) c.extended = std::move(grown);
      }
    }
  }

  for (int c = 0; c < static_cast<int>(trace.candidates.size()); ++c) {
    const auto& set = trace.candidates[c].extended;
    if (set.size() < 3) continue;
    if (trace.chosen < 0) {
      trace.chosen = c;
      continue;
    }
    const auto& best = trace.candidates[trace.chosen].extended;
    if (set.size() > best.size() || (set.size() == best.size() && set < best)) trace.chosen = c;
  }

  PipelineResult result;
  const auto& members = trace.candidates[trace.chosen].extended;
  if (!is_convex_position(cfg, members)) {
    throw Error(ErrorCode::AssemblyContradiction, "chosen candidate is not in convex position", members);
  }
  result.certificate = hull_cycle(cfg, members);
  result.trace = std::move(trace);
  return result;
}

}  // namespace ccs
