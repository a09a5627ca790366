#include "ccs/extraction/clustering.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "ccs/core/random.hpp"
#include "ccs/spikes/spike_kernel.hpp"

namespace ccs {

std::string_view to_string(ClusteringStrategy s) {
  return s == ClusteringStrategy::Exhaustive ? "EXHAUSTIVE" : "SAMPLED";
}

BigInt spike_product(const SpikeDecomposition& dec) {
  BigInt product = 1;
  for (const auto& s : dec.spikes) product *= s.size();
  return product;
}

bool clustering_bound_holds(int n_points, int k, const BigInt& product) {
  return product * power(2, 8 * k * k) >= power(n_points, k);
}

namespace {

// Counterclockwise cycle of labels known to be in convex position, starting
// at the smallest.
std::vector<Label> convex_cycle(const PseudoConfiguration& cfg, std::vector<Label> members) {
  std::sort(members.begin(), members.end());
  std::vector<Label> cycle{members.front()};
  std::vector<char> used(members.size(), 0);
  used[0] = 1;
  while (cycle.size() < members.size()) {
    const Label a = cycle.back();
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (used[j]) continue;
      bool all_left = true;
      for (std::size_t t = 0; t < members.size() && all_left; ++t)
        if (members[t] != a && t != j) all_left = cfg.ccw(a, members[j], members[t]);
      if (all_left) {
        used[j] = 1;
        cycle.push_back(members[j]);
        break;
      }
    }
  }
  return cycle;
}

struct Best {
  std::vector<Label> members;
  std::vector<Label> cycle;
  BigInt product = -1;
  std::uint64_t support = 0;
};

void offer(Best& best, std::vector<Label> members, std::vector<Label> cycle, const BigInt& product,
           std::uint64_t support) {
  const bool better = product > best.product ||
                      (product == best.product &&
                       (support > best.support || (support == best.support && members < best.members)));
  if (!better) return;
  best.members = std::move(members);
  best.cycle = std::move(cycle);
  best.product = product;
  best.support = support;
}

Clustering finish(const SpikeKernel& kernel, Best best, ClusteringStrategy strategy) {
  Clustering out;
  out.strategy = strategy;
  out.decomposition = kernel.decompose(ConvexCertificate{best.members, best.cycle});
  out.product = spike_product(out.decomposition);
  out.support = best.support;
  return out;
}

Clustering exhaustive(const PseudoConfiguration& cfg, int k) {
  const int n = cfg.size();
  if (n > kMaxExhaustiveN || k > kMaxExhaustiveK) {
    throw Error(ErrorCode::NTooLarge, "exhaustive clustering needs N <= 60 and k == 4");
  }
  const SpikeKernel kernel(cfg);
  Best best;
  std::uint64_t best_product = 0;
  std::array<int, 4> sizes{};
  std::uint64_t candidates = 0;
  for (Label a = 0; a < n; ++a)
    for (Label b = a + 1; b < n; ++b)
      for (Label c = b + 1; c < n; ++c)
        for (Label d = c + 1; d < n; ++d) {
          if (!convex_quadruple(cfg, a, b, c, d)) continue;
          ++candidates;
          std::vector<Label> cycle = convex_cycle(cfg, {a, b, c, d});
          kernel.spike_sizes(cycle, sizes);
          const std::uint64_t product = std::uint64_t(sizes[0]) * sizes[1] * sizes[2] * sizes[3];
          if (candidates == 1 || product > best_product) {
            best_product = product;
            offer(best, {a, b, c, d}, std::move(cycle), product, 0);
          }
        }
  if (candidates == 0) throw Error(ErrorCode::NoConvexKSet, "no 4-subset in convex position");
  Clustering out = finish(kernel, std::move(best), ClusteringStrategy::Exhaustive);
  out.candidates = candidates;
  return out;
}

// Adds labels from `order` while convex position survives, up to `target`.
std::vector<Label> grow_convex(const PseudoConfiguration& cfg, const std::vector<Label>& order, std::size_t target) {
  std::vector<Label> set;
  for (Label p : order) {
    bool ok = true;
    for (std::size_t i = 0; i < set.size() && ok; ++i)
      for (std::size_t j = i + 1; j < set.size() && ok; ++j)
        for (std::size_t l = j + 1; l < set.size() && ok; ++l) ok = convex_quadruple(cfg, set[i], set[j], set[l], p);
    if (!ok) continue;
    set.push_back(p);
    if (set.size() == target) break;
  }
  return set;
}

Clustering sampled(const PseudoConfiguration& cfg, int k, const ClusteringOptions& options) {
  const int n = cfg.size();
  const std::uint64_t draws =
      options.samples ? *options.samples
                      : static_cast<std::uint64_t>(std::ceil(10.0 * n * std::log(static_cast<double>(n))));
  const SpikeKernel kernel(cfg);
  Rng rng(options.seed);
  std::vector<Label> order(n);
  for (Label p = 0; p < n; ++p) order[p] = p;

  std::map<std::vector<Label>, std::uint64_t> support;
  std::uint64_t convex_samples = 0;
  for (std::uint64_t s = 0; s < draws; ++s) {
    shuffle(order, rng);
    const std::vector<Label> y = grow_convex(cfg, order, 2 * static_cast<std::size_t>(k));
    if (y.size() < 2 * static_cast<std::size_t>(k)) continue;
    ++convex_samples;
    const std::vector<Label> cycle = convex_cycle(cfg, y);
    for (int parity = 0; parity < 2; ++parity) {
      std::vector<Label> x;
      for (int t = parity; t < 2 * k; t += 2) x.push_back(cycle[t]);
      std::sort(x.begin(), x.end());
      ++support[x];
    }
  }
  if (support.empty()) {
    // No convex 2k-set turned up: fall back to convex k-sets.
    for (std::uint64_t s = 0; s < draws; ++s) {
      shuffle(order, rng);
      std::vector<Label> x = grow_convex(cfg, order, static_cast<std::size_t>(k));
      if (x.size() < static_cast<std::size_t>(k)) continue;
      std::sort(x.begin(), x.end());
      support.emplace(std::move(x), 0);
    }
  }
  if (support.empty()) {
    const ConvexCertificate largest = largest_convex_subset(cfg, SearchMode::ChainDp);
    if (largest.size() < static_cast<std::size_t>(k)) {
      throw Error(ErrorCode::NoConvexKSet, "no " + std::to_string(k) + "-subset in convex position");
    }
    support.emplace(std::vector<Label>(largest.members.begin(), largest.members.begin() + k), 0);
  }

  Best best;
  std::vector<int> sizes(k);
  for (const auto& [members, count] : support) {
    std::vector<Label> cycle = convex_cycle(cfg, members);
    kernel.spike_sizes(cycle, sizes);
    BigInt product = 1;
    for (int s : sizes) product *= s;
    offer(best, members, std::move(cycle), product, count);
  }
  Clustering out = finish(kernel, std::move(best), ClusteringStrategy::Sampled);
  out.candidates = support.size();
  out.convex_samples = convex_samples;
  return out;
}

}  // namespace

Clustering find_clustering(const PseudoConfiguration& cfg, int k, ClusteringStrategy strategy,
                           const ClusteringOptions& options) {
  if (k < 4 || k % 2 != 0) throw Error(ErrorCode::InvalidArgument, "k must be an even integer >= 4");
  if (cfg.size() < k) throw Error(ErrorCode::InvalidArgument, "configuration has fewer than k points");
  return strategy == ClusteringStrategy::Exhaustive ? exhaustive(cfg, k) : sampled(cfg, k, options);
}

}  // namespace ccs
