#include "ccs/spikes/spike_kernel.hpp"

#include <algorithm>
#include <bit>

namespace ccs {

SpikeKernel::SpikeKernel(const PseudoConfiguration& cfg, bool allow_bitset) : cfg_(cfg) {
  const int n = cfg.size();
  if (!allow_bitset || n > kMaxBitsetPoints) return;
  blocked_.assign(triple_count(n), 0);
  for (Label a = 0; a < n; ++a)
    for (Label b = a + 1; b < n; ++b)
      for (Label c = b + 1; c < n; ++c) {
        std::uint64_t mask = 0;
        for (Label p = 0; p < n; ++p)
          if (p != a && p != b && p != c && !convex_quadruple(cfg, a, b, c, p)) mask |= std::uint64_t{1} << p;
        blocked_[triple_index(n, a, b, c)] = mask;
      }
  clockwise_.assign(static_cast<std::size_t>(n) * n, 0);
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b) {
      if (a == b) continue;
      std::uint64_t mask = 0;
      for (Label r = 0; r < n; ++r)
        if (r != a && r != b && !cfg.ccw(a, b, r)) mask |= std::uint64_t{1} << r;
      clockwise_[static_cast<std::size_t>(a) * n + b] = mask;
    }
}

std::uint64_t SpikeKernel::blocked(Label a, Label b, Label c) const {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return blocked_[triple_index(cfg_.size(), a, b, c)];
}

std::uint64_t SpikeKernel::extension_mask(std::span<const Label> cycle) const {
  const int n = cfg_.size();
  std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (Label x : cycle) mask &= ~(std::uint64_t{1} << x);
  const std::size_t k = cycle.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l) mask &= ~blocked(cycle[i], cycle[j], cycle[l]);
  return mask;
}

std::vector<std::vector<Label>> SpikeKernel::spikes(std::span<const Label> cycle) const {
  const int n = cfg_.size();
  const std::size_t k = cycle.size();
  std::vector<std::vector<Label>> out(k);
  if (uses_bitset()) {
    const std::uint64_t ext = extension_mask(cycle);
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t m = ext & clockwise_[static_cast<std::size_t>(cycle[i]) * n + cycle[(i + 1) % k]];
      while (m) {
        out[i].push_back(std::countr_zero(m));
        m &= m - 1;
      }
    }
    return out;
  }
  std::vector<char> in_x(n, 0);
  for (Label x : cycle) in_x[x] = 1;
  for (Label p = 0; p < n; ++p) {
    if (in_x[p]) continue;
    bool convex = true;
    for (std::size_t i = 0; i < k && convex; ++i)
      for (std::size_t j = i + 1; j < k && convex; ++j)
        for (std::size_t l = j + 1; l < k && convex; ++l)
          convex = convex_quadruple(cfg_, cycle[i], cycle[j], cycle[l], p);
    if (!convex) continue;
    for (std::size_t i = 0; i < k; ++i)
      if (!cfg_.ccw(cycle[i], cycle[(i + 1) % k], p)) {
        out[i].push_back(p);
        break;
      }
  }
  return out;
}

void SpikeKernel::spike_sizes(std::span<const Label> cycle, std::span<int> sizes) const {
  const std::size_t k = cycle.size();
  if (uses_bitset()) {
    const int n = cfg_.size();
    const std::uint64_t ext = extension_mask(cycle);
    for (std::size_t i = 0; i < k; ++i)
      sizes[i] = std::popcount(ext & clockwise_[static_cast<std::size_t>(cycle[i]) * n + cycle[(i + 1) % k]]);
    return;
  }
  const auto lists = spikes(cycle);
  for (std::size_t i = 0; i < k; ++i) sizes[i] = static_cast<int>(lists[i].size());
}

SpikeDecomposition SpikeKernel::decompose(const ConvexCertificate& x) const {
  if (x.hull_cycle.size() < 4 || !is_valid_certificate(cfg_, x)) {
    throw Error(ErrorCode::InvalidArgument, "X is not a valid convex certificate with k >= 4", x.hull_cycle);
  }
  SpikeDecomposition dec;
  dec.x = x;
  dec.spikes = spikes(x.hull_cycle);
  dec.assignment.assign(cfg_.size(), std::nullopt);
  for (std::size_t i = 0; i < dec.spikes.size(); ++i)
    for (Label p : dec.spikes[i]) dec.assignment[p] = static_cast<int>(i);
  return dec;
}

}  // namespace ccs
