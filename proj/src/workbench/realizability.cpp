#include "ccs/workbench/realizability.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "ccs/convexity/convexity.hpp"
#include "ccs/core/enumerate.hpp"
#include "ccs/core/random.hpp"

namespace ccs {

std::string_view to_string(Realizability r) {
  return r == Realizability::RealizableWitness ? "REALIZABLE_WITNESS" : "UNKNOWN";
}

namespace {

// Relabeling- and reflection-invariant: sorted counts of triangles containing
// each point.
std::vector<int> depth_profile(const PseudoConfiguration& cfg) {
  const int n = cfg.size();
  std::vector<int> depth(n, 0);
  for (Label a = 0; a < n; ++a)
    for (Label b = a + 1; b < n; ++b)
      for (Label c = b + 1; c < n; ++c)
        for (Label p = 0; p < n; ++p)
          if (p != a && p != b && p != c && inside_triangle(cfg, p, a, b, c)) ++depth[p];
  std::sort(depth.begin(), depth.end());
  return depth;
}

std::optional<std::vector<Point>> match(const PseudoConfiguration& target, const std::vector<Label>& target_perm,
                                        const PseudoConfiguration& sample) {
  const std::vector<Label> sample_perm = canonical_relabeling(sample);
  if (sample.relabeled(sample_perm).sign_string() != target.relabeled(target_perm).sign_string()) return std::nullopt;
  // Canonical label i is target label target_perm[i] and sample label sample_perm[i].
  std::vector<Point> witness(target.size());
  for (int i = 0; i < target.size(); ++i) witness[target_perm[i]] = (*sample.coords())[sample_perm[i]];
  return witness;
}

}  // namespace

RealizabilityHint realizability_hint(const PseudoConfiguration& cfg, std::uint64_t budget, std::uint64_t seed) {
  const int n = cfg.size();
  if (n > kMaxRealizabilitySize) throw Error(ErrorCode::NTooLarge, "realizability hint is limited to n <= 6");
  RealizabilityHint hint;
  hint.budget = budget;
  if (cfg.coords()) {
    hint.status = Realizability::RealizableWitness;
    hint.witness = cfg.coords();
    return hint;
  }
  const std::vector<Label> target_perm = canonical_relabeling(cfg);
  const std::vector<int> profile = depth_profile(cfg);
  std::unordered_set<std::string> rejected;
  Rng rng(seed);
  for (hint.attempts = 1; hint.attempts <= budget; ++hint.attempts) {
    // Grid side cycles through 8, 16, ..., 1024.
    const std::int64_t side = std::int64_t{8} << (hint.attempts % 8);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back({Rational(uniform_int(rng, 0, side)), Rational(uniform_int(rng, 0, side))});
    std::optional<PseudoConfiguration> sample;
    try {
      sample.emplace(PseudoConfiguration::from_points(std::move(pts)));
    } catch (const Error&) {
      continue;
    }
    const std::string key = sample->sign_string();
    if (rejected.count(key) || depth_profile(*sample) != profile) {
      rejected.insert(key);
      continue;
    }
    for (const PseudoConfiguration& candidate : {*sample, sample->mirrored()}) {
      if (auto witness = match(cfg, target_perm, candidate)) {
        hint.status = Realizability::RealizableWitness;
        hint.witness = std::move(witness);
        return hint;
      }
    }
    rejected.insert(key);
  }
  hint.attempts = budget;
  return hint;
}

}  // namespace ccs
