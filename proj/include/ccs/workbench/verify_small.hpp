#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccs/spikes/spikes.hpp"

namespace ccs {

enum class SmallTask { B4, Caratheodory, Trichotomy, Joins };

std::string_view to_string(SmallTask task);
std::optional<SmallTask> parse_small_task(std::string_view text);

struct VerifyReport {
  SmallTask task = SmallTask::B4;
  std::uint64_t trials = 0;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> failure_samples;  // first few failures, readable

  bool pass() const noexcept { return failures == 0; }
};

/// A configuration with a convex 4-set X and its decomposition.
struct Scene {
  PseudoConfiguration cfg;
  SpikeDecomposition dec;
};

/// Alternates between a spiked square (X = the square) and a uniformly random
/// configuration with X a random convex 4-subset. n is drawn from [8, max_n].
Scene random_scene(std::uint64_t seed, int max_n = 40);

/// Small exhaustive or randomized checks:
///  - b4: every 5-point CC-system has a convex 4-subset, "++-+" has none.
///  - caratheodory: on random configurations of up to 10 points, the
///    4-point test and the extreme-point test agree on every subset of size
///    3..7.
///  - trichotomy: every pair of points in a spike has exactly one relation.
///  - joins: right-left joins, alternating inner unions and outer chains are
///    in convex position.
/// `trials` is ignored by b4.
VerifyReport verify_small(SmallTask task, std::uint64_t trials, std::uint64_t seed);

}  // namespace ccs
