#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ccs/core/pseudo_configuration.hpp"

namespace ccs {

enum class Realizability { RealizableWitness, Unknown };

std::string_view to_string(Realizability r);

struct RealizabilityHint {
  Realizability status = Realizability::Unknown;
  /// Points whose chirotope equals the input exactly (same labels).
  std::optional<std::vector<Point>> witness;
  std::uint64_t attempts = 0;
  std::uint64_t budget = 0;
};

inline constexpr int kMaxRealizabilitySize = 6;
inline constexpr std::uint64_t kDefaultRealizabilityBudget = 200000;

/// Looks for a point set with the same chirotope. Configurations that carry
/// coordinates are their own witness. Otherwise random point sets on small
/// grids are drawn and compared up to relabeling (and reflection); a match is
/// relabeled into a witness. UNKNOWN means the budget ran out; it is not a
/// proof of anything. Throws NTooLarge for n > 6.
RealizabilityHint realizability_hint(const PseudoConfiguration& cfg,
                                     std::uint64_t budget = kDefaultRealizabilityBudget,
                                     std::uint64_t seed = 1);

}  // namespace ccs
