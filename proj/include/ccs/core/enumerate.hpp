#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ccs/core/pseudo_configuration.hpp"

namespace ccs {

inline constexpr int kMaxEnumerationSize = 6;

/// Lexicographically smallest sign string over all n! relabelings, with '+'
/// ordered before '-'. With `identify_mirror`, reflections are identified too.
/// Only meant for small n (cost is n! * C(n,3)).
std::string canonical_form(const PseudoConfiguration& cfg, bool identify_mirror = false);

/// Permutation `perm` such that cfg.relabeled(perm) has the canonical sign string.
std::vector<Label> canonical_relabeling(const PseudoConfiguration& cfg);

struct EnumerateOptions {
  /// Yield one representative per relabeling class (the canonical system).
  bool canonical = false;
  /// With `canonical`, identify mirror images as well.
  bool identify_mirror = false;
};

/// Every CC-system on n labeled points (3 <= n <= 6), in lex order of sign
/// strings. Built by extending each valid (n-1)-point system with every sign
/// choice for the triples through the new point; restrictions of valid systems
/// are valid, so this reaches all of them. Throws NTooLarge / NTooSmall.
std::vector<PseudoConfiguration> enumerate_systems(int n, EnumerateOptions options = {});

/// Streaming form: calls `sink` for each system in the same order.
void for_each_system(int n, const std::function<void(const PseudoConfiguration&)>& sink,
                     EnumerateOptions options = {});

}  // namespace ccs
