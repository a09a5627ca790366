#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "ccs/core/pseudo_configuration.hpp"

namespace ccs {

enum class GeneratorKind { RandomRealizable, GridRealizable, Mutated };

std::string_view to_string(GeneratorKind kind);
/// Accepts RANDOM_REALIZABLE / GRID_REALIZABLE / MUTATED, case-insensitive,
/// and the short forms random / grid / mutated.
std::optional<GeneratorKind> parse_generator_kind(std::string_view text);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::RandomRealizable;
  int n = 3;
  std::uint64_t seed = 1;
  int flips = 0;  // Mutated only
};

inline constexpr int kGeneratorAttempts = 100000;

/// Output depends only on the GeneratorSpec.
///  - RandomRealizable: integer points in [0, 4n^3]^2, redrawing any point that
///    duplicates or is collinear with earlier ones.
///  - GridRealizable: points (x, (x^2 + a x + b) mod p) for distinct x below the
///    smallest prime p >= 2n. A parabola mod p has no three collinear points,
///    so there is nothing to reject.
///  - Mutated: a RandomRealizable system with `flips` random triple signs
///    flipped, redrawn until the result passes the axioms. Coordinates are
///    dropped.
/// Throws NTooSmall for n < 3 and ExhaustedAttempts when the budget runs out.
PseudoConfiguration generate(const GeneratorSpec& spec);

/// generate() for the two realizable kinds; throws InvalidArgument for Mutated.
PseudoConfiguration gen_realizable(const GeneratorSpec& spec);

/// Square (0,0), (L,0), (L,L), (0,L) with L = 4096 as labels 0..3, plus
/// n - 4 integer points drawn uniformly from the four spikes of the square
/// (the open slabs beyond each edge, depth up to L). Every extra point lands
/// in some spike of the square.
PseudoConfiguration gen_spiked_square(int n, std::uint64_t seed);

using Triple = std::array<Label, 3>;

struct Mutation {
  PseudoConfiguration candidate;
  ValidationReport report;
};

/// Flips the sign of each listed unordered triple (a triple listed twice
/// flips back). The candidate keeps no coordinates. Throws InvalidArgument /
/// RepeatedLabel on malformed triples.
Mutation mutate(const PseudoConfiguration& cfg, std::span<const Triple> flips);

}  // namespace ccs
