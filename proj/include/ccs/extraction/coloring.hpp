#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ccs/core/pseudo_configuration.hpp"

namespace ccs {

enum class ColorClass : std::uint8_t { T1 = 1, T2 = 2 };

/// A 2-coloring of the increasing triples of a linearly ordered sequence such
/// that for every s1 < s2 < s3 < s4 and each class T:
///   (s1,s2,s3), (s2,s3,s4) in T  =>  (s1,s2,s4), (s1,s3,s4) in T.
/// The constructor checks this on every 4-chain and throws InvalidColoring.
class TransitiveColoring {
 public:
  using ColorFn = std::function<ColorClass(int, int, int)>;

  /// `color(i, j, l)` receives positions i < j < l into `sequence`.
  TransitiveColoring(std::vector<Label> sequence, const ColorFn& color);

  std::size_t size() const noexcept { return sequence_.size(); }
  const std::vector<Label>& sequence() const noexcept { return sequence_; }
  ColorClass color(int i, int j, int l) const noexcept {
    return static_cast<ColorClass>(table_[(static_cast<std::size_t>(i) * size() + j) * size() + l]);
  }

 private:
  std::vector<Label> sequence_;
  std::vector<std::uint8_t> table_;
};

struct MonochromaticChain {
  ColorClass color = ColorClass::T1;
  std::vector<int> positions;  // increasing positions into the sequence
  std::vector<Label> labels;
};

/// Every triple of `positions` (increasing) has class `color`.
bool is_monochromatic(const TransitiveColoring& coloring, std::span<const int> positions, ColorClass color);

/// Longest subsequence all of whose triples have class `color`. For a
/// transitive coloring it suffices that consecutive triples have that class,
/// so a dynamic program over ordered pairs is exact. Ties go to the chain
/// ending earliest. Sequences of length <= 2 are monochromatic in both classes.
MonochromaticChain longest_monochromatic(const TransitiveColoring& coloring, ColorClass color);

struct CupCapResult {
  ColorClass color = ColorClass::T1;
  std::vector<Label> subset;
  /// |S| > C(k+l-4, k-2), so the size target was guaranteed.
  bool guaranteed = false;
  /// subset has >= k elements in T1 or >= l elements in T2.
  bool meets_target = false;
};

/// Returns a T1-subset of size >= k, else a T2-subset of size >= l; below the
/// binomial threshold this may fail, and the longer of the two longest
/// monochromatic subsets is returned (T1 on ties). Throws InvalidArgument
/// unless k, l >= 3.
CupCapResult cupcap_extract(const TransitiveColoring& coloring, int k, int l);

}  // namespace ccs
