#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccs/core/error.hpp"
#include "ccs/core/rational.hpp"

namespace ccs {

using Label = int;

/// Orientation of an ordered triple. Configurations are uniform, so there is
/// no zero sign.
enum class Sign : std::int8_t { CW = -1, CCW = 1 };

constexpr Sign operator-(Sign s) noexcept { return s == Sign::CCW ? Sign::CW : Sign::CCW; }
constexpr char to_char(Sign s) noexcept { return s == Sign::CCW ? '+' : '-'; }

/// C(n, 3).
std::size_t triple_count(int n) noexcept;

/// Position of {i < j < k} in lex order of all triples of 0..n-1.
std::size_t triple_index(int n, Label i, Label j, Label k) noexcept;

/// Exact sign of det(b - a, c - a): -1, 0 or +1.
int orientation_sign(const Point& a, const Point& b, const Point& c);

/// A CC-system: n labeled points with a sign on every triple. Signs are stored
/// once per unordered triple {i < j < k} in lex order; the sign of an ordered
/// triple follows from the parity of the sorting permutation.
///
/// Instances are immutable and share their storage, so copies are cheap and
/// concurrent reads are safe.
class PseudoConfiguration {
 public:
  /// Chirotope of a point set in general position. Throws DuplicatePoint or
  /// CollinearTriple.
  static PseudoConfiguration from_points(std::vector<Point> points);

  /// Checked constructor: throws AxiomViolation unless validate_axioms passes.
  static PseudoConfiguration from_signs(int n, std::vector<Sign> signs);
  static PseudoConfiguration from_sign_string(int n, std::string_view signs);

  /// Shape-checked only. Used for mutation candidates and `--unchecked` input.
  static PseudoConfiguration unchecked(int n, std::vector<Sign> signs,
                                       std::optional<std::vector<Point>> coords = std::nullopt);

  int size() const noexcept { return data_->n; }
  std::span<const Sign> signs() const noexcept { return data_->signs; }
  std::string sign_string() const;
  const std::optional<std::vector<Point>>& coords() const noexcept { return data_->coords; }

  /// Throws RepeatedLabel or InvalidArgument on bad labels.
  Sign orientation(Label p, Label q, Label r) const;

  /// Hot path: labels must be distinct and in range.
  Sign orient(Label p, Label q, Label r) const noexcept {
    const Data& d = *data_;
    if (!d.cube.empty()) return static_cast<Sign>(d.cube[(static_cast<std::size_t>(p) * d.n + q) * d.n + r]);
    return orient_slow(p, q, r);
  }
  bool ccw(Label p, Label q, Label r) const noexcept { return orient(p, q, r) == Sign::CCW; }

  /// Configuration whose label i is this configuration's label perm[i].
  PseudoConfiguration relabeled(std::span<const Label> perm) const;
  /// Every sign reversed (reflection); coordinates are mirrored in x.
  PseudoConfiguration mirrored() const;
  /// Sub-configuration on `labels`, relabeled 0..m-1 in the given order.
  PseudoConfiguration restricted(std::span<const Label> labels) const;

  friend bool operator==(const PseudoConfiguration& a, const PseudoConfiguration& b);

 private:
  struct Data {
    int n = 0;
    std::vector<Sign> signs;
    std::vector<std::int8_t> cube;  // dense n^3 table for small n
    std::optional<std::vector<Point>> coords;
  };

  explicit PseudoConfiguration(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static std::shared_ptr<const Data> make_data(int n, std::vector<Sign> signs,
                                               std::optional<std::vector<Point>> coords);
  Sign orient_slow(Label p, Label q, Label r) const noexcept;

  std::shared_ptr<const Data> data_;
};

/// Throws RepeatedLabel / InvalidArgument unless all labels are distinct and in range.
void check_distinct_labels(const PseudoConfiguration& cfg, std::initializer_list<Label> labels);

struct AxiomInstance {
  std::string axiom;           // "interiority" or "transitivity"
  std::vector<Label> witness;  // (p,q,r,t) or (t,s,p,q,r)
};

struct ValidationReport {
  std::vector<AxiomInstance> violations;
  bool truncated = false;

  bool pass() const noexcept { return violations.empty(); }
  std::string_view status() const noexcept { return pass() ? "PASS" : "FAIL"; }
};

inline constexpr std::size_t kDefaultViolationCap = 64;

/// Checks interiority and transitivity on every instance; alternation holds by
/// construction. Never throws.
ValidationReport validate_axioms(const PseudoConfiguration& cfg,
                                 std::size_t cap = kDefaultViolationCap);

/// Early-exit form of validate_axioms. When `involving` is a label, only axiom
/// instances that mention it are checked.
bool satisfies_axioms(const PseudoConfiguration& cfg, std::optional<Label> involving = std::nullopt);

class AxiomViolation : public Error {
 public:
  explicit AxiomViolation(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace ccs
