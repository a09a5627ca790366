#include "ccs/convexity/convexity.hpp"

#include <algorithm>

namespace ccs {

namespace {

void check_subset(const PseudoConfiguration& cfg, std::span<const Label> q, std::size_t min_size) {
  if (q.size() < min_size) {
    throw Error(ErrorCode::SubsetTooSmall,
                "subset has " + std::to_string(q.size()) + " labels, need at least " +
                    std::to_string(min_size));
  }
  std::vector<bool> seen(cfg.size(), false);
  for (Label l : q) {
    if (l < 0 || l >= cfg.size()) {
      throw Error(ErrorCode::InvalidArgument, "label " + std::to_string(l) + " out of range", {l});
    }
    if (seen[l]) throw Error(ErrorCode::RepeatedLabel, "label " + std::to_string(l) + " repeated", {l});
    seen[l] = true;
  }
}

}  // namespace

bool in_triangle(const PseudoConfiguration& cfg, Label p, Label a, Label b, Label c) {
  check_distinct_labels(cfg, {p, a, b, c});
  return inside_triangle(cfg, p, a, b, c);
}

bool segments_cross(const PseudoConfiguration& cfg, Label a, Label b, Label c, Label d) {
  check_distinct_labels(cfg, {a, b, c, d});
  return cfg.orient(a, b, c) != cfg.orient(a, b, d) && cfg.orient(c, d, a) != cfg.orient(c, d, b);
}

bool is_convex_position(const PseudoConfiguration& cfg, std::span<const Label> q) {
  check_subset(cfg, q, 3);
  const std::size_t m = q.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l)
          if (!convex_quadruple(cfg, q[i], q[j], q[k], q[l])) return false;
  return true;
}

namespace {

bool is_extreme(const PseudoConfiguration& cfg, Label p, std::span<const Label> q) {
  const std::size_t m = q.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (q[i] == p) continue;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (q[j] == p) continue;
      for (std::size_t k = j + 1; k < m; ++k) {
        if (q[k] == p) continue;
        if (inside_triangle(cfg, p, q[i], q[j], q[k])) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Label> hull_extremes(const PseudoConfiguration& cfg, std::span<const Label> q) {
  check_subset(cfg, q, 3);
  std::vector<Label> out;
  for (Label p : q)
    if (is_extreme(cfg, p, q)) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

ConvexCertificate hull_cycle(const PseudoConfiguration& cfg, std::span<const Label> q) {
  ConvexCertificate cert;
  cert.members = hull_extremes(cfg, q);
  const auto& ext = cert.members;
  const std::size_t h = ext.size();
  if (h < 3) throw Error(ErrorCode::HullCycleBroken, "fewer than three extreme points", ext);

  // Successor of cur: the unique extreme y with every other extreme to the
  // left of (cur, y).
  auto successor = [&](Label cur) {
    Label found = -1;
    for (Label y : ext) {
      if (y == cur) continue;
      bool all_left = true;
      for (Label z : ext) {
        if (z == cur || z == y) continue;
        if (!cfg.ccw(cur, y, z)) {
          all_left = false;
          break;
        }
      }
      if (all_left) {
        if (found != -1) throw Error(ErrorCode::HullCycleBroken, "ambiguous hull successor", {cur, found, y});
        found = y;
      }
    }
    if (found == -1) throw Error(ErrorCode::HullCycleBroken, "no hull successor", {cur});
    return found;
  };

  std::vector<bool> visited(cfg.size(), false);
  Label cur = ext.front();
  for (std::size_t step = 0; step < h; ++step) {
    if (visited[cur]) throw Error(ErrorCode::HullCycleBroken, "hull cycle closes early", {cur});
    visited[cur] = true;
    cert.hull_cycle.push_back(cur);
    cur = successor(cur);
  }
  if (cur != ext.front()) throw Error(ErrorCode::HullCycleBroken, "hull cycle does not close", {cur});
  return cert;
}

bool in_hull(const PseudoConfiguration& cfg, Label p, std::span<const Label> q) {
  if (std::find(q.begin(), q.end(), p) != q.end()) {
    throw Error(ErrorCode::InvalidArgument, "point belongs to the subset", {p});
  }
  const auto ext = hull_extremes(cfg, q);
  for (std::size_t i = 0; i < ext.size(); ++i)
    for (std::size_t j = i + 1; j < ext.size(); ++j)
      for (std::size_t k = j + 1; k < ext.size(); ++k)
        if (inside_triangle(cfg, p, ext[i], ext[j], ext[k])) return true;
  return false;
}

bool is_valid_certificate(const PseudoConfiguration& cfg, const ConvexCertificate& cert) {
  const std::size_t m = cert.members.size();
  if (m < 3 || cert.hull_cycle.size() != m) return false;
  if (!std::is_sorted(cert.members.begin(), cert.members.end())) return false;
  auto sorted_cycle = cert.hull_cycle;
  std::sort(sorted_cycle.begin(), sorted_cycle.end());
  if (sorted_cycle != cert.members) return false;
  if (std::adjacent_find(sorted_cycle.begin(), sorted_cycle.end()) != sorted_cycle.end()) return false;
  for (Label l : cert.members)
    if (l < 0 || l >= cfg.size()) return false;
  if (!is_convex_position(cfg, cert.members)) return false;
  for (std::size_t i = 0; i < m; ++i) {
    const Label a = cert.hull_cycle[i];
    const Label b = cert.hull_cycle[(i + 1) % m];
    for (Label z : cert.members)
      if (z != a && z != b && !cfg.ccw(a, b, z)) return false;
  }
  return true;
}

}  // namespace ccs
