#include "ccs/spikes/spikes.hpp"

#include <algorithm>
#include <array>

#include "ccs/extraction/coloring.hpp"

namespace ccs {

namespace {

void check_base(const PseudoConfiguration& cfg, const ConvexCertificate& x) {
  if (x.hull_cycle.size() < 4) {
    throw Error(ErrorCode::InvalidArgument, "spikes need a convex set with at least 4 points", x.hull_cycle);
  }
  if (!is_valid_certificate(cfg, x)) {
    throw Error(ErrorCode::InvalidArgument, "X is not a valid convex certificate", x.hull_cycle);
  }
}

std::optional<int> spike_of_unchecked(const PseudoConfiguration& cfg, const ConvexCertificate& x, Label p) {
  const auto& m = x.members;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      for (std::size_t c = b + 1; c < m.size(); ++c)
        if (!convex_quadruple(cfg, m[a], m[b], m[c], p)) return std::nullopt;

  std::vector<Label> extended = m;
  extended.push_back(p);
  const ConvexCertificate hull = hull_cycle(cfg, extended);
  const auto& cycle = hull.hull_cycle;
  const std::size_t len = cycle.size();
  const auto at = static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), p) - cycle.begin());
  const Label pred = cycle[(at + len - 1) % len];
  const Label succ = cycle[(at + 1) % len];
  const int k = static_cast<int>(x.hull_cycle.size());
  for (int i = 0; i < k; ++i)
    if (x.hull_cycle[i] == pred && x.hull_cycle[(i + 1) % k] == succ) return i;
  throw Error(ErrorCode::HullCycleBroken, "extended hull does not replace a single edge", {p, pred, succ});
}

void check_in_spike(const SpikeDecomposition& dec, int i, std::initializer_list<Label> labels) {
  const auto& spike = dec.spike(i);
  for (Label l : labels)
    if (!std::binary_search(spike.begin(), spike.end(), l)) {
      throw Error(ErrorCode::InvalidArgument,
                  "label " + std::to_string(l) + " is not in spike " + std::to_string(i), {l});
    }
  for (auto it = labels.begin(); it != labels.end(); ++it)
    for (auto jt = labels.begin(); jt != it; ++jt)
      if (*it == *jt) throw Error(ErrorCode::RepeatedLabel, "label repeated", {*it});
}

bool cross(const PseudoConfiguration& cfg, Label a, Label b, Label c, Label d) {
  return cfg.orient(a, b, c) != cfg.orient(a, b, d) && cfg.orient(c, d, a) != cfg.orient(c, d, b);
}

bool below(const PseudoConfiguration& cfg, const SpikeDecomposition& dec, int i, Label p, Label q) {
  return inside_triangle(cfg, p, dec.left_anchor(i), q, dec.right_anchor(i));
}

bool before(const PseudoConfiguration& cfg, const SpikeDecomposition& dec, int i, Label p, Label q) {
  return cross(cfg, dec.left_anchor(i), q, dec.right_anchor(i), p);
}

SpikeRelation relation_unchecked(const PseudoConfiguration& cfg, const SpikeDecomposition& dec, int i, Label p,
                                 Label q) {
  const std::array<bool, 4> holds{below(cfg, dec, i, p, q), below(cfg, dec, i, q, p),
                                  before(cfg, dec, i, p, q), before(cfg, dec, i, q, p)};
  const auto count = std::count(holds.begin(), holds.end(), true);
  if (count == 0) throw Error(ErrorCode::NoRelation, "no spike relation holds", {p, q});
  if (count > 1) throw Error(ErrorCode::AmbiguousRelation, "several spike relations hold", {p, q});
  return static_cast<SpikeRelation>(std::find(holds.begin(), holds.end(), true) - holds.begin());
}

bool convex_with(const PseudoConfiguration& cfg, std::initializer_list<Label> labels) {
  const std::vector<Label> v(labels);
  return is_convex_position(cfg, v);
}

VerticalClass vertical_class(const PseudoConfiguration& cfg, const SpikeDecomposition& dec, int i, Label p,
                             Label q, Label r) {
  const bool left = convex_with(cfg, {p, q, r, dec.left_anchor(i)});
  const bool right = convex_with(cfg, {p, q, r, dec.right_anchor(i)});
  if (left == right) throw Error(ErrorCode::BothOrNeither, "vertical triple is not exactly one of left/right", {p, q, r});
  return left ? VerticalClass::Left : VerticalClass::Right;
}

HorizontalClass horizontal_class(const PseudoConfiguration& cfg, const SpikeDecomposition& dec, int i, Label p,
                                 Label q, Label r) {
  return convex_with(cfg, {p, q, r, dec.left_anchor(i), dec.right_anchor(i)}) ? HorizontalClass::Inner
                                                                              : HorizontalClass::Outer;
}

// Longest chain of a strict partial order on positions 0..m-1 (labels are
// increasing with position). Among longest chains, the lexicographically
// smallest label sequence is returned.
template <class Less>
std::vector<int> longest_chain(int m, Less&& less) {
  std::vector<int> down(m, 0);  // longest chain starting at u
  std::vector<char> state(m, 0);
  auto visit = [&](auto&& self, int u) -> int {
    if (state[u] == 2) return down[u];
    if (state[u] == 1) throw Error(ErrorCode::InvalidArgument, "spike order has a cycle");
    state[u] = 1;
    int best = 0;
    for (int w = 0; w < m; ++w)
      if (w != u && less(u, w)) best = std::max(best, self(self, w));
    state[u] = 2;
    return down[u] = best + 1;
  };
  int length = 0;
  for (int u = 0; u < m; ++u) length = std::max(length, visit(visit, u));

  std::vector<int> chain;
  if (length == 0) return chain;
  int cur = static_cast<int>(std::find(down.begin(), down.end(), length) - down.begin());
  chain.push_back(cur);
  while (down[cur] > 1) {
    for (int w = 0; w < m; ++w)
      if (w != cur && less(cur, w) && down[w] == down[cur] - 1) {
        cur = w;
        break;
      }
    chain.push_back(cur);
  }
  return chain;
}

}  // namespace

std::string_view to_string(SpikeRelation r) {
  switch (r) {
    case SpikeRelation::VerticalBelow: return "p<v q";
    case SpikeRelation::VerticalAbove: return "q<v p";
    case SpikeRelation::HorizontalBefore: return "p<h q";
    case SpikeRelation::HorizontalAfter: return "q<h p";
  }
  return "?";
}

std::string_view to_string(VerticalClass c) { return c == VerticalClass::Left ? "LEFT" : "RIGHT"; }
std::string_view to_string(HorizontalClass c) { return c == HorizontalClass::Inner ? "INNER" : "OUTER"; }

std::optional<int> spike_of(const PseudoConfiguration& cfg, const ConvexCertificate& x, Label p) {
  check_base(cfg, x);
  if (p < 0 || p >= cfg.size()) throw Error(ErrorCode::InvalidArgument, "label out of range", {p});
  if (std::binary_search(x.members.begin(), x.members.end(), p)) {
    throw Error(ErrorCode::PInX, "point belongs to X", {p});
  }
  return spike_of_unchecked(cfg, x, p);
}

SpikeDecomposition decompose(const PseudoConfiguration& cfg, const ConvexCertificate& x) {
  check_base(cfg, x);
  SpikeDecomposition dec;
  dec.x = x;
  dec.assignment.assign(cfg.size(), std::nullopt);
  dec.spikes.assign(x.hull_cycle.size(), {});
  for (Label p = 0; p < cfg.size(); ++p) {
    if (std::binary_search(x.members.begin(), x.members.end(), p)) continue;
    if (auto i = spike_of_unchecked(cfg, x, p)) {
      dec.assignment[p] = *i;
      dec.spikes[*i].push_back(p);
    }
  }
  return dec;
}

bool precedes_vertically(const PseudoConfiguration& cfg, const SpikeDecomposition& dec, int i, Label p, Label q) {
  check_in_spike(dec, i, {p, q});
  return below(cfg, dec, i, p, q);
}

bool precedes_horizontally(const PseudoConfiguration& cfg, const SpikeDecomposition& dec, int i, Label p,
                           Label q) {
  check_in_spike(dec, i, {p, q});
  return before(cfg, dec, i, p, q);
}

SpikeRelation relation_in_spike(const PseudoConfiguration& cfg, const SpikeDecomposition& dec, int i, Label p,
                                Label q) {
  check_in_spike(dec, i, {p, q});
  return relation_unchecked(cfg, dec, i, p, q);
}

VerticalClass classify_vertical_triple(const PseudoConfiguration& cfg, const SpikeDecomposition& dec, int i,
                                       Label p, Label q, Label r) {
  check_in_spike(dec, i, {p, q, r});
  if (!below(cfg, dec, i, p, q) || !below(cfg, dec, i, q, r)) {
    throw Error(ErrorCode::InvalidArgument, "points do not form a vertical chain", {p, q, r});
  }
  return vertical_class(cfg, dec, i, p, q, r);
}

HorizontalClass classify_horizontal_triple(const PseudoConfiguration& cfg, const SpikeDecomposition& dec,
                                           int i, Label p, Label q, Label r) {
  check_in_spike(dec, i, {p, q, r});
  if (!before(cfg, dec, i, p, q) || !before(cfg, dec, i, q, r)) {
    throw Error(ErrorCode::InvalidArgument, "points do not form a horizontal chain", {p, q, r});
  }
  return horizontal_class(cfg, dec, i, p, q, r);
}

ChainStats chain_stats(const PseudoConfiguration& cfg, const SpikeDecomposition& dec, int i) {
  ChainStats st;
  st.spike = ((i % dec.k()) + dec.k()) % dec.k();
  const auto& pts = dec.spike(i);
  const int m = static_cast<int>(pts.size());
  st.size = m;
  if (m == 0) return st;

  std::vector<SpikeRelation> rel(static_cast<std::size_t>(m) * m, SpikeRelation::VerticalBelow);
  for (int u = 0; u < m; ++u)
    for (int w = u + 1; w < m; ++w) {
      const SpikeRelation r = relation_unchecked(cfg, dec, i, pts[u], pts[w]);
      rel[u * m + w] = r;
      rel[w * m + u] = r == SpikeRelation::VerticalBelow     ? SpikeRelation::VerticalAbove
                       : r == SpikeRelation::VerticalAbove   ? SpikeRelation::VerticalBelow
                       : r == SpikeRelation::HorizontalBefore ? SpikeRelation::HorizontalAfter
                                                             : SpikeRelation::HorizontalBefore;
    }
  auto labels_of = [&](const std::vector<int>& positions) {
    std::vector<Label> out;
    for (int u : positions) out.push_back(pts[u]);
    return out;
  };

  st.vertical_chain = labels_of(longest_chain(m, [&](int u, int w) { return rel[u * m + w] == SpikeRelation::VerticalBelow; }));
  st.horizontal_chain = labels_of(longest_chain(m, [&](int u, int w) { return rel[u * m + w] == SpikeRelation::HorizontalBefore; }));
  st.v = static_cast<int>(st.vertical_chain.size());
  st.h = static_cast<int>(st.horizontal_chain.size());

  const auto& vc = st.vertical_chain;
  const TransitiveColoring vertical(vc, [&](int a, int b, int c) {
    return vertical_class(cfg, dec, i, vc[a], vc[b], vc[c]) == VerticalClass::Left ? ColorClass::T1 : ColorClass::T2;
  });
  st.left_chain = longest_monochromatic(vertical, ColorClass::T1).labels;
  st.right_chain = longest_monochromatic(vertical, ColorClass::T2).labels;

  const auto& hc = st.horizontal_chain;
  const TransitiveColoring horizontal(hc, [&](int a, int b, int c) {
    return horizontal_class(cfg, dec, i, hc[a], hc[b], hc[c]) == HorizontalClass::Inner ? ColorClass::T1
                                                                                          : ColorClass::T2;
  });
  st.inner_chain = longest_monochromatic(horizontal, ColorClass::T1).labels;
  st.outer_chain = longest_monochromatic(horizontal, ColorClass::T2).labels;

  st.a = static_cast<int>(st.left_chain.size());
  st.b = static_cast<int>(st.right_chain.size());
  st.c = static_cast<int>(st.inner_chain.size());
  st.d = static_cast<int>(st.outer_chain.size());
  return st;
}

}  // namespace ccs
