#include <doctest.h>

#include <random>

#include "ccs/core/bigint.hpp"
#include "ccs/extraction/coloring.hpp"
#include "ccs/spikes/spike_kernel.hpp"
#include "ccs/workbench/verify_small.hpp"
#include "fixtures.hpp"

using namespace ccs;
using fixtures::from_ipoints;
using oracle::IPoint;

namespace {

const std::vector<IPoint> kSquare{{0, 0}, {4, 0}, {4, 4}, {0, 4}};

std::vector<IPoint> square_plus(std::vector<IPoint> extra) {
  std::vector<IPoint> pts = kSquare;
  pts.insert(pts.end(), extra.begin(), extra.end());
  return pts;
}

ConvexCertificate square_x(const PseudoConfiguration& cfg) { return hull_cycle(cfg, fixtures::iota(4)); }

// Integer points from the scene's coordinates (all generators here use integers).
std::vector<IPoint> ipoints(const PseudoConfiguration& cfg) {
  std::vector<IPoint> out;
  for (const Point& p : *cfg.coords()) out.push_back({p.x.num(), p.y.num()});
  return out;
}

// Random configuration with a convex X of size k taken from its largest
// convex subset, so several spikes are populated.
Scene polygon_scene(std::mt19937_64& rng, int n, int k) {
  for (;;) {
    std::vector<IPoint> pts;
    // k points near a circle of radius 1000, then the rest scattered wider.
    for (int i = 0; i < k; ++i) {
      const double a = 2 * 3.14159265358979 * i / k;
      pts.push_back({static_cast<long long>(1000 * std::cos(a)) + static_cast<long long>(rng() % 7),
                     static_cast<long long>(1000 * std::sin(a)) + static_cast<long long>(rng() % 7)});
    }
    std::uniform_int_distribution<long long> c(-1600, 1600);
    while (static_cast<int>(pts.size()) < n) pts.push_back({c(rng), c(rng)});
    if (!oracle::general_position(pts)) continue;
    const auto cfg = from_ipoints(pts);
    const auto x = hull_cycle(cfg, fixtures::iota(k));
    if (x.size() != static_cast<std::size_t>(k)) continue;
    return {cfg, decompose(cfg, x)};
  }
}

}  // namespace

TEST_CASE("spike_of examples on the square") {
  // (2,2) is on a diagonal of the square, so (2,1) plays the interior point.
  const auto pts = square_plus({{2, -1}, {2, 1}, {5, -5}});
  const auto cfg = from_ipoints(pts);
  const auto x = square_x(cfg);
  REQUIRE(x.hull_cycle == std::vector<Label>{0, 1, 2, 3});
  CHECK(spike_of(cfg, x, 4) == std::optional<int>(0));
  CHECK(spike_of(cfg, x, 5) == std::nullopt);
  CHECK(spike_of(cfg, x, 6) == std::nullopt);
  CHECK(oracle::spike_by_lines(pts, x.hull_cycle, 6) == -1);
  // (4,0) falls inside the hull of X u {(5,-5)}.
  CHECK_FALSE(oracle::convex_position(pts, {0, 1, 2, 3, 6}));
  try {
    spike_of(cfg, x, 2);
    FAIL("expected PInX");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PInX);
  }
}

TEST_CASE("spike_of rejects small or invalid X") {
  const auto cfg = from_ipoints(square_plus({{2, -1}}));
  CHECK_THROWS_AS(spike_of(cfg, hull_cycle(cfg, std::vector<Label>{0, 1, 2}), 4), Error);
  CHECK_THROWS_AS(spike_of(cfg, ConvexCertificate{{0, 1, 2, 3}, {0, 2, 1, 3}}, 4), Error);
}

TEST_CASE("decompose examples") {
  const auto cfg = from_ipoints(square_plus({{2, -1}, {2, -2}, {-1, 2}}));
  const auto dec = decompose(cfg, square_x(cfg));
  CHECK(dec.spike(0) == std::vector<Label>{4, 5});
  CHECK(dec.spike(1).empty());
  CHECK(dec.spike(2).empty());
  CHECK(dec.spike(3) == std::vector<Label>{6});
  CHECK(dec.assignment[4] == std::optional<int>(0));
  CHECK(dec.assignment[0] == std::nullopt);

  const auto bare = from_ipoints(kSquare);
  const auto empty = decompose(bare, square_x(bare));
  for (int i = 0; i < 4; ++i) CHECK(empty.spike(i).empty());
}

TEST_CASE("decompose matches the geometric spike regions") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 4 + 2 * (trial % 3);
    const Scene s = polygon_scene(rng, 12 + trial % 20, k);
    const auto pts = ipoints(s.cfg);
    for (Label p = 0; p < s.cfg.size(); ++p) {
      if (std::count(s.dec.x.members.begin(), s.dec.x.members.end(), p)) continue;
      const int expected = oracle::spike_by_lines(pts, s.dec.x.hull_cycle, p);
      CHECK(s.dec.assignment[p].value_or(-1) == expected);
      if (s.dec.assignment[p]) {
        std::vector<int> xp = s.dec.x.members;
        xp.push_back(p);
        CHECK(oracle::convex_position(pts, xp));
      }
    }
  }
}

TEST_CASE("spike kernel agrees with decompose") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Scene s = random_scene(seed, 60);
    for (bool bitset : {true, false}) {
      const SpikeKernel kernel(s.cfg, bitset);
      CHECK(kernel.uses_bitset() == (bitset && s.cfg.size() <= 64));
      const auto fast = kernel.decompose(s.dec.x);
      CHECK(fast.spikes == s.dec.spikes);
      CHECK(fast.assignment == s.dec.assignment);
      std::vector<int> sizes(s.dec.k());
      kernel.spike_sizes(s.dec.x.hull_cycle, sizes);
      for (int i = 0; i < s.dec.k(); ++i) CHECK(sizes[i] == static_cast<int>(s.dec.spike(i).size()));
    }
  }
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const Scene s = polygon_scene(rng, 80, 6);
    const auto fast = SpikeKernel(s.cfg).decompose(s.dec.x);
    CHECK(fast.spikes == s.dec.spikes);
  }
}

TEST_CASE("relation_in_spike examples") {
  // Bottom spike: left anchor (0,4), right anchor (4,4).
  const auto vert = from_ipoints(square_plus({{2, -1}, {2, -2}}));
  const auto dv = decompose(vert, square_x(vert));
  CHECK(dv.left_anchor(0) == 3);
  CHECK(dv.right_anchor(0) == 2);
  CHECK(relation_in_spike(vert, dv, 0, 4, 5) == SpikeRelation::VerticalBelow);
  CHECK(relation_in_spike(vert, dv, 0, 5, 4) == SpikeRelation::VerticalAbove);

  const auto horiz = from_ipoints(square_plus({{1, -1}, {3, -1}}));
  const auto dh = decompose(horiz, square_x(horiz));
  CHECK(relation_in_spike(horiz, dh, 0, 4, 5) == SpikeRelation::HorizontalBefore);
  CHECK(relation_in_spike(horiz, dh, 0, 5, 4) == SpikeRelation::HorizontalAfter);
  // (0,4)-(3,-1) meets (4,4)-(1,-1).
  CHECK(oracle::segments_meet({0, 4}, {3, -1}, {4, 4}, {1, -1}));
}

TEST_CASE("relations match the geometric definitions and are converse") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Scene s = random_scene(seed, 30);
    const auto pts = ipoints(s.cfg);
    for (int i = 0; i < s.dec.k(); ++i) {
      const auto& m = s.dec.spike(i);
      const IPoint L = pts[s.dec.left_anchor(i)], R = pts[s.dec.right_anchor(i)];
      for (Label p : m)
        for (Label q : m) {
          if (p == q) continue;
          CHECK(precedes_vertically(s.cfg, s.dec, i, p, q) == oracle::inside_triangle_by_area(pts[p], L, pts[q], R));
          CHECK(precedes_horizontally(s.cfg, s.dec, i, p, q) == oracle::segments_meet(L, pts[q], R, pts[p]));
          const auto pq = relation_in_spike(s.cfg, s.dec, i, p, q);
          const auto qp = relation_in_spike(s.cfg, s.dec, i, q, p);
          const auto converse = pq == SpikeRelation::VerticalBelow      ? SpikeRelation::VerticalAbove
                                : pq == SpikeRelation::VerticalAbove    ? SpikeRelation::VerticalBelow
                                : pq == SpikeRelation::HorizontalBefore ? SpikeRelation::HorizontalAfter
                                                                        : SpikeRelation::HorizontalBefore;
          CHECK(qp == converse);
        }
    }
  }
}

TEST_CASE("both orders are strict partial orders") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Scene s = random_scene(seed, 30);
    for (int i = 0; i < s.dec.k(); ++i) {
      const auto& m = s.dec.spike(i);
      for (Label p : m)
        for (Label q : m)
          for (Label r : m) {
            if (p == q || q == r || p == r) continue;
            if (precedes_vertically(s.cfg, s.dec, i, p, q) && precedes_vertically(s.cfg, s.dec, i, q, r))
              CHECK(precedes_vertically(s.cfg, s.dec, i, p, r));
            if (precedes_horizontally(s.cfg, s.dec, i, p, q) && precedes_horizontally(s.cfg, s.dec, i, q, r))
              CHECK(precedes_horizontally(s.cfg, s.dec, i, p, r));
          }
    }
  }
}

TEST_CASE("separation conditions between spikes") {
  std::mt19937_64 rng(10);
  std::vector<Scene> scenes;
  for (std::uint64_t seed = 0; seed < 60; ++seed) scenes.push_back(random_scene(seed, 40));
  for (int t = 0; t < 60; ++t) scenes.push_back(polygon_scene(rng, 40, 6 + 2 * (t % 2)));
  for (const Scene& s : scenes) {
    const int k = s.dec.k();
    for (int i = 0; i < k; ++i) {
      const auto& m = s.dec.spike(i);
      for (Label p : m)
        for (Label q : m) {
          if (p == q) continue;
          if (precedes_vertically(s.cfg, s.dec, i, p, q)) {
            for (Label r : s.dec.spike(i - 1))
              for (Label u : s.dec.spike(i + 1)) CHECK(s.cfg.orientation(p, q, r) != s.cfg.orientation(p, q, u));
          }
          if (precedes_horizontally(s.cfg, s.dec, i, p, q)) {
            std::optional<Sign> side;
            for (int j = 0; j < k; ++j) {
              if (j == i || j == (i + 1) % k || j == (i + k - 1) % k) continue;
              for (Label r : s.dec.spike(j)) {
                const Sign o = s.cfg.orientation(p, q, r);
                if (side) CHECK(o == *side);
                side = o;
              }
            }
          }
        }
    }
  }
}

TEST_CASE("classify_vertical_triple: a skewed chain and its mirror image") {
  // Drifts toward the right anchor while descending.
  const std::vector<IPoint> pts{{0, 0}, {8, 0}, {8, 8}, {0, 8}, {4, -2}, {5, -6}, {6, -14}};
  const auto cfg = from_ipoints(pts);
  const auto dec = decompose(cfg, square_x(cfg));
  REQUIRE(dec.spike(0) == std::vector<Label>{4, 5, 6});
  REQUIRE(precedes_vertically(cfg, dec, 0, 4, 5));
  REQUIRE(precedes_vertically(cfg, dec, 0, 5, 6));
  const auto cls = classify_vertical_triple(cfg, dec, 0, 4, 5, 6);
  CHECK(oracle::convex_position(pts, {4, 5, 6, 3}));
  CHECK_FALSE(oracle::convex_position(pts, {4, 5, 6, 2}));
  CHECK(cls == VerticalClass::Left);

  std::vector<IPoint> mirrored;
  for (const auto& p : pts) mirrored.push_back({8 - p.x, p.y});
  // Relabel so the square again starts at (0,0) and runs counterclockwise.
  const std::vector<IPoint> relabeled{mirrored[1], mirrored[0], mirrored[3], mirrored[2],
                                      mirrored[4], mirrored[5], mirrored[6]};
  const auto mcfg = from_ipoints(relabeled);
  const auto mdec = decompose(mcfg, square_x(mcfg));
  REQUIRE(mdec.spike(0) == std::vector<Label>{4, 5, 6});
  CHECK(classify_vertical_triple(mcfg, mdec, 0, 4, 5, 6) == VerticalClass::Right);
}

TEST_CASE("classify_vertical_triple requires a vertical chain") {
  const auto cfg = from_ipoints(square_plus({{1, -1}, {3, -1}, {2, -3}}));
  const auto dec = decompose(cfg, square_x(cfg));
  CHECK_THROWS_AS(classify_vertical_triple(cfg, dec, 0, 4, 5, 6), Error);
}

TEST_CASE("classify_horizontal_triple examples") {
  // A cup and a cap below the bottom edge, coordinates doubled.
  const std::vector<IPoint> cup{{0, 0}, {8, 0}, {8, 8}, {0, 8}, {2, -2}, {4, -3}, {6, -2}};
  const auto cfg = from_ipoints(cup);
  const auto dec = decompose(cfg, square_x(cfg));
  REQUIRE(dec.spike(0) == std::vector<Label>{4, 5, 6});
  CHECK(oracle::convex_position(cup, {4, 5, 6, 3, 2}));
  CHECK(classify_horizontal_triple(cfg, dec, 0, 4, 5, 6) == HorizontalClass::Inner);

  const std::vector<IPoint> cap{{0, 0}, {8, 0}, {8, 8}, {0, 8}, {2, -4}, {4, -2}, {6, -4}};
  const auto cfg2 = from_ipoints(cap);
  const auto dec2 = decompose(cfg2, square_x(cfg2));
  REQUIRE(dec2.spike(0) == std::vector<Label>{4, 5, 6});
  CHECK_FALSE(oracle::convex_position(cap, {4, 5, 6, 3, 2}));
  CHECK(classify_horizontal_triple(cfg2, dec2, 0, 4, 5, 6) == HorizontalClass::Outer);
  CHECK(oracle::convex_position(cap, {4, 5, 6}));
}

TEST_CASE("vertical and horizontal classifications agree with the coordinate hull") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Scene s = random_scene(seed, 30);
    const auto pts = ipoints(s.cfg);
    for (int i = 0; i < s.dec.k(); ++i) {
      const auto& m = s.dec.spike(i);
      const Label L = s.dec.left_anchor(i), R = s.dec.right_anchor(i);
      for (Label p : m)
        for (Label q : m)
          for (Label r : m) {
            if (p == q || q == r || p == r) continue;
            if (precedes_vertically(s.cfg, s.dec, i, p, q) && precedes_vertically(s.cfg, s.dec, i, q, r)) {
              const bool left = oracle::convex_position(pts, {p, q, r, L});
              const bool right = oracle::convex_position(pts, {p, q, r, R});
              CHECK(left != right);
              CHECK((classify_vertical_triple(s.cfg, s.dec, i, p, q, r) == VerticalClass::Left) == left);
            }
            if (precedes_horizontally(s.cfg, s.dec, i, p, q) && precedes_horizontally(s.cfg, s.dec, i, q, r)) {
              const bool inner = oracle::convex_position(pts, {p, q, r, L, R});
              CHECK((classify_horizontal_triple(s.cfg, s.dec, i, p, q, r) == HorizontalClass::Inner) == inner);
              if (!inner) CHECK(oracle::convex_position(pts, {p, q, r}));
            }
          }
    }
  }
}

TEST_CASE("chain_stats on an empty spike") {
  const auto cfg = from_ipoints(square_plus({{2, -1}}));
  const auto dec = decompose(cfg, square_x(cfg));
  const auto s = chain_stats(cfg, dec, 2);
  CHECK(s.size == 0);
  CHECK(s.v == 0);
  CHECK(s.h == 0);
  CHECK(s.a + s.b + s.c + s.d == 0);
  CHECK(s.vertical_chain.empty());
  CHECK(s.left_chain.empty());
}

TEST_CASE("chain_stats on a left tower") {
  std::vector<IPoint> pts = fixtures::kSquare40;
  pts.insert(pts.end(), fixtures::kLeftTower.begin(), fixtures::kLeftTower.end());
  const auto cfg = from_ipoints(pts);
  const auto dec = decompose(cfg, square_x(cfg));
  REQUIRE(dec.spike(0).size() == 5);
  const auto s = chain_stats(cfg, dec, 0);
  CHECK(s.v == 5);
  CHECK(s.a == 5);
  CHECK(s.h == 1);
  CHECK(s.vertical_chain == std::vector<Label>{4, 5, 6, 7, 8});
  CHECK(s.left_chain == s.vertical_chain);
  std::vector<int> with_anchor = s.left_chain;
  with_anchor.push_back(3);
  CHECK(oracle::convex_position(pts, with_anchor));
}

TEST_CASE("chain_stats against brute-force chain search") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Scene s = random_scene(seed, 36);
    const auto pts = ipoints(s.cfg);
    for (int i = 0; i < s.dec.k(); ++i) {
      const auto& m = s.dec.spike(i);
      if (m.size() > 14) continue;
      const auto st = chain_stats(s.cfg, s.dec, i);
      const IPoint L = pts[s.dec.left_anchor(i)], R = pts[s.dec.right_anchor(i)];
      const int sz = static_cast<int>(m.size());
      // Chains are totally ordered subsets; for a strict partial order a
      // subset is a chain iff every pair is comparable.
      auto vcmp = [&](int a, int b) {
        return oracle::inside_triangle_by_area(pts[m[a]], L, pts[m[b]], R) ||
               oracle::inside_triangle_by_area(pts[m[b]], L, pts[m[a]], R);
      };
      auto hcmp = [&](int a, int b) {
        return oracle::segments_meet(L, pts[m[b]], R, pts[m[a]]) || oracle::segments_meet(L, pts[m[a]], R, pts[m[b]]);
      };
      int v = sz > 0 ? 1 : 0, h = v;
      for (std::uint32_t mask = 1; mask < (1u << sz); ++mask) {
        std::vector<int> idx;
        for (int t = 0; t < sz; ++t)
          if (mask >> t & 1) idx.push_back(t);
        bool vc = true, hc = true;
        for (std::size_t a = 0; a < idx.size(); ++a)
          for (std::size_t b = a + 1; b < idx.size(); ++b) {
            vc = vc && vcmp(idx[a], idx[b]);
            hc = hc && hcmp(idx[a], idx[b]);
          }
        if (vc) v = std::max<int>(v, static_cast<int>(idx.size()));
        if (hc) h = std::max<int>(h, static_cast<int>(idx.size()));
      }
      CHECK(st.v == v);
      CHECK(st.h == h);
      CHECK(st.size == sz);
      CHECK(st.size <= st.v * st.h);
      CHECK(st.a <= st.v);
      CHECK(st.b <= st.v);
      CHECK(st.c <= st.h);
      CHECK(st.d <= st.h);
      CHECK(BigInt(st.v) <= binomial(st.a + st.b - 2, st.a - 1));
      CHECK(BigInt(st.h) <= binomial(st.c + st.d - 2, st.c - 1));

      // Left/right statistics are the longest monochromatic sub-chains of the
      // fixed vertical chain.
      const auto& vc = st.vertical_chain;
      REQUIRE(static_cast<int>(vc.size()) == st.v);
      auto left = [&](int a, int b, int c) {
        return oracle::convex_position(pts, {vc[a], vc[b], vc[c], s.dec.left_anchor(i)});
      };
      auto right = [&](int a, int b, int c) {
        return oracle::convex_position(pts, {vc[a], vc[b], vc[c], s.dec.right_anchor(i)});
      };
      CHECK(st.a == oracle::longest_by_subsets(st.v, left));
      CHECK(st.b == oracle::longest_by_subsets(st.v, right));
      const auto& hc = st.horizontal_chain;
      auto inner = [&](int a, int b, int c) {
        return oracle::convex_position(pts, {hc[a], hc[b], hc[c], s.dec.left_anchor(i), s.dec.right_anchor(i)});
      };
      auto outer = [&](int a, int b, int c) { return !inner(a, b, c); };
      CHECK(st.c == oracle::longest_by_subsets(st.h, inner));
      CHECK(st.d == oracle::longest_by_subsets(st.h, outer));

      // Witnesses revalidate.
      if (st.left_chain.size() >= 3) {
        std::vector<int> w = st.left_chain;
        w.push_back(s.dec.left_anchor(i));
        CHECK(oracle::convex_position(pts, w));
      }
      if (st.right_chain.size() >= 3) {
        std::vector<int> w = st.right_chain;
        w.push_back(s.dec.right_anchor(i));
        CHECK(oracle::convex_position(pts, w));
      }
      if (st.inner_chain.size() >= 3) {
        std::vector<int> w = st.inner_chain;
        w.push_back(s.dec.left_anchor(i));
        w.push_back(s.dec.right_anchor(i));
        CHECK(oracle::convex_position(pts, w));
      }
    }
  }
}

TEST_CASE("vertical and horizontal classifications are transitive colorings") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Scene s = random_scene(seed, 40);
    for (int i = 0; i < s.dec.k(); ++i) {
      const auto st = chain_stats(s.cfg, s.dec, i);
      const auto& vc = st.vertical_chain;
      auto vcolor = [&](int a, int b, int c) {
        return classify_vertical_triple(s.cfg, s.dec, i, vc[a], vc[b], vc[c]) == VerticalClass::Left ? ColorClass::T1
                                                                                                  : ColorClass::T2;
      };
      CHECK_NOTHROW(TransitiveColoring(vc, vcolor));
      const auto& hc = st.horizontal_chain;
      auto hcolor = [&](int a, int b, int c) {
        return classify_horizontal_triple(s.cfg, s.dec, i, hc[a], hc[b], hc[c]) == HorizontalClass::Inner
                   ? ColorClass::T1
                   : ColorClass::T2;
      };
      CHECK_NOTHROW(TransitiveColoring(hc, hcolor));
      // Explicit 4-chain implication on the vertical chain.
      for (std::size_t a = 0; a < vc.size(); ++a)
        for (std::size_t b = a + 1; b < vc.size(); ++b)
          for (std::size_t c = b + 1; c < vc.size(); ++c)
            for (std::size_t d = c + 1; d < vc.size(); ++d)
              if (vcolor(a, b, c) == vcolor(b, c, d)) {
                CHECK(vcolor(a, b, d) == vcolor(a, b, c));
                CHECK(vcolor(a, c, d) == vcolor(a, b, c));
              }
    }
  }
}
