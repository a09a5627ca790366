#pragma once

// Reference computations for tests. They work on raw integer coordinates or
// raw sign strings and share no code with the library.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

struct IPoint {
  long long x, y;
  friend bool operator==(const IPoint&, const IPoint&) = default;
  friend auto operator<=>(const IPoint&, const IPoint&) = default;
};

inline int orient(const IPoint& a, const IPoint& b, const IPoint& c) {
  const __int128 d = static_cast<__int128>(b.x - a.x) * (c.y - a.y) - static_cast<__int128>(b.y - a.y) * (c.x - a.x);
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

inline bool general_position(const std::vector<IPoint>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) return false;
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (orient(pts[i], pts[j], pts[k]) == 0) return false;
    }
  return true;
}

/// Points in general position, coordinates in [0, range].
inline std::vector<IPoint> random_points(std::mt19937_64& rng, int n, long long range) {
  std::uniform_int_distribution<long long> coord(0, range);
  for (;;) {
    std::vector<IPoint> pts;
    for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
    if (general_position(pts)) return pts;
  }
}

/// Sign string of the point set, triples in lex order.
inline std::string chirotope(const std::vector<IPoint>& pts) {
  std::string s;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) s += orient(pts[i], pts[j], pts[k]) > 0 ? '+' : '-';
  return s;
}

/// Andrew's monotone chain; number of strict hull vertices.
inline std::size_t hull_size(std::vector<IPoint> pts) {
  if (pts.size() < 3) return pts.size();
  std::sort(pts.begin(), pts.end());
  std::vector<IPoint> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  return k - 1;
}

inline std::vector<IPoint> pick(const std::vector<IPoint>& pts, const std::vector<int>& labels) {
  std::vector<IPoint> out;
  for (int l : labels) out.push_back(pts[l]);
  return out;
}

inline bool convex_position(const std::vector<IPoint>& pts, const std::vector<int>& labels) {
  return hull_size(pick(pts, labels)) == labels.size();
}

/// Size of the largest subset in convex position, by subset enumeration.
inline int largest_convex(const std::vector<IPoint>& pts) {
  const int n = static_cast<int>(pts.size());
  int best = std::min(n, 2);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    std::vector<int> labels;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) labels.push_back(i);
    if (convex_position(pts, labels)) best = size;
  }
  return best;
}

/// Geometric spike test: p is strictly beyond the line of edge (cycle[i],
/// cycle[i+1]) and strictly inside the lines of the two neighboring edges.
/// `cycle` is counterclockwise.
inline int spike_by_lines(const std::vector<IPoint>& pts, const std::vector<int>& cycle, int p) {
  const int k = static_cast<int>(cycle.size());
  auto at = [&](int i) { return pts[cycle[((i % k) + k) % k]]; };
  for (int i = 0; i < k; ++i) {
    if (orient(at(i), at(i + 1), pts[p]) < 0 && orient(at(i - 1), at(i), pts[p]) > 0 &&
        orient(at(i + 1), at(i + 2), pts[p]) > 0)
      return i;
  }
  return -1;
}

/// Closed segments ab and cd meet; solved exactly with rationals.
inline bool segments_meet(const IPoint& a, const IPoint& b, const IPoint& c, const IPoint& d) {
  using boost::multiprecision::cpp_rational;
  const cpp_rational rx = b.x - a.x, ry = b.y - a.y, sx = d.x - c.x, sy = d.y - c.y;
  const cpp_rational denom = rx * sy - ry * sx;
  if (denom == 0) return false;
  const cpp_rational t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom;
  const cpp_rational u = ((c.x - a.x) * ry - (c.y - a.y) * rx) / denom;
  return t >= 0 && t <= 1 && u >= 0 && u <= 1;
}

/// Point strictly inside triangle abc, by area sums.
inline bool inside_triangle_by_area(const IPoint& p, const IPoint& a, const IPoint& b, const IPoint& c) {
  auto area2 = [](const IPoint& u, const IPoint& v, const IPoint& w) {
    const __int128 d = static_cast<__int128>(v.x - u.x) * (w.y - u.y) - static_cast<__int128>(v.y - u.y) * (w.x - u.x);
    return d < 0 ? -d : d;
  };
  const __int128 whole = area2(a, b, c);
  const __int128 parts[3] = {area2(p, b, c), area2(a, p, c), area2(a, b, p)};
  return parts[0] > 0 && parts[1] > 0 && parts[2] > 0 && parts[0] + parts[1] + parts[2] == whole;
}

/// Signs of a raw sign string, extended to ordered triples by parity.
class RawSystem {
 public:
  RawSystem(int n, std::string signs) : n_(n), signs_(std::move(signs)) {}

  int chi(int p, int q, int r) const {
    std::array<int, 3> t{p, q, r};
    int parity = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (t[i] > t[j]) parity ^= 1;
    std::sort(t.begin(), t.end());
    int index = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        for (int k = j + 1; k < n_; ++k, ++index)
          if (i == t[0] && j == t[1] && k == t[2]) {
            const int s = signs_[index] == '+' ? 1 : -1;
            return parity ? -s : s;
          }
    return 0;
  }

  /// Interiority and transitivity over all tuples of distinct labels.
  bool axioms_hold() const {
    const int n = n_;
    auto distinct = [](std::initializer_list<int> v) {
      std::vector<int> s(v);
      std::sort(s.begin(), s.end());
      return std::adjacent_find(s.begin(), s.end()) == s.end();
    };
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        for (int r = 0; r < n; ++r)
          for (int t = 0; t < n; ++t) {
            if (!distinct({p, q, r, t})) continue;
            if (chi(t, q, r) > 0 && chi(p, t, r) > 0 && chi(p, q, t) > 0 && chi(p, q, r) < 0) return false;
            for (int s = 0; s < n; ++s) {
              if (!distinct({p, q, r, t, s})) continue;
              if (chi(t, s, p) > 0 && chi(t, s, q) > 0 && chi(t, s, r) > 0 && chi(t, p, q) > 0 && chi(t, q, r) > 0 &&
                  chi(t, p, r) < 0)
                return false;
            }
          }
    return true;
  }

  /// Lex-minimal sign string over all relabelings ('+' before '-').
  std::string canonical() const {
    std::vector<int> perm(n_);
    for (int i = 0; i < n_; ++i) perm[i] = i;
    std::string best;
    do {
      std::string s;
      for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
          for (int k = j + 1; k < n_; ++k) s += chi(perm[i], perm[j], perm[k]) > 0 ? '+' : '-';
      if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

 private:
  int n_;
  std::string signs_;
};

/// Every sign string of length C(n,3), in '+' < '-' lex order.
inline std::vector<std::string> all_sign_strings(int n) {
  const int m = n * (n - 1) * (n - 2) / 6;
  std::vector<std::string> out;
  for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
    std::string s(m, '+');
    for (int i = 0; i < m; ++i)
      if (bits >> (m - 1 - i) & 1) s[i] = '-';
    out.push_back(s);
  }
  return out;
}

/// Longest subsequence of `items` (kept in order) whose every triple passes
/// `ok`, by subset enumeration; items.size() <= 20.
template <class Ok>
int longest_by_subsets(int m, Ok ok) {
  int best = std::min(m, 2);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    std::vector<int> idx;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) idx.push_back(i);
    bool good = true;
    for (std::size_t a = 0; a < idx.size() && good; ++a)
      for (std::size_t b = a + 1; b < idx.size() && good; ++b)
        for (std::size_t c = b + 1; c < idx.size() && good; ++c) good = ok(idx[a], idx[b], idx[c]);
    if (good) best = size;
  }
  return best;
}

}  // namespace oracle
