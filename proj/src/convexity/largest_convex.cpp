#include <algorithm>
#include <cstdint>
#include <numeric>

#include "ccs/convexity/convexity.hpp"

namespace ccs {

namespace {

// ---------------------------------------------------------------------------
// Exhaustive search by decreasing size.

class BruteSearch {
 public:
  explicit BruteSearch(const PseudoConfiguration& cfg) : cfg_(cfg), n_(cfg.size()) {
    blocked_.assign(static_cast<std::size_t>(n_) * n_ * n_, 0);
    for (Label a = 0; a < n_; ++a)
      for (Label b = a + 1; b < n_; ++b)
        for (Label c = b + 1; c < n_; ++c) {
          std::uint32_t mask = 0;
          for (Label p = 0; p < n_; ++p) {
            if (p == a || p == b || p == c) continue;
            if (!convex_quadruple(cfg, a, b, c, p)) mask |= std::uint32_t{1} << p;
          }
          blocked_[index(a, b, c)] = mask;
        }
  }

  std::vector<Label> run() {
    for (int size = n_; size >= 3; --size) {
      chosen_.clear();
      if (extend(size, 0, 0)) return chosen_;
    }
    return {};
  }

 private:
  std::size_t index(Label a, Label b, Label c) const {
    return (static_cast<std::size_t>(a) * n_ + b) * n_ + c;
  }

  // Lex-order DFS over size-`target` subsets; `forbidden` holds every label
  // that would form a non-convex quadruple with three chosen labels.
  bool extend(int target, Label next, std::uint32_t forbidden) {
    if (static_cast<int>(chosen_.size()) == target) return true;
    const int missing = target - static_cast<int>(chosen_.size());
    for (Label e = next; e + missing <= n_; ++e) {
      if ((forbidden >> e) & 1U) continue;
      std::uint32_t grown = forbidden;
      for (std::size_t i = 0; i < chosen_.size(); ++i)
        for (std::size_t j = i + 1; j < chosen_.size(); ++j) grown |= blocked_[index(chosen_[i], chosen_[j], e)];
      chosen_.push_back(e);
      if (extend(target, e + 1, grown)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const PseudoConfiguration& cfg_;
  int n_;
  std::vector<std::uint32_t> blocked_;
  std::vector<Label> chosen_;
};

// ---------------------------------------------------------------------------
// Longest convex chain around an anchor.
//
// Fix the anchor a (smallest label of the polygon) and the first vertex f
// after it in counterclockwise order. Every later vertex r has (a, f, r)
// counterclockwise; on that side of the pseudoline through a and f, the
// transitivity axiom makes "q before r iff (a, q, r) is counterclockwise" a
// total order. A polygon is then a subsequence f = y1, ..., ym of that order
// with a left turn at every interior vertex.

struct ChainQuery {
  Label anchor = 0;
  std::vector<char> allowed;   // labels usable besides the anchor
  std::vector<char> required;  // labels that must appear (anchor excluded)
};

struct ChainResult {
  int length = 0;
  std::vector<Label> chain;  // anchor first, counterclockwise
};

[[noreturn]] void not_a_cc_system(Label a) {
  throw Error(ErrorCode::InvalidArgument,
              "angular order around " + std::to_string(a) + " is not transitive; not a CC-system", {a});
}

ChainResult longest_anchored_chain(const PseudoConfiguration& cfg, const ChainQuery& query,
                                   bool want_chain) {
  const int n = cfg.size();
  const Label a = query.anchor;
  ChainResult best;
  std::vector<Label> seq;
  std::vector<int> req_prefix;
  std::vector<int> dp;
  std::vector<int> parent;

  for (Label f = 0; f < n; ++f) {
    if (f == a || !query.allowed[f]) continue;
    bool feasible = true;
    for (Label r = 0; r < n && feasible; ++r)
      if (query.required[r] && r != f && r != a && !cfg.ccw(a, f, r)) feasible = false;
    if (!feasible) continue;

    seq.assign(1, f);
    for (Label r = 0; r < n; ++r) {
      if (r == a || r == f || !query.allowed[r] || !cfg.ccw(a, f, r)) continue;
      // Insertion keeps the sort well defined even for inconsistent tables.
      auto pos = seq.end();
      while (pos - 1 != seq.begin() && cfg.ccw(a, r, *(pos - 1))) --pos;
      seq.insert(pos, r);
    }
    const int m = static_cast<int>(seq.size());
    for (int i = 1; i + 1 < m; ++i)
      if (!cfg.ccw(a, seq[i], seq[i + 1])) not_a_cc_system(a);

    req_prefix.assign(m + 1, 0);
    for (int i = 0; i < m; ++i) req_prefix[i + 1] = req_prefix[i] + (query.required[seq[i]] ? 1 : 0);
    auto gap_free = [&](int j, int l) { return req_prefix[l] - req_prefix[j + 1] == 0; };

    dp.assign(static_cast<std::size_t>(m) * m, -1);
    parent.assign(static_cast<std::size_t>(m) * m, -1);
    auto at = [m](int j, int l) { return static_cast<std::size_t>(j) * m + l; };
    for (int l = 1; l < m; ++l)
      if (gap_free(0, l)) dp[at(0, l)] = 3;
    for (int j = 1; j < m; ++j)
      for (int l = j + 1; l < m; ++l) {
        if (!gap_free(j, l)) continue;
        int value = -1;
        int from = -1;
        for (int i = 0; i < j; ++i) {
          const int prev = dp[at(i, j)];
          if (prev < 0 || prev + 1 <= value) continue;
          if (cfg.ccw(seq[i], seq[j], seq[l])) {
            value = prev + 1;
            from = i;
          }
        }
        dp[at(j, l)] = value;
        parent[at(j, l)] = from;
      }

    for (int j = 0; j < m; ++j)
      for (int l = j + 1; l < m; ++l) {
        const int value = dp[at(j, l)];
        if (value <= best.length || req_prefix[m] - req_prefix[l + 1] != 0) continue;
        best.length = value;
        if (want_chain) {
          std::vector<Label> rev;
          int cj = j;
          int cl = l;
          rev.push_back(seq[cl]);
          while (cj > 0) {
            rev.push_back(seq[cj]);
            const int ci = parent[at(cj, cl)];
            cl = cj;
            cj = ci;
          }
          rev.push_back(seq[0]);
          rev.push_back(a);
          best.chain.assign(rev.rbegin(), rev.rend());
        }
      }
  }
  return best;
}

ChainQuery anchored_query(int n, Label anchor) {
  ChainQuery q;
  q.anchor = anchor;
  q.allowed.assign(n, 0);
  q.required.assign(n, 0);
  for (Label x = anchor + 1; x < n; ++x) q.allowed[x] = 1;
  return q;
}

// Size and the smallest anchor that reaches it.
std::pair<int, Label> chain_dp_size(const PseudoConfiguration& cfg) {
  int best = 0;
  Label best_anchor = 0;
  for (Label a = 0; a + 2 < cfg.size(); ++a) {
    const int len = longest_anchored_chain(cfg, anchored_query(cfg.size(), a), false).length;
    if (len > best) {
      best = len;
      best_anchor = a;
    }
  }
  return {best, best_anchor};
}

std::vector<Label> chain_dp_members(const PseudoConfiguration& cfg) {
  const int n = cfg.size();
  const auto [size, anchor] = chain_dp_size(cfg);
  // Greedy lexicographic reconstruction: the next member is the smallest
  // label for which a polygon of full size still exists containing the
  // members chosen so far and otherwise only larger labels.
  std::vector<Label> members{anchor};
  while (static_cast<int>(members.size()) < size) {
    bool extended = false;
    for (Label b = members.back() + 1; b < n && !extended; ++b) {
      ChainQuery q;
      q.anchor = anchor;
      q.allowed.assign(n, 0);
      q.required.assign(n, 0);
      for (Label m : members)
        if (m != anchor) q.allowed[m] = q.required[m] = 1;
      q.allowed[b] = q.required[b] = 1;
      for (Label x = b + 1; x < n; ++x) q.allowed[x] = 1;
      if (longest_anchored_chain(cfg, q, false).length == size) {
        members.push_back(b);
        extended = true;
      }
    }
    if (!extended) not_a_cc_system(anchor);
  }
  return members;
}

}  // namespace

int largest_convex_size(const PseudoConfiguration& cfg, SearchMode mode) {
  if (mode == SearchMode::Brute) return static_cast<int>(largest_convex_subset(cfg, mode).size());
  return chain_dp_size(cfg).first;
}

ConvexCertificate largest_convex_subset(const PseudoConfiguration& cfg, SearchMode mode) {
  std::vector<Label> members;
  if (mode == SearchMode::Brute) {
    if (cfg.size() > kMaxBruteSize) {
      throw Error(ErrorCode::NTooLargeForBrute,
                  "brute force is limited to n <= " + std::to_string(kMaxBruteSize));
    }
    members = BruteSearch(cfg).run();
  } else {
    members = chain_dp_members(cfg);
  }
  ConvexCertificate cert = hull_cycle(cfg, members);
  if (cert.members != members) {
    throw Error(ErrorCode::NotConvex, "search produced a subset that is not in convex position", members);
  }
  return cert;
}

}  // namespace ccs
