#include "ccs/workbench/verify_small.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "ccs/core/enumerate.hpp"
#include "ccs/core/random.hpp"
#include "ccs/workbench/generators.hpp"

namespace ccs {

std::string_view to_string(SmallTask task) {
  switch (task) {
    case SmallTask::B4: return "b4";
    case SmallTask::Caratheodory: return "caratheodory";
    case SmallTask::Trichotomy: return "trichotomy";
    case SmallTask::Joins: return "joins";
  }
  return "unknown";
}

std::optional<SmallTask> parse_small_task(std::string_view text) {
  for (SmallTask t : {SmallTask::B4, SmallTask::Caratheodory, SmallTask::Trichotomy, SmallTask::Joins})
    if (to_string(t) == text) return t;
  return std::nullopt;
}

Scene random_scene(std::uint64_t seed, int max_n) {
  Rng rng(seed);
  const int n = static_cast<int>(uniform_int(rng, 8, std::max(8, max_n)));
  if (seed % 2 == 0) {
    PseudoConfiguration cfg = gen_spiked_square(n, rng());
    const std::vector<Label> square{0, 1, 2, 3};
    SpikeDecomposition dec = decompose(cfg, hull_cycle(cfg, square));
    return {cfg, dec};
  }
  for (;;) {
    PseudoConfiguration cfg = generate({GeneratorKind::RandomRealizable, n, rng(), 0});
    std::vector<Label> order(n);
    for (Label p = 0; p < n; ++p) order[p] = p;
    shuffle(order, rng);
    std::vector<Label> x;
    for (Label p : order) {
      bool ok = true;
      for (std::size_t i = 0; i < x.size() && ok; ++i)
        for (std::size_t j = i + 1; j < x.size() && ok; ++j)
          for (std::size_t l = j + 1; l < x.size() && ok; ++l) ok = convex_quadruple(cfg, x[i], x[j], x[l], p);
      if (ok) x.push_back(p);
      if (x.size() == 4) break;
    }
    if (x.size() < 4) continue;
    SpikeDecomposition dec = decompose(cfg, hull_cycle(cfg, x));
    return {cfg, dec};
  }
}

namespace {

void record(VerifyReport& r, bool ok, const std::string& what) {
  ++r.checks;
  if (ok) return;
  ++r.failures;
  if (r.failure_samples.size() < 5) r.failure_samples.push_back(what);
}

std::string labels(const std::vector<Label>& v) {
  std::string s;
  for (Label l : v) s += (s.empty() ? "" : ",") + std::to_string(l);
  return s;
}

void run_b4(VerifyReport& r) {
  r.trials = 1;
  for_each_system(5, [&](const PseudoConfiguration& cfg) {
    record(r, largest_convex_size(cfg, SearchMode::Brute) >= 4, "5-point system without a convex 4-subset: " + cfg.sign_string());
  });
  const PseudoConfiguration tri = PseudoConfiguration::from_sign_string(4, "++-+");
  record(r, largest_convex_size(tri, SearchMode::Brute) == 3, "++-+ has a convex 4-subset");
}

void run_caratheodory(VerifyReport& r, std::uint64_t trials, std::uint64_t seed) {
  Rng rng(seed);
  r.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const int n = static_cast<int>(uniform_int(rng, 3, 10));
    const PseudoConfiguration cfg = generate({GeneratorKind::RandomRealizable, n, rng(), 0});
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const int size = std::popcount(mask);
      if (size < 3 || size > 7) continue;
      std::vector<Label> q;
      for (Label p = 0; p < n; ++p)
        if (mask >> p & 1) q.push_back(p);
      const bool by_quadruples = is_convex_position(cfg, q);
      const bool by_extremes = hull_extremes(cfg, q).size() == q.size();
      record(r, by_quadruples == by_extremes, "disagreement on {" + labels(q) + "}");
    }
  }
}

void run_trichotomy(VerifyReport& r, std::uint64_t trials, std::uint64_t seed) {
  r.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Scene s = random_scene(seed + t);
    for (int i = 0; i < s.dec.k(); ++i) {
      const auto& members = s.dec.spike(i);
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          bool ok = true;
          try {
            relation_in_spike(s.cfg, s.dec, i, members[a], members[b]);
          } catch (const Error&) {
            ok = false;
          }
          record(r, ok, "scene " + std::to_string(seed + t) + " spike " + std::to_string(i + 1) + ": " +
                            std::to_string(members[a]) + "," + std::to_string(members[b]));
        }
    }
  }
}

void run_joins(VerifyReport& r, std::uint64_t trials, std::uint64_t seed) {
  r.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Scene s = random_scene(seed + t);
    const int k = s.dec.k();
    std::vector<ChainStats> stats;
    for (int i = 0; i < k; ++i) stats.push_back(chain_stats(s.cfg, s.dec, i));
    auto check = [&](std::vector<Label> set, const std::string& what) {
      std::sort(set.begin(), set.end());
      record(r, set.size() < 3 || is_convex_position(s.cfg, set),
             "scene " + std::to_string(seed + t) + " " + what + " {" + labels(set) + "}");
    };
    for (int i = 0; i < k; ++i) {
      std::vector<Label> join = stats[i].right_chain;
      join.insert(join.end(), stats[(i + 1) % k].left_chain.begin(), stats[(i + 1) % k].left_chain.end());
      check(join, "right-left " + std::to_string(i + 1));
      check(stats[i].outer_chain, "outer " + std::to_string(i + 1));
    }
    for (int parity = 0; parity < 2; ++parity) {
      std::vector<Label> join;
      for (int i = parity; i < k; i += 2) join.insert(join.end(), stats[i].inner_chain.begin(), stats[i].inner_chain.end());
      check(join, parity == 0 ? "inner-even" : "inner-odd");
    }
  }
}

}  // namespace

VerifyReport verify_small(SmallTask task, std::uint64_t trials, std::uint64_t seed) {
  VerifyReport r;
  r.task = task;
  switch (task) {
    case SmallTask::B4: run_b4(r); break;
    case SmallTask::Caratheodory: run_caratheodory(r, trials, seed); break;
    case SmallTask::Trichotomy: run_trichotomy(r, trials, seed); break;
    case SmallTask::Joins: run_joins(r, trials, seed); break;
  }
  return r;
}

}  // namespace ccs
