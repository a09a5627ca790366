#include "ccs/core/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ccs {

namespace {

// Returns true and updates best/best_perm if the relabeling by perm is smaller.
bool improve(const PseudoConfiguration& cfg, const std::vector<Label>& perm, bool flip,
             std::string& best, std::vector<Label>* best_perm) {
  const int n = cfg.size();
  std::string candidate;
  candidate.reserve(best.size());
  bool smaller = best.empty();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Sign s = cfg.orient(perm[i], perm[j], perm[k]);
        if (flip) s = -s;
        const char c = to_char(s);
        if (!smaller) {
          const char b = best[candidate.size()];
          if (c > b) return false;
          if (c < b) smaller = true;
        }
        candidate.push_back(c);
      }
  if (!smaller) return false;
  best = std::move(candidate);
  if (best_perm) *best_perm = perm;
  return true;
}

std::string canonical_impl(const PseudoConfiguration& cfg, bool identify_mirror,
                           std::vector<Label>* best_perm) {
  std::vector<Label> perm(cfg.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    improve(cfg, perm, false, best, best_perm);
    if (identify_mirror) improve(cfg, perm, true, best, nullptr);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void check_enumeration_size(int n) {
  if (n < 3) throw Error(ErrorCode::NTooSmall, "enumeration needs n >= 3");
  if (n > kMaxEnumerationSize) {
    throw Error(ErrorCode::NTooLarge, "enumeration is limited to n <= " +
                                          std::to_string(kMaxEnumerationSize));
  }
}

std::vector<std::vector<Sign>> raw_systems(int n) {
  if (n == 3) return {{Sign::CCW}, {Sign::CW}};
  const auto smaller = raw_systems(n - 1);
  const Label fresh = n - 1;

  // Positions of the triples through the new point in the n-point lex order.
  std::vector<std::size_t> old_slot;
  std::vector<std::size_t> new_slot;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const std::size_t idx = triple_index(n, i, j, k);
        if (k == fresh) new_slot.push_back(idx);
        else old_slot.push_back(idx);
      }

  std::vector<std::vector<Sign>> out;
  const std::size_t extra = new_slot.size();
  std::vector<Sign> signs(triple_count(n));
  for (const auto& base : smaller) {
    for (std::size_t t = 0; t < old_slot.size(); ++t) signs[old_slot[t]] = base[t];
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << extra); ++bits) {
      for (std::size_t t = 0; t < extra; ++t)
        signs[new_slot[t]] = ((bits >> t) & 1U) ? Sign::CW : Sign::CCW;
      const auto cfg = PseudoConfiguration::unchecked(n, signs);
      if (satisfies_axioms(cfg, fresh)) out.push_back(signs);
    }
  }
  return out;
}

bool sign_less(const std::vector<Sign>& a, const std::vector<Sign>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](Sign x, Sign y) { return to_char(x) < to_char(y); });
}

}  // namespace

std::string canonical_form(const PseudoConfiguration& cfg, bool identify_mirror) {
  if (cfg.size() > kMaxEnumerationSize + 2) {
    throw Error(ErrorCode::NTooLarge, "canonical form is limited to small configurations");
  }
  return canonical_impl(cfg, identify_mirror, nullptr);
}

std::vector<Label> canonical_relabeling(const PseudoConfiguration& cfg) {
  if (cfg.size() > kMaxEnumerationSize + 2) {
    throw Error(ErrorCode::NTooLarge, "canonical form is limited to small configurations");
  }
  std::vector<Label> perm;
  canonical_impl(cfg, false, &perm);
  return perm;
}

void for_each_system(int n, const std::function<void(const PseudoConfiguration&)>& sink,
                     EnumerateOptions options) {
  check_enumeration_size(n);
  auto systems = raw_systems(n);
  std::sort(systems.begin(), systems.end(), sign_less);
  if (!options.canonical) {
    for (auto& s : systems) sink(PseudoConfiguration::unchecked(n, std::move(s)));
    return;
  }
  std::set<std::string> classes;
  for (auto& s : systems) {
    classes.insert(canonical_form(PseudoConfiguration::unchecked(n, std::move(s)),
                                  options.identify_mirror));
  }
  // std::string order on '+'/'-' matches sign_less.
  for (const auto& form : classes) {
    std::vector<Sign> signs;
    for (char c : form) signs.push_back(c == '+' ? Sign::CCW : Sign::CW);
    sink(PseudoConfiguration::unchecked(n, std::move(signs)));
  }
}

std::vector<PseudoConfiguration> enumerate_systems(int n, EnumerateOptions options) {
  std::vector<PseudoConfiguration> out;
  for_each_system(n, [&](const PseudoConfiguration& cfg) { out.push_back(cfg); }, options);
  return out;
}

}  // namespace ccs
