#include "ccs/extraction/bound.hpp"

#include <cmath>
#include <limits>

#include "ccs/core/error.hpp"

namespace ccs {

namespace {

double log_term(int n, bool natural) {
  return natural ? std::log(static_cast<double>(n)) : std::log2(static_cast<double>(n));
}

double exponent_with(int n, int k, bool natural) { return n + 2.0 * n * log_term(n, natural) / k + 8.0 * k; }

int search_limit(int n) {
  const int upper = static_cast<int>(std::ceil(2.0 * std::sqrt(n * std::log2(static_cast<double>(n)))));
  return upper < 4 ? 4 : upper;
}

int minimizer(int n, bool natural) {
  int best_k = 4;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 4; k <= search_limit(n); k += 2) {
    const double e = exponent_with(n, k, natural);
    if (e < best) {
      best = e;
      best_k = k;
    }
  }
  return best_k;
}

}  // namespace

double bound_exponent(int n, int k) { return exponent_with(n, k, false); }

int prescribed_k(int n) {
  const double target = std::sqrt(n * std::log2(static_cast<double>(n))) / 2.0;
  int k = static_cast<int>(std::ceil(target));
  if (k % 2 != 0) ++k;
  return k < 4 ? 4 : k;
}

BoundReport bound_b(int n) {
  if (n < 3) throw Error(ErrorCode::NTooSmall, "bound needs n >= 3");
  BoundReport r;
  r.n = n;
  r.k_prescribed = prescribed_k(n);
  r.exponent_prescribed = bound_exponent(n, r.k_prescribed);
  r.k_star = minimizer(n, false);
  r.exponent = bound_exponent(n, r.k_star);
  r.bound_log2_b = r.bound_log2_c = r.bound_log2_c_prime = r.bound_log2_e = r.exponent;
  r.k_star_natural_log = minimizer(n, true);
  r.exponent_natural_log = exponent_with(n, r.k_star_natural_log, true);
  r.asymptotic_term = 8.0 * std::sqrt(n * std::log2(static_cast<double>(n)));
  return r;
}

}  // namespace ccs
