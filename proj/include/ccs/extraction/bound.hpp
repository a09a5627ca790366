#pragma once

namespace ccs {

/// n + 2 n log2(n) / k + 8 k.
double bound_exponent(int n, int k);

/// Smallest even integer >= sqrt(n log2 n) / 2, and at least 4.
int prescribed_k(int n);

struct BoundReport {
  int n = 0;
  int k_prescribed = 0;
  double exponent_prescribed = 0;
  /// Minimizer of the exponent over even k in [4, max(4, ceil(2 sqrt(n log2 n)))].
  int k_star = 0;
  double exponent = 0;
  /// log2 of the bound on b(n); the same figure bounds c(n), c'(n) and e(n).
  double bound_log2_b = 0;
  double bound_log2_c = 0;
  double bound_log2_c_prime = 0;
  double bound_log2_e = 0;
  /// The exponent with natural logarithms in the middle term, at k_star.
  double exponent_natural_log = 0;
  int k_star_natural_log = 0;
  /// 8 sqrt(n log2 n): the exponent at the continuous optimum is n plus this.
  double asymptotic_term = 0;
};

/// Throws NTooSmall when n < 3.
BoundReport bound_b(int n);

}  // namespace ccs
