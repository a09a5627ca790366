#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ccs {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k) exactly; zero when k < 0, n < 0 or k > n.
BigInt binomial(long n, long k);

BigInt power(const BigInt& base, unsigned exponent);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace ccs
