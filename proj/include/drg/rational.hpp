#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace drg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline double to_double(const BigRat& x) { return x.convert_to<double>(); }

inline bool is_integer(const BigRat& x) { return denominator(x) == 1; }

inline std::string to_string(const BigRat& x) {
    if (is_integer(x)) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

// C(n, k) over big integers, 0 outside 0 <= k <= n.
BigInt binomial(long long n, long long k);

}  // namespace drg
