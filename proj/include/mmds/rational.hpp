#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmds {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative");
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

// multinomial(n; parts). Zero when the parts do not sum to n.
inline BigInt multinomial(long n, const std::vector<long>& parts) {
    long s = 0;
    for (long p : parts) {
        if (p < 0) return 0;
        s += p;
    }
    if (s != n) return 0;
    BigInt r = factorial(n);
    for (long p : parts) r /= factorial(p);
    return r;
}

inline std::string rat_to_string(const BigRat& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

inline double rat_to_double(const BigRat& q) { return q.convert_to<double>(); }

}  // namespace mmds
