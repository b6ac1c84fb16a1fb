#ifndef KNOTFORGE_NUMERIC_HPP
#define KNOTFORGE_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace knotforge {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_abs(const BigInt& a) {
    return a < 0 ? BigInt(-a) : a;
}

inline int64_t gcd64(int64_t a, int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace knotforge

#endif
