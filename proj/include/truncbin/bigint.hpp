#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace truncbin {

// All exact arithmetic in the library runs on arbitrary-precision integers;
// there is no floating point anywhere on the certification path.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_abs(const BigInt& v) { return boost::multiprecision::abs(v); }

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline int big_sign(const BigInt& v) { return v.sign(); }

}  // namespace truncbin
