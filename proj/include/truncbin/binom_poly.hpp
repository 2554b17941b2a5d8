#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "truncbin/bigint.hpp"
#include "truncbin/int_poly.hpp"

namespace truncbin {

/// n!/(j!(n-j)!) exactly, by the usual product form.
inline BigInt binomial(std::uint64_t n, std::uint64_t j) {
    if (j > n) throw std::domain_error("binomial: j > n");
    if (j > n - j) j = n - j;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= j; ++i) {
        r *= n - j + i;
        r /= i;  // exact: r is binomial(n-j+i, i) here
    }
    return r;
}

/// sum_{j=0}^{a} (-1)^j C(b,j); equals (-1)^a C(b-1,a) for a < b.
inline BigInt alternating_binomial_sum(std::uint64_t a, std::uint64_t b) {
    if (a >= b) throw std::domain_error("alternating_binomial_sum: requires a < b");
    BigInt sum = 0;
    BigInt term = 1;  // C(b,0)
    for (std::uint64_t j = 0;; ++j) {
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
        if (j == a) break;
        term *= b - j;
        term /= j + 1;
    }
    return sum;
}

/// c_j = (-1)^(k-j) C(n,j) C(n-j-1,k-j), the x^j coefficient of the shifted
/// truncated binomial. Never zero on its domain j <= k <= n-1.
inline BigInt shifted_coefficient(std::uint64_t n, std::uint64_t k, std::uint64_t j) {
    if (!(n >= 1 && j <= k && k <= n - 1)) throw std::domain_error("shifted_coefficient: requires j <= k <= n-1");
    BigInt c = binomial(n, j) * binomial(n - j - 1, k - j);
    if ((k - j) % 2 == 1) c = -c;
    return c;
}

/// The binomial expansion of (1+x)^n truncated at degree k.
inline IntPoly truncated_binomial(std::uint64_t n, std::uint64_t k) {
    if (!(n >= 2 && 1 <= k && k <= n - 1)) throw std::domain_error("truncated_binomial: requires 1 <= k <= n-1");
    std::vector<BigInt> c(k + 1);
    c[0] = 1;
    for (std::uint64_t j = 0; j < k; ++j) {
        c[j + 1] = c[j] * (n - j);
        c[j + 1] /= j + 1;
    }
    return IntPoly(std::move(c));
}

namespace detail {

// All k+1 coefficients c_0..c_k by one pass of the two binomial recurrences.
inline std::vector<BigInt> shifted_coefficients(std::uint64_t n, std::uint64_t k) {
    if (!(n >= 2 && 1 <= k && k <= n - 1)) throw std::domain_error("shifted_coefficients: requires 1 <= k <= n-1");
    std::vector<BigInt> c(k + 1);
    BigInt a = 1;                  // C(n,j)
    BigInt b = binomial(n - 1, k); // C(n-j-1,k-j)
    for (std::uint64_t j = 0; j <= k; ++j) {
        c[j] = a * b;
        if ((k - j) % 2 == 1) c[j] = -c[j];
        if (j < k) {
            a *= n - j;
            a /= j + 1;
            b *= k - j;
            b /= n - j - 1;
        }
    }
    return c;
}

}  // namespace detail

/// Multiplier vector a_0..a_k for the scaled polynomial: every entry non-zero
/// with all prime factors <= k.
struct SmoothMultipliers {
    std::vector<BigInt> values;
    std::uint64_t bound = 0;

    static SmoothMultipliers unit(std::uint64_t k) {
        return SmoothMultipliers{std::vector<BigInt>(k + 1, BigInt(1)), k};
    }

    void validate() const {
        if (values.size() != bound + 1)
            throw std::invalid_argument("SmoothMultipliers: expected k+1 values");
        for (const auto& v : values) {
            if (v == 0) throw std::invalid_argument("SmoothMultipliers: zero multiplier");
            BigInt rest = big_abs(v);
            for (std::uint64_t p = 2; p <= bound; ++p)
                while (rest % p == 0) rest /= p;
            if (rest != 1)
                throw std::invalid_argument("SmoothMultipliers: multiplier has a prime factor > k");
        }
    }
};

/// The scaled shifted polynomial with coefficient a_j * c_j at power j.
inline IntPoly build_F(std::uint64_t n, std::uint64_t k, const SmoothMultipliers& a) {
    if (!(n >= 2 && 1 <= k && k <= n - 1)) throw std::domain_error("build_F: requires 1 <= k <= n-1");
    if (a.bound != k) throw std::invalid_argument("build_F: multiplier bound != k");
    a.validate();
    std::vector<BigInt> c = detail::shifted_coefficients(n, k);
    for (std::uint64_t j = 0; j <= k; ++j) c[j] *= a.values[j];
    return IntPoly(std::move(c));
}

/// P_{n,k}(x-1), computed from the closed-form coefficients.
inline IntPoly shifted_truncated_binomial(std::uint64_t n, std::uint64_t k) {
    return IntPoly(detail::shifted_coefficients(n, k));
}

}  // namespace truncbin
