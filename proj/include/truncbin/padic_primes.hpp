#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "truncbin/bigint.hpp"

namespace truncbin {

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

/// A p-adic valuation: a natural number, or infinity (the valuation of zero).
class Valuation {
public:
    Valuation(std::uint64_t v) : value_(v), infinite_(false) {}

    static Valuation infinity() {
        Valuation v(0);
        v.infinite_ = true;
        return v;
    }

    bool is_infinite() const { return infinite_; }

    std::uint64_t value() const {
        if (infinite_) throw std::domain_error("Valuation: infinite");
        return value_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

private:
    std::uint64_t value_;
    bool infinite_;
};

/// ord_p(a): the largest e with p^e | a; infinity for a = 0.
inline Valuation ord_p(const BigInt& a, std::uint64_t p) {
    if (!is_prime(p)) throw std::domain_error("ord_p: p is not prime");
    if (a == 0) return Valuation::infinity();
    BigInt m = big_abs(a);
    std::uint64_t e = 0;
    BigInt q, r;
    while (true) {
        boost::multiprecision::divide_qr(m, BigInt(p), q, r);
        if (r != 0) break;
        m.swap(q);
        ++e;
    }
    return Valuation(e);
}

namespace detail {

// ord_p for machine words, no primality re-check.
inline std::uint64_t word_ord(std::uint64_t m, std::uint64_t p) {
    std::uint64_t e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return e;
}

}  // namespace detail

/// Ascending primes <= limit (Eratosthenes).
inline std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

/// Full factorization of v by trial division, (prime, exponent) pairs ascending.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t v) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
        if (v % p) continue;
        std::uint64_t e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (v > 1) out.emplace_back(v, 1);
    return out;
}

inline std::uint64_t greatest_prime_factor(std::uint64_t v) {
    if (v <= 1) throw std::domain_error("greatest_prime_factor: requires v > 1");
    return factorize(v).back().first;
}

/// pi(v), the number of primes not exceeding v.
inline std::uint64_t prime_count(std::uint64_t v) {
    return sieve_primes(v).size();
}

/// One prime power p^e exactly dividing a window term: p > k prime,
/// e = ord_p(n - offset) >= 1.
struct LargePrimeHit {
    std::uint64_t offset = 0;        // l, 0 <= l <= k
    std::uint64_t prime = 0;         // p > k
    std::uint64_t multiplicity = 0;  // e, p^e || n-l

    friend bool operator==(const LargePrimeHit&, const LargePrimeHit&) = default;
};

/// All (l, p, e) with 0 <= l <= k, p > k prime and p^e || (n-l), sorted by
/// offset then prime. The window n..n-k is the numerator of the closed-form
/// coefficients, so these primes are exactly the ones with non-flat polygons.
inline std::vector<LargePrimeHit> large_prime_hits(std::uint64_t n, std::uint64_t k) {
    if (!(k >= 2 && n >= k + 2)) throw std::domain_error("large_prime_hits: requires n >= k+2 >= 4");
    std::vector<LargePrimeHit> hits;
    for (std::uint64_t l = 0; l <= k; ++l) {
        for (auto [p, e] : factorize(n - l))
            if (p > k) hits.push_back({l, p, e});
    }
    return hits;
}

/// delta(k) from the smooth-count bound: 2 on [3,6], 1 on [7,16], else 0.
inline std::uint64_t delta(std::uint64_t k) {
    if (k < 3) throw std::domain_error("delta: defined only for k >= 3");
    if (k <= 6) return 2;
    if (k <= 16) return 1;
    return 0;
}

/// mu: the number of offsets f in [0,k) with greatest prime factor of n-f <= k.
inline std::uint64_t smooth_term_count(std::uint64_t n, std::uint64_t k) {
    if (!(k >= 3 && n >= 2 * k)) throw std::domain_error("smooth_term_count: requires n >= 2k >= 6");
    std::uint64_t mu = 0;
    for (std::uint64_t f = 0; f < k; ++f)
        if (greatest_prime_factor(n - f) <= k) ++mu;
    return mu;
}

/// Offsets r in [0,k) such that some prime p > k divides n+r to an odd power.
inline std::vector<std::uint64_t> odd_order_large_prime_terms(std::uint64_t n, std::uint64_t k) {
    if (k < 1 || n < 1) throw std::domain_error("odd_order_large_prime_terms: requires n, k >= 1");
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < k; ++r) {
        for (auto [p, e] : factorize(n + r)) {
            if (p > k && e % 2 == 1) {
                out.push_back(r);
                break;
            }
        }
    }
    return out;
}

}  // namespace truncbin
