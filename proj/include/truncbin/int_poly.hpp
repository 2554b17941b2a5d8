#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "truncbin/bigint.hpp"

namespace truncbin {

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// indexed by power (index 0 is the constant term). The zero polynomial has
/// an empty coefficient vector and no degree; there is no degree -1 anywhere.
class IntPoly {
public:
    IntPoly() = default;

    explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly constant(BigInt c) {
        IntPoly p;
        if (c != 0) p.coeffs_.push_back(std::move(c));
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the trimmed polynomial; nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    const BigInt& operator[](std::size_t i) const {
        static const BigInt zero{};
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }

    std::span<const BigInt> coefficients() const { return coeffs_; }

    const BigInt& leading() const {
        if (coeffs_.empty()) throw std::domain_error("leading(): zero polynomial");
        return coeffs_.back();
    }

    /// Horner evaluation at an integer point.
    BigInt operator()(const BigInt& x) const {
        BigInt acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc *= x;
            acc += coeffs_[i];
        }
        return acc;
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
        return IntPoly(std::move(c));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return IntPoly(std::move(c));
    }

    IntPoly& operator*=(const BigInt& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    /// Positive gcd of all coefficients; 0 for the zero polynomial.
    BigInt content() const {
        BigInt g = 0;
        for (const auto& c : coeffs_) {
            g = big_gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    /// f / content(f), keeping the sign of the leading coefficient.
    IntPoly primitive_part() const {
        if (is_zero()) return {};
        BigInt g = content();
        IntPoly r = *this;
        for (auto& c : r.coeffs_) c /= g;
        return r;
    }

    /// x^deg * f(1/x). Requires a non-zero constant term so the degree is preserved.
    IntPoly reversed() const {
        if (is_zero()) throw std::domain_error("reversed(): zero polynomial");
        std::vector<BigInt> c(coeffs_.rbegin(), coeffs_.rend());
        return IntPoly(std::move(c));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

/// g with g(x) = f(x + t), by repeated synthetic (Horner) shifts. Exact.
inline IntPoly taylor_shift(const IntPoly& f, const BigInt& t) {
    if (f.is_zero() || t == 0) return f;
    std::vector<BigInt> c(f.coefficients().begin(), f.coefficients().end());
    const std::size_t deg = c.size() - 1;
    for (std::size_t i = 0; i < deg; ++i) {
        for (std::size_t j = deg; j-- > i;) {
            if (t == 1)
                c[j] += c[j + 1];
            else if (t == -1)
                c[j] -= c[j + 1];
            else
                c[j] += t * c[j + 1];
        }
    }
    return IntPoly(std::move(c));
}

/// Exact division over the rationals. Returns the integer quotient q with
/// f = g*q when it exists; otherwise the primitive cofactor q0 with
/// pp(f) = pp(g)*q0 (f's content may be non-trivial); nullopt when g does not
/// divide f over Q[x]. Uses pseudo-division, so everything stays integral.
inline std::optional<IntPoly> exact_divide(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
    if (f.is_zero()) return IntPoly{};
    const std::size_t df = *f.degree();
    const std::size_t dg = *g.degree();
    if (df < dg) return std::nullopt;

    const BigInt& lc = g.leading();
    std::vector<BigInt> r(f.coefficients().begin(), f.coefficients().end());
    std::vector<BigInt> q(df - dg + 1);

    // Invariant after the step at position i: lc^(df-i+1) * f = g*q + r, deg r < i.
    for (std::size_t i = df + 1; i-- > dg;) {
        BigInt c = r[i];
        for (std::size_t j = 0; j < i; ++j) r[j] *= lc;
        for (std::size_t j = 0; j < dg; ++j) r[i - dg + j] -= c * g[j];
        r[i] = 0;
        for (auto& qc : q) qc *= lc;
        q[i - dg] += c;
    }
    for (std::size_t j = 0; j < dg; ++j)
        if (r[j] != 0) return std::nullopt;

    BigInt d = 1;  // lc^(df-dg+1)
    for (std::size_t i = 0; i <= df - dg; ++i) d *= lc;

    IntPoly quotient(std::move(q));
    bool integral = true;
    for (const auto& c : quotient.coefficients())
        if (c % d != 0) {
            integral = false;
            break;
        }
    IntPoly result;
    if (integral) {
        std::vector<BigInt> qc(quotient.coefficients().begin(), quotient.coefficients().end());
        for (auto& c : qc) c /= d;
        result = IntPoly(std::move(qc));
        if (!(g * result == f)) throw std::logic_error("exact_divide: re-multiplication failed");
    } else {
        result = quotient.primitive_part();
        if (big_sign(d) < 0) result = -result;
        if (!(g.primitive_part() * result == f.primitive_part()))
            throw std::logic_error("exact_divide: re-multiplication failed");
    }
    return result;
}

}  // namespace truncbin
