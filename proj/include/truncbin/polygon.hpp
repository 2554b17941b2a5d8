#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "truncbin/int_poly.hpp"
#include "truncbin/padic_primes.hpp"

namespace truncbin {

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Exact slope num/den, reduced, den > 0.
struct Slope {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Slope of(std::int64_t dy, std::int64_t dx) {
        std::int64_t g = std::gcd(dy < 0 ? -dy : dy, dx);
        if (g == 0) g = 1;
        return Slope{dy / g, dx / g};
    }

    friend bool operator==(const Slope&, const Slope&) = default;
    friend auto operator<=>(const Slope& a, const Slope& b) {
        return a.num * b.den <=> b.num * a.den;
    }
};

struct PolygonEdge {
    std::int64_t length = 0;  // horizontal length, divisible by slope.den
    Slope slope;

    friend bool operator==(const PolygonEdge&, const PolygonEdge&) = default;
};

/// Lower convex hull of the points (deg - i, ord_p(a_i)) over the non-zero
/// coefficients a_i; slopes strictly increase left to right.
struct NewtonPolygon {
    std::uint64_t prime = 0;
    std::vector<LatticePoint> vertices;
    std::vector<PolygonEdge> edges;
};

inline NewtonPolygon newton_polygon(const IntPoly& f, std::uint64_t p) {
    if (!is_prime(p)) throw std::domain_error("newton_polygon: p is not prime");
    if (f.is_zero() || f[0] == 0)
        throw std::domain_error("newton_polygon: requires a_0 and the leading coefficient non-zero");
    const std::size_t deg = *f.degree();

    // Points in ascending x; coefficients that vanish are skipped.
    std::vector<LatticePoint> pts;
    pts.reserve(deg + 1);
    for (std::size_t i = deg + 1; i-- > 0;) {
        const BigInt& a = f[i];
        if (a == 0) continue;
        pts.push_back({static_cast<std::int64_t>(deg - i),
                       static_cast<std::int64_t>(ord_p(a, p).value())});
    }

    // Monotone chain, lower hull only; collinear middle points are dropped
    // so edge slopes are strictly increasing.
    auto cross = [](const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
        return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    };
    std::vector<LatticePoint> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
        hull.push_back(pt);
    }

    NewtonPolygon np;
    np.prime = p;
    np.vertices = std::move(hull);
    for (std::size_t i = 1; i < np.vertices.size(); ++i) {
        const auto& a = np.vertices[i - 1];
        const auto& b = np.vertices[i];
        np.edges.push_back({b.x - a.x, Slope::of(b.y - a.y, b.x - a.x)});
    }
    return np;
}

/// The set of degrees a rational factor of a degree-k polynomial may have, as
/// a bitset over {0..k}. Always contains 0 and k and is closed under d -> k-d.
class DegreeSet {
public:
    explicit DegreeSet(std::size_t k) : k_(k), bits_(k + 1, false) {
        bits_[0] = true;
        bits_[k] = true;
    }

    static DegreeSet full(std::size_t k) {
        DegreeSet s(k);
        s.bits_.assign(k + 1, true);
        return s;
    }

    std::size_t k() const { return k_; }

    bool contains(std::size_t d) const { return d <= k_ && bits_[d]; }

    void insert(std::size_t d) {
        if (d > k_) throw std::domain_error("DegreeSet: member out of range");
        bits_[d] = true;
    }

    /// True when no degree in 1..k-1 remains possible.
    bool excludes_proper_factors() const {
        for (std::size_t d = 1; d < k_; ++d)
            if (bits_[d]) return false;
        return true;
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t d = 0; d <= k_; ++d)
            if (bits_[d]) out.push_back(d);
        return out;
    }

    DegreeSet& intersect_with(const DegreeSet& o) {
        if (o.k_ != k_) throw std::domain_error("DegreeSet: mismatched k");
        for (std::size_t d = 0; d <= k_; ++d) bits_[d] = bits_[d] && o.bits_[d];
        return *this;
    }

    friend bool operator==(const DegreeSet&, const DegreeSet&) = default;

private:
    std::size_t k_;
    std::vector<bool> bits_;
};

/// Subset sums of edge contributions: edge i with horizontal length L and
/// reduced slope denominator m contributes t*m for 0 <= t <= L/m. Any factor
/// over Q splits into p-adic factors whose degrees are multiples of the m's
/// along single edges, so its degree lands in this set.
inline DegreeSet degree_set(const NewtonPolygon& np) {
    if (np.vertices.empty()) throw std::domain_error("degree_set: empty polygon");
    const std::size_t k = static_cast<std::size_t>(np.vertices.back().x);
    DegreeSet s(k);
    std::vector<bool> bits(k + 1, false);
    bits[0] = true;
    for (const auto& e : np.edges) {
        const std::size_t m = static_cast<std::size_t>(e.slope.den);
        const std::size_t steps = static_cast<std::size_t>(e.length) / m;
        for (std::size_t t = 0; t < steps; ++t)
            for (std::size_t d = k + 1; d-- > m;)
                if (bits[d - m]) bits[d] = true;
    }
    for (std::size_t d = 0; d <= k; ++d)
        if (bits[d]) s.insert(d);
    return s;
}

inline DegreeSet intersect_degree_sets(std::span<const DegreeSet> sets) {
    if (sets.empty()) throw std::domain_error("intersect_degree_sets: empty input");
    DegreeSet acc = sets.front();
    for (std::size_t i = 1; i < sets.size(); ++i) acc.intersect_with(sets[i]);
    return acc;
}

/// The integer members of {l/2, l, k/2, (k-l)/2, k-l, (2k-l)/2, (k+l)/2, k}:
/// the degrees a rational factor can have when a window term n-l carries a
/// prime power p^e with gcd(e,l) <= 2 and gcd(e,k-l) <= 2.
inline std::vector<std::uint64_t> theorem_1_3_degree_candidates(std::uint64_t k, std::uint64_t l) {
    if (!(k >= 2 && 1 <= l && l <= k - 1)) throw std::domain_error("theorem_1_3_degree_candidates: requires 1 <= l <= k-1");
    std::vector<std::uint64_t> out;
    auto push = [&out](std::uint64_t num, std::uint64_t den) {
        if (num % den == 0) out.push_back(num / den);
    };
    push(l, 2);
    push(l, 1);
    push(k, 2);
    push(k - l, 2);
    push(k - l, 1);
    push(2 * k - l, 2);
    push(k + l, 2);
    push(k, 1);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace truncbin
