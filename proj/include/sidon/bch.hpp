// bch.hpp — the dense Sidon set {(x, x^3) : x in GF(2^t)} embedded in Z2^(2t),
// the construction behind distance-5 BCH codes.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sidon/gf2.hpp"
#include "sidon/set.hpp"

namespace sidon {

/// Additive embedding of GF(2^t) x GF(2^t) into Z2^(2t): low t bits carry x,
/// high t bits carry y. Fixed for all time — serialized sets depend on it.
inline Point embed(std::uint64_t x, std::uint64_t y, int t) {
    assert(t >= 1 && t <= 15 && x >> t == 0 && y >> t == 0);
    return static_cast<Point>((y << t) | x);
}

/// The 2^(m/2)-point Sidon set {(x, x^3)} in Z2^m, m even. The Sidon property
/// is certified at construction rather than trusted.
inline SidonSet build_bch(int m) {
    if (m < 2 || m > kMaxDimension || m % 2 != 0) {
        throw std::invalid_argument("bch: dimension must be even and in [2, 30]");
    }
    const int t = m / 2;
    const gf2::FieldContext field = gf2::field_new(t);
    std::vector<Point> pts;
    pts.reserve(std::size_t{1} << t);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << t); ++x) {
        pts.push_back(embed(x, gf2::cube(field, x), t));
    }
    SidonSet s = set_from_points(m, std::move(pts));
    if (s.size() != std::size_t{1} << t || !is_sidon(s)) {
        throw std::logic_error("bch: construction failed Sidon certification");
    }
    return s;
}

/// Guaranteed minimum cover count of every non-member of build_bch(m):
/// every non-member is covered A/6 times with A >= 2^t - 2*sqrt(2^t) - 2
/// ordered solutions, and A is a nonnegative multiple of 6, so integer
/// counts force at least max(1, ceil(bound/6)). Meaningful from m >= 6.
inline std::uint64_t coset_coverage_floor(int m) {
    if (m < 4 || m % 2 != 0) {
        throw std::invalid_argument("bch: coverage floor needs even m >= 4");
    }
    const int t = m / 2;
    const double bound =
        (std::pow(2.0, t) - 2.0 * std::pow(2.0, t / 2.0) - 2.0) / 6.0;
    const double up = std::ceil(bound);
    return up < 1.0 ? 1 : static_cast<std::uint64_t>(up);
}

} // namespace sidon
