// ruzsa.hpp — randomized construction of a small maximal Sidon set in Z2^n:
// project a dense Sidon set from the quotient Z2^n/Q, lift it with random
// coset representatives, certify that the lift covers everything outside the
// A-cosets, then greedily extend inside the A-cosets until maximal.
//
// Q is canonized as the span of the low n-m standard basis vectors, so the
// quotient map is a plain right-shift and cosets are contiguous blocks of
// 2^(n-m) consecutive points.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sidon/bch.hpp"
#include "sidon/set.hpp"
#include "sidon/splitmix64.hpp"

namespace sidon {

/// Construction failed at runtime (quotient set not maximal, or no accepted
/// lift within the attempt budget). Distinct from parameter errors, which
/// throw std::invalid_argument.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RuzsaParams {
    int n = 0;                    ///< ambient dimension
    double T = 7.0;               ///< coverage-slack constant
    std::optional<int> m_override; ///< even, 4 <= m <= n when set
    std::uint64_t seed = 0;
    int max_attempts = 32;
};

/// Parameters and certificates of one construction run.
struct RuzsaReport {
    int n = 0;
    int m = 0;
    double T = 0.0;
    std::uint64_t seed = 0;
    int attempts_used = 0;
    std::uint64_t j_min = 0;     ///< certified min coset coverage of A
    std::uint64_t size_a = 0;
    std::uint64_t size_b = 0;
    std::uint64_t size_x = 0;
    std::uint64_t size_s = 0;
    double union_bound = 0.0;    ///< (2^n - |Q||A|) * (1 - 2^(m-n))^j_min
    bool maximal = false;        ///< re-verified from scratch
    std::uint64_t modulus = 0;   ///< GF(2^(m/2)) modulus behind A
    SidonSet set;
};

/// Least even integer strictly greater than (2/3)*log2(T*ln(2)*n*2^n).
inline int compute_m(int n, double T) {
    if (n < 1 || T <= 0.0) {
        throw std::invalid_argument("ruzsa: need n >= 1 and T > 0");
    }
    const double v =
        (2.0 / 3.0) * (std::log2(T * std::numbers::ln2 * n) + n);
    return 2 * (static_cast<int>(std::floor(v / 2.0)) + 1);
}

/// Coset of x in Z2^n/Q, indexed by the high m bits.
inline Point quotient_map(Point x, int n, int m) {
    assert(m >= 0 && m <= n);
    return x >> (n - m);
}

/// Lift A from the quotient into Z2^n: each member a, in ascending order,
/// becomes (a << (n-m)) | offset with offset the low n-m bits of the next
/// generator output. The lift is Sidon for every offset choice (pairwise
/// XORs already differ in the high m bits); this is still asserted.
inline SidonSet sample_lift(const SidonSet& A, int n, SplitMix64& rng) {
    const int m = A.n;
    if (m > n || n > kMaxDimension) {
        throw std::invalid_argument("ruzsa: lift needs A.n <= n <= 30");
    }
    const int shift = n - m;
    const std::uint64_t mask = (std::uint64_t{1} << shift) - 1;
    std::vector<Point> pts;
    pts.reserve(A.size());
    for (const Point a : A.points) {
        const std::uint64_t offset = rng.next() & mask;
        pts.push_back(static_cast<Point>((std::uint64_t{a} << shift) | offset));
    }
    SidonSet B = set_from_points(n, std::move(pts));
    if (B.size() != A.size() || !is_sidon(B)) {
        throw std::logic_error("ruzsa: lift lost the Sidon property");
    }
    return B;
}

/// Certified minimum cover count over quotient points outside A, from a full
/// profile. The construction uses this value, not the asymptotic promise.
inline std::uint64_t certify_coset_coverage(const SidonSet& A, int workers = 0) {
    detail::require_certified(A);
    return cover_profile(A, workers).min_nonmember_cover;
}

namespace detail {

/// All new triples created by adding x to S cover x^a^b over pairs {a,b} of S.
inline void mark_new_triples(Bitmap& covered, const std::vector<Point>& s,
                             Point x) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Point xi = x ^ s[i];
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            covered.set(xi ^ s[j]);
        }
    }
}

} // namespace detail

/// One full construction run. Throws std::invalid_argument when the resolved
/// m violates 4 <= m <= n (even), ConstructionError when the quotient
/// certificate is zero or no lift is accepted within max_attempts.
inline RuzsaReport construct_small_maximal(const RuzsaParams& params,
                                           int workers = 0) {
    const int n = params.n;
    if (n < 1 || n > kMaxDimension) {
        throw std::invalid_argument("ruzsa: dimension must be in [1, 30]");
    }
    if (params.m_override &&
        (*params.m_override % 2 != 0 || *params.m_override < 4 ||
         *params.m_override > n)) {
        throw std::invalid_argument("ruzsa: m override must be even, in [4, n]");
    }
    const int m = params.m_override ? *params.m_override : compute_m(n, params.T);
    if (m > n) {
        throw std::invalid_argument(
            "ruzsa: n too small for asymptotic construction (needs m = " +
            std::to_string(m) + " <= n)");
    }
    if (m < 4) {
        throw std::invalid_argument("ruzsa: resolved m below 4");
    }

    RuzsaReport report;
    report.n = n;
    report.m = m;
    report.T = params.T;
    report.seed = params.seed;
    report.modulus = gf2::field_new(m / 2).modulus;

    // The dense quotient set and its runtime coverage certificate.
    const SidonSet A = build_bch(m);
    report.size_a = A.size();
    report.j_min = certify_coset_coverage(A, workers);
    if (report.j_min == 0) {
        throw ConstructionError("ruzsa: quotient set is not maximal (j_min = 0)");
    }

    const int shift = n - m;
    const std::uint64_t universe = std::uint64_t{1} << n;
    report.union_bound =
        (static_cast<double>(universe) -
         std::ldexp(static_cast<double>(A.size()), shift)) *
        std::pow(1.0 - std::ldexp(1.0, m - n), static_cast<double>(report.j_min));

    // Random lifts until one covers every point outside the A-cosets.
    SplitMix64 rng(params.seed);
    SidonSet b0;
    Bitmap covered;
    int attempt = 0;
    for (; attempt < params.max_attempts; ++attempt) {
        SidonSet B = sample_lift(A, n, rng);
        Bitmap cov = covered_bitmap(B, workers);
        bool accept = true;
        for (std::uint64_t x = 0; x < universe && accept; ++x) {
            if (!A.contains(static_cast<Point>(x >> shift)) && !cov.test(x)) {
                accept = false;
            }
        }
        if (accept) {
            b0 = std::move(B);
            covered = std::move(cov);
            break;
        }
    }
    if (attempt == params.max_attempts) {
        throw ConstructionError("ruzsa: no accepted lift in " +
                                std::to_string(params.max_attempts) +
                                " attempts");
    }
    report.attempts_used = attempt + 1;
    report.size_b = b0.size();

    // Greedy extension inside the A-cosets: ascending scans, adding every
    // point still uncovered, until a full pass adds nothing. Adding an
    // uncovered point keeps the set Sidon; coverage only grows.
    std::vector<Point> s_points = b0.points;
    Bitmap member = b0.membership;
    std::vector<Point> extension;
    for (bool added = true; added;) {
        added = false;
        for (const Point a : A.points) {
            const std::uint64_t base = std::uint64_t{a} << shift;
            for (std::uint64_t off = 0; off < (std::uint64_t{1} << shift); ++off) {
                const Point x = static_cast<Point>(base | off);
                if (member.test(x) || covered.test(x)) {
                    continue;
                }
                detail::mark_new_triples(covered, s_points, x);
                s_points.push_back(x);
                member.set(x);
                extension.push_back(x);
                added = true;
            }
        }
    }
    report.size_x = extension.size();

    // Pigeonhole diagnostic: the offsets q = x ^ b per extension point are
    // pairwise-distinct members of Q, bounding |X| by |Q|.
    {
        std::vector<std::uint64_t> qs;
        for (const Point x : extension) {
            const Point a = quotient_map(x, n, m);
            const auto it = std::lower_bound(b0.points.begin(), b0.points.end(),
                                             static_cast<Point>(std::uint64_t{a} << shift));
            if (it == b0.points.end() || quotient_map(*it, n, m) != a) {
                throw std::logic_error("ruzsa: extension point outside A-cosets");
            }
            qs.push_back(std::uint64_t{x} ^ *it);
        }
        std::sort(qs.begin(), qs.end());
        if (std::adjacent_find(qs.begin(), qs.end()) != qs.end() ||
            extension.size() > (std::uint64_t{1} << shift)) {
            throw std::logic_error("ruzsa: extension exceeded the coset bound");
        }
    }

    // Independent re-verification of the final set.
    report.set = set_from_points(n, std::move(s_points));
    report.size_s = report.set.size();
    if (!is_sidon(report.set)) {
        throw std::logic_error("ruzsa: final set failed Sidon re-verification");
    }
    report.maximal = is_maximal(report.set, workers);
    return report;
}

} // namespace sidon
