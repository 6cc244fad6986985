// set.hpp — point sets over Z2^n: the Sidon predicate and the triple-coverage
// engine.
//
// A point of Z2^n is an unsigned word with bit i = coordinate i; the group
// operation is XOR. A set S is Sidon iff all pairwise XORs of distinct
// members are pairwise distinct. A point x is covered k times by S if exactly
// k unordered triples {a,b,c} of distinct members satisfy a^b^c == x; the
// maximal Sidon sets are exactly those covering every non-member at least
// once.
//
// Coverage runs fan out over disjoint shards of the triple index space and
// merge with commutative updates (counter add / bitwise OR), so profiles and
// bitmaps are bit-identical for every worker count.
#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sidon/detail/parallel.hpp"

namespace sidon {

using Point = std::uint32_t;

inline constexpr int kMaxDimension = 30; // 2^n 32-bit counters <= 4 GiB

/// Fixed-size bitmap over [0, 2^n). Plain words; concurrent writers go
/// through the *_atomic accessors.
class Bitmap {
public:
    Bitmap() = default;

    explicit Bitmap(std::uint64_t bits)
        : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::uint64_t size() const { return bits_; }

    bool test(std::uint64_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    void set_atomic(std::uint64_t i) {
        std::atomic_ref<std::uint64_t> w(words_[i >> 6]);
        w.fetch_or(std::uint64_t{1} << (i & 63), std::memory_order_relaxed);
    }

    /// Number of set bits.
    std::uint64_t count() const {
        std::uint64_t c = 0;
        for (const std::uint64_t w : words_) {
            c += static_cast<std::uint64_t>(std::popcount(w));
        }
        return c;
    }

    Bitmap& operator|=(const Bitmap& other) {
        assert(bits_ == other.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] |= other.words_[i];
        }
        return *this;
    }

    /// True iff every bit in [0, size()) is set.
    bool all() const {
        if (bits_ == 0) {
            return true;
        }
        const std::size_t full = bits_ / 64;
        for (std::size_t i = 0; i < full; ++i) {
            if (words_[i] != ~std::uint64_t{0}) {
                return false;
            }
        }
        const std::uint64_t tail = bits_ % 64;
        if (tail != 0) {
            const std::uint64_t mask = (std::uint64_t{1} << tail) - 1;
            if ((words_.back() & mask) != mask) {
                return false;
            }
        }
        return true;
    }

    bool operator==(const Bitmap& other) const {
        return bits_ == other.bits_ && words_ == other.words_;
    }

private:
    std::uint64_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// A subset of Z2^n: sorted point list plus a mirroring membership bitmap.
/// `certified` records that is_sidon() has verified the Sidon property;
/// the coverage engine requires it.
struct SidonSet {
    int n = 0;
    std::vector<Point> points;
    Bitmap membership;
    bool certified = false;

    std::size_t size() const { return points.size(); }
    std::uint64_t universe() const { return std::uint64_t{1} << n; }
    bool contains(Point x) const { return membership.test(x); }
};

/// Deduplicated, sorted set from an arbitrary point list. Not yet certified.
inline SidonSet set_from_points(int n, std::vector<Point> pts) {
    if (n < 1 || n > kMaxDimension) {
        throw std::invalid_argument("sidon: dimension must be in [1, 30]");
    }
    const std::uint64_t universe = std::uint64_t{1} << n;
    for (const Point p : pts) {
        if (p >= universe) {
            throw std::invalid_argument("sidon: point " + std::to_string(p) +
                                        " out of range for dimension " +
                                        std::to_string(n));
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    SidonSet s;
    s.n = n;
    s.points = std::move(pts);
    s.membership = Bitmap(universe);
    for (const Point p : s.points) {
        s.membership.set(p);
    }
    return s;
}

/// Two distinct pairs with the same XOR; the exact witness of a Sidon
/// violation. a1^b1 == a2^b2 == value, {a1,b1} != {a2,b2}.
struct SidonWitness {
    Point a1, b1;
    Point a2, b2;
    Point value;
};

/// First Sidon violation in pair-scan order, or nullopt. O(|S|^2) time,
/// 2^n-bit scratch.
inline std::optional<SidonWitness> sidon_violation(const SidonSet& s) {
    Bitmap seen(s.universe());
    const std::size_t cnt = s.points.size();
    for (std::size_t i = 0; i < cnt; ++i) {
        for (std::size_t j = i + 1; j < cnt; ++j) {
            const Point v = s.points[i] ^ s.points[j];
            if (!seen.test(v)) {
                seen.set(v);
                continue;
            }
            // Rescan for the earlier pair with the same XOR.
            for (std::size_t a = 0; a < cnt; ++a) {
                for (std::size_t b = a + 1; b < cnt; ++b) {
                    if (a == i && b == j) {
                        break;
                    }
                    if ((s.points[a] ^ s.points[b]) == v) {
                        return SidonWitness{s.points[a], s.points[b],
                                            s.points[i], s.points[j], v};
                    }
                }
            }
            return SidonWitness{0, 0, s.points[i], s.points[j], v}; // unreachable
        }
    }
    return std::nullopt;
}

/// True iff all pairwise XORs of distinct members are distinct. Certifies the
/// set on success.
inline bool is_sidon(SidonSet& s) {
    if (s.certified) {
        return true;
    }
    if (sidon_violation(s).has_value()) {
        return false;
    }
    s.certified = true;
    return true;
}

inline std::uint64_t choose3(std::uint64_t s) {
    return s < 3 ? 0 : s * (s - 1) / 2 * (s - 2) / 3;
}

namespace detail {

inline void require_certified(const SidonSet& s) {
    if (!s.certified) {
        throw std::logic_error("sidon: coverage requires a certified Sidon set");
    }
}

} // namespace detail

/// Number of unordered triples {a,b,c} of distinct members with a^b^c == x.
/// Pair enumeration: each matching triple is seen through each of its three
/// internal pairs.
inline std::uint64_t cover_count(const SidonSet& s, Point x) {
    detail::require_certified(s);
    assert(x < s.universe());
    std::uint64_t pair_hits = 0;
    const std::size_t cnt = s.points.size();
    for (std::size_t i = 0; i < cnt; ++i) {
        for (std::size_t j = i + 1; j < cnt; ++j) {
            const Point c = x ^ s.points[i] ^ s.points[j];
            if (s.contains(c) && c != s.points[i] && c != s.points[j]) {
                ++pair_hits;
            }
        }
    }
    assert(pair_hits % 3 == 0);
    return pair_hits / 3;
}

/// Exact per-point cover counts over all of Z2^n, plus the count histogram
/// and the min/max over non-members.
struct CoverProfile {
    int n = 0;
    std::vector<std::uint32_t> counts;
    std::map<std::uint32_t, std::uint64_t> histogram; ///< count -> #points
    std::uint32_t min_nonmember_cover = 0;
    std::uint32_t max_nonmember_cover = 0;
    std::uint64_t triple_total = 0; ///< == C(|S|,3)
};

/// Full profile by enumerating all C(|S|,3) triples. While counting, every
/// triple XOR is checked to land outside S — a member hit would contradict
/// the certified Sidon property and aborts.
inline CoverProfile cover_profile(const SidonSet& s, int workers = 0) {
    detail::require_certified(s);
    if (s.n > kMaxDimension) {
        throw std::invalid_argument("sidon: dimension exceeds profile memory cap");
    }
    CoverProfile prof;
    prof.n = s.n;
    prof.counts.assign(s.universe(), 0);

    const Point* pts = s.points.data();
    const std::uint32_t cnt = static_cast<std::uint32_t>(s.points.size());
    std::atomic<bool> member_hit{false};
    const int w = sidon::detail::resolve_workers(workers);

    if (w == 1 || cnt < 64) {
        for (std::uint32_t i = 0; i < cnt; ++i) {
            for (std::uint32_t j = i + 1; j < cnt; ++j) {
                const Point pij = pts[i] ^ pts[j];
                for (std::uint32_t k = j + 1; k < cnt; ++k) {
                    const Point x = pij ^ pts[k];
                    if (s.membership.test(x)) {
                        member_hit.store(true, std::memory_order_relaxed);
                    }
                    ++prof.counts[x];
                }
            }
        }
    } else {
        sidon::detail::parallel_chunks(cnt, w, 4, [&](std::uint32_t b, std::uint32_t e) {
            for (std::uint32_t i = b; i < e; ++i) {
                for (std::uint32_t j = i + 1; j < cnt; ++j) {
                    const Point pij = pts[i] ^ pts[j];
                    for (std::uint32_t k = j + 1; k < cnt; ++k) {
                        const Point x = pij ^ pts[k];
                        if (s.membership.test(x)) {
                            member_hit.store(true, std::memory_order_relaxed);
                        }
                        std::atomic_ref<std::uint32_t> c(prof.counts[x]);
                        c.fetch_add(1, std::memory_order_relaxed);
                    }
                }
            }
        });
    }

    if (member_hit.load()) {
        throw std::logic_error("sidon: triple sum landed inside a certified set");
    }

    std::uint64_t total = 0;
    std::uint32_t mn = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t mx = 0;
    bool any_nonmember = false;
    for (std::uint64_t x = 0; x < prof.counts.size(); ++x) {
        const std::uint32_t c = prof.counts[x];
        total += c;
        ++prof.histogram[c];
        if (!s.membership.test(x)) {
            any_nonmember = true;
            mn = std::min(mn, c);
            mx = std::max(mx, c);
        }
    }
    if (total != choose3(cnt)) {
        throw std::logic_error("sidon: triple count mismatch in profile");
    }
    prof.triple_total = total;
    prof.min_nonmember_cover = any_nonmember ? mn : 0;
    prof.max_nonmember_cover = mx;
    return prof;
}

/// Covered/uncovered bitmap: bit x set iff cover_count(S, x) >= 1. One pass
/// over triples, OR merge.
inline Bitmap covered_bitmap(const SidonSet& s, int workers = 0) {
    detail::require_certified(s);
    Bitmap covered(s.universe());
    const Point* pts = s.points.data();
    const std::uint32_t cnt = static_cast<std::uint32_t>(s.points.size());
    const int w = sidon::detail::resolve_workers(workers);

    if (w == 1 || cnt < 64) {
        for (std::uint32_t i = 0; i < cnt; ++i) {
            for (std::uint32_t j = i + 1; j < cnt; ++j) {
                const Point pij = pts[i] ^ pts[j];
                for (std::uint32_t k = j + 1; k < cnt; ++k) {
                    covered.set(pij ^ pts[k]);
                }
            }
        }
    } else {
        sidon::detail::parallel_chunks(cnt, w, 4, [&](std::uint32_t b, std::uint32_t e) {
            for (std::uint32_t i = b; i < e; ++i) {
                for (std::uint32_t j = i + 1; j < cnt; ++j) {
                    const Point pij = pts[i] ^ pts[j];
                    for (std::uint32_t k = j + 1; k < cnt; ++k) {
                        covered.set_atomic(pij ^ pts[k]);
                    }
                }
            }
        });
    }
    return covered;
}

/// Smallest uncovered non-member, or nullopt when S is maximal.
inline std::optional<Point> first_uncovered(const SidonSet& s, int workers = 0) {
    Bitmap reach = covered_bitmap(s, workers);
    reach |= s.membership;
    if (reach.all()) {
        return std::nullopt;
    }
    for (std::uint64_t x = 0; x < reach.size(); ++x) {
        if (!reach.test(x)) {
            return static_cast<Point>(x);
        }
    }
    return std::nullopt;
}

/// True iff every non-member is covered at least once.
inline bool is_maximal(const SidonSet& s, int workers = 0) {
    Bitmap reach = covered_bitmap(s, workers);
    reach |= s.membership;
    return reach.all();
}

} // namespace sidon
