// oracle.hpp — definition-level brute-force references. Deliberately slow
// and independent of the engine in set.hpp: these are the cross-check
// baselines, not tools. Single-threaded by contract.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sidon/set.hpp"

namespace sidon::oracle {

/// Literal four-variable quantifier: no a+b = x+y with distinct operands and
/// {a,b} != {x,y}. Quartic loop, no cleverness.
inline bool naive_is_sidon(int n, const std::vector<Point>& pts) {
    if (n < 1 || n > 16 || pts.size() > (std::size_t{1} << 12)) {
        throw std::invalid_argument("oracle: naive_is_sidon expects n <= 16, |pts| <= 4096");
    }
    for (const Point a : pts) {
        for (const Point b : pts) {
            for (const Point x : pts) {
                for (const Point y : pts) {
                    if (a == b || x == y) {
                        continue;
                    }
                    if ((a ^ b) == (x ^ y) &&
                        !((a == x && b == y) || (a == y && b == x))) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

/// Exact cover count of x by literal enumeration of all unordered triples.
inline std::uint64_t naive_cover_count(int n, const std::vector<Point>& pts,
                                       Point x) {
    if (n < 1 || n > kMaxDimension || pts.size() > (std::size_t{1} << 10)) {
        throw std::invalid_argument("oracle: naive_cover_count expects |pts| <= 1024");
    }
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            for (std::size_t l = j + 1; l < pts.size(); ++l) {
                if ((pts[i] ^ pts[j] ^ pts[l]) == x) {
                    ++k;
                }
            }
        }
    }
    return k;
}

struct MinMaximalResult {
    std::size_t size = 0;
    std::vector<Point> witness;
};

namespace detail {

/// Backtracking state for the minimum-maximal search. Sets are enumerated in
/// canonical ascending order with 0 fixed as the first member (translating
/// any set by one of its members preserves Sidon/maximal and puts 0 inside,
/// shrinking the search by a 2^n factor). A point is addable while keeping
/// the set Sidon iff its current cover count is zero, so one count array
/// drives both the extension rule and the maximality test.
struct MinMaximalSearch {
    std::uint64_t universe;
    std::size_t target = 0;
    std::vector<std::uint32_t> counts;
    std::vector<bool> member;
    std::vector<Point> current;
    std::uint64_t uncovered = 0; ///< #points with count 0 that are not members
    std::vector<Point> found;

    explicit MinMaximalSearch(int n)
        : universe(std::uint64_t{1} << n),
          counts(universe, 0),
          member(universe, false),
          uncovered(universe) {}

    void add(Point x) {
        --uncovered; // x itself: count 0 and about to become a member
        for (std::size_t i = 0; i < current.size(); ++i) {
            const Point xi = x ^ current[i];
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                if (counts[xi ^ current[j]]++ == 0) {
                    --uncovered;
                }
            }
        }
        member[x] = true;
        current.push_back(x);
    }

    void remove() {
        const Point x = current.back();
        current.pop_back();
        member[x] = false;
        for (std::size_t i = 0; i < current.size(); ++i) {
            const Point xi = x ^ current[i];
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                if (--counts[xi ^ current[j]] == 0) {
                    ++uncovered;
                }
            }
        }
        ++uncovered;
    }

    /// Covering capacity left when growing from size s to the target: new
    /// triples C(target,3) - C(s,3), plus target - s points absorbed as
    /// members. Prune when the uncovered pool exceeds it.
    bool capacity_prune() const {
        const std::uint64_t s = current.size();
        const std::uint64_t budget = choose3(target) - choose3(s) + (target - s);
        return uncovered > budget;
    }

    bool dfs(Point next_min) {
        if (current.size() == target) {
            if (uncovered == 0) {
                found = current;
                return true;
            }
            return false;
        }
        if (capacity_prune()) {
            return false;
        }
        for (std::uint64_t x = next_min; x < universe; ++x) {
            if (counts[x] != 0 || member[x]) {
                continue; // covered points can never rejoin a Sidon extension
            }
            add(static_cast<Point>(x));
            if (dfs(static_cast<Point>(x) + 1)) {
                return true;
            }
            remove();
        }
        return false;
    }
};

} // namespace detail

/// Minimum cardinality over all maximal Sidon sets in Z2^n, by exhaustive
/// canonical-order backtracking, with one witness. n <= 5 finishes fast;
/// n = 6 is noticeably slower and callers should gate it.
inline MinMaximalResult min_maximal_size(int n) {
    if (n < 1 || n > 6) {
        throw std::invalid_argument("oracle: min_maximal_size supports n in [1, 6]");
    }
    const std::uint64_t universe = std::uint64_t{1} << n;
    std::size_t k = 1;
    while (choose3(k) + k < universe) {
        ++k; // the covering lower bound C(k,3) + k >= 2^n
    }
    for (;; ++k) {
        detail::MinMaximalSearch search(n);
        search.target = k;
        search.add(0);
        if (search.dfs(1)) {
            return MinMaximalResult{k, search.found};
        }
        if (k > (std::size_t{1} << (n / 2 + 2))) {
            throw std::logic_error("oracle: search exceeded the maximum Sidon size");
        }
    }
}

} // namespace sidon::oracle
