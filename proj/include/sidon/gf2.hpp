// gf2.hpp — arithmetic in GF(2^m), polynomial basis over a fixed
// irreducible modulus. Elements are plain machine words (bit i = coefficient
// of x^i); every operation takes the field context explicitly.
#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>

namespace sidon::gf2 {

/// A finite field GF(2^m): the degree and the irreducible modulus polynomial.
/// Immutable after creation.
struct FieldContext {
    int degree = 0;            ///< m, 1 <= m <= 32
    std::uint64_t modulus = 0; ///< bit i = coefficient of x^i; bit m always set
};

inline constexpr int kMaxDegree = 32;

// Canonical modulus per degree: the numerically smallest irreducible
// polynomial of degree m over GF(2). Index [m-1]. Validated at first use by
// the Rabin irreducibility test below.
inline constexpr std::uint64_t kCanonicalModulus[kMaxDegree] = {
    0x2,       0x7,       0xb,        0x13,      0x25,      0x43,
    0x83,      0x11b,     0x203,      0x409,     0x805,     0x1009,
    0x201b,    0x4021,    0x8003,     0x1002b,   0x20009,   0x40009,
    0x80027,   0x100009,  0x200005,   0x400003,  0x800021,  0x100001b,
    0x2000009, 0x400001b, 0x8000027,  0x10000003, 0x20000005, 0x40000003,
    0x80000009, 0x10000008d};

namespace poly {

/// Degree of a GF(2)[x] polynomial given as a bitmask; -1 for the zero poly.
inline int degree(std::uint64_t p) { return std::bit_width(p) - 1; }

inline std::uint64_t mod(std::uint64_t a, std::uint64_t f) {
    const int df = degree(f);
    for (int da = degree(a); da >= df; da = degree(a)) {
        a ^= f << (da - df);
    }
    return a;
}

/// Carry-less product of a and b reduced mod f. deg a, deg b < deg f <= 32,
/// so the unreduced product stays inside 64 bits.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
    std::uint64_t r = 0;
    while (b != 0) {
        if (b & 1) {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
    }
    return mod(r, f);
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        const std::uint64_t t = mod(a, b);
        a = b;
        b = t;
    }
    return a;
}

/// x^(2^k) mod f by repeated squaring.
inline std::uint64_t x_pow2k_mod(int k, std::uint64_t f) {
    std::uint64_t t = mod(0b10, f);
    for (int i = 0; i < k; ++i) {
        t = mulmod(t, t, f);
    }
    return t;
}

} // namespace poly

/// Rabin test: f of degree m is irreducible iff x^(2^m) == x (mod f) and
/// gcd(x^(2^(m/q)) - x mod f, f) = 1 for every prime q dividing m.
inline bool is_irreducible(std::uint64_t f) {
    const int m = poly::degree(f);
    if (m < 1) {
        return false;
    }
    if (poly::x_pow2k_mod(m, f) != poly::mod(0b10, f)) {
        return false;
    }
    int rem = m;
    for (int q = 2; q * q <= rem; ++q) {
        if (rem % q != 0) {
            continue;
        }
        while (rem % q == 0) {
            rem /= q;
        }
        const std::uint64_t h = poly::x_pow2k_mod(m / q, f) ^ poly::mod(0b10, f);
        if (poly::gcd(h == 0 ? f : h, f) != 1) {
            return false;
        }
    }
    if (rem > 1) {
        const std::uint64_t h = poly::x_pow2k_mod(m / rem, f) ^ poly::mod(0b10, f);
        if (poly::gcd(h == 0 ? f : h, f) != 1) {
            return false;
        }
    }
    return true;
}

/// Field with the canonical modulus for degree m. Deterministic across runs;
/// the table entry is re-validated (degree + irreducibility) on every call.
inline FieldContext field_new(int m) {
    if (m < 1 || m > kMaxDegree) {
        throw std::invalid_argument("gf2: degree must be in [1, 32]");
    }
    const std::uint64_t f = kCanonicalModulus[m - 1];
    if (poly::degree(f) != m || !is_irreducible(f)) {
        throw std::logic_error("gf2: canonical modulus table is corrupt");
    }
    return FieldContext{m, f};
}

inline std::uint64_t add(const FieldContext&, std::uint64_t a, std::uint64_t b) {
    return a ^ b;
}

inline std::uint64_t mul(const FieldContext& f, std::uint64_t a, std::uint64_t b) {
    assert(a >> f.degree == 0 && b >> f.degree == 0);
    const std::uint64_t high = std::uint64_t{1} << f.degree;
    std::uint64_t r = 0;
    while (a != 0) {
        if (a & 1) {
            r ^= b;
        }
        a >>= 1;
        b <<= 1;
        if (b & high) {
            b ^= f.modulus;
        }
    }
    return r;
}

inline std::uint64_t cube(const FieldContext& f, std::uint64_t a) {
    return mul(f, a, mul(f, a, a));
}

/// Square-and-multiply; pow(a, 0) == 1, pow(a, 3) == cube(a).
inline std::uint64_t pow(const FieldContext& f, std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    std::uint64_t base = a;
    while (e != 0) {
        if (e & 1) {
            r = mul(f, r, base);
        }
        base = mul(f, base, base);
        e >>= 1;
    }
    return r;
}

} // namespace sidon::gf2
