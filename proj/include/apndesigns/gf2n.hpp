// gf2n.hpp — exact arithmetic in GF(2^n), 2 <= n <= 16, polynomial basis.
//
// Elements are coefficient vectors packed into a machine word (bit j =
// coefficient of alpha^j), so everything stays in-register up to q = 65536.
// Exponent arithmetic is carried out modulo q-1.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace apnd {

using Elem = std::uint32_t;

constexpr int kMinDegree = 2;
constexpr int kMaxDegree = 16;

// Irreducibility over GF(2) by trial division against every polynomial of
// degree 1..deg/2.
bool is_irreducible(std::uint32_t poly);

// Smallest irreducible polynomial of the given degree when read as a binary
// number (leading bit included).
std::uint32_t smallest_irreducible(int n);

struct FieldCtx {
    int n = 0;
    std::uint32_t modulus = 0;  // irreducible polynomial, bit n set
    std::uint32_t q = 0;        // 2^n

    Elem add(Elem a, Elem b) const { return a ^ b; }

    Elem mul(Elem a, Elem b) const {
        std::uint64_t acc = 0, x = a;
        for (std::uint32_t bb = b; bb; bb >>= 1, x <<= 1)
            if (bb & 1) acc ^= x;
        for (int d = 2 * n - 2; d >= n; --d)
            if ((acc >> d) & 1) acc ^= static_cast<std::uint64_t>(modulus) << (d - n);
        return static_cast<Elem>(acc);
    }

    // a^e for a signed exponent; pow(0,0) = 1 by convention, 0^negative is a
    // domain error. Nonzero bases reduce e mod q-1.
    Elem pow(Elem a, std::int64_t e) const;

    Elem inv(Elem a) const;  // domain error at 0

    // Absolute trace, computed as a parity of masked bits (the trace is
    // GF(2)-linear in the coefficient vector).
    int trace(Elem a) const { return std::popcount(a & trace_mask) & 1; }

    // Index permutation turning the dot-product character into the trace
    // character: bit k of the result is Tr(alpha^k * mu)... assembled from the
    // precomputed rows of the trace bilinear form.
    std::uint32_t trace_dual_index(Elem mu) const {
        std::uint32_t out = 0;
        for (int k = 0; k < n; ++k)
            out |= static_cast<std::uint32_t>(std::popcount(bilinear_rows[k] & mu) & 1) << k;
        return out;
    }

    bool operator==(const FieldCtx& o) const { return n == o.n && modulus == o.modulus; }

    std::uint32_t trace_mask = 0;
    std::array<std::uint32_t, kMaxDegree> bilinear_rows{};  // row k, bit j: Tr(alpha^{j+k})
};

// Field with the smallest irreducible modulus of degree n (deterministic).
FieldCtx make_field(int n);

// Field with an explicit modulus; validated for degree and irreducibility.
FieldCtx make_field(int n, std::uint32_t modulus);

// d with e*d == 1 (mod m), via extended Euclid; throws when gcd(e,m) != 1.
std::uint64_t exp_inverse(std::uint64_t e, std::uint64_t m);

// x^s for every x in GF(q); 0^s = 0 for s > 0.
std::vector<Elem> power_table(const FieldCtx& F, std::uint64_t s);

}  // namespace apnd
