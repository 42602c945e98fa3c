// bitvec.hpp — fixed-width bit vector used for subsets of GF(2^n) and code rows.
#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace apnd {

struct BitVec {
    std::uint32_t nbits = 0;
    std::vector<std::uint64_t> w;

    BitVec() = default;
    explicit BitVec(std::uint32_t bits) : nbits(bits), w((bits + 63) / 64, 0) {}

    bool test(std::uint32_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(std::uint32_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::uint32_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(std::uint32_t i) { w[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::uint32_t count() const {
        std::uint32_t c = 0;
        for (std::uint64_t x : w) c += static_cast<std::uint32_t>(std::popcount(x));
        return c;
    }

    bool any() const {
        for (std::uint64_t x : w)
            if (x) return true;
        return false;
    }

    void clear() {
        for (auto& x : w) x = 0;
    }

    bool operator==(const BitVec&) const = default;

    // Numeric order: bit i carries weight 2^i.
    bool operator<(const BitVec& o) const {
        for (std::size_t i = w.size(); i-- > 0;)
            if (w[i] != o.w[i]) return w[i] < o.w[i];
        return false;
    }

    std::uint64_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ nbits;
        for (std::uint64_t x : w) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return h;
    }

    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < w.size(); ++wi) {
            std::uint64_t x = w[wi];
            while (x) {
                unsigned b = static_cast<unsigned>(std::countr_zero(x));
                f(static_cast<std::uint32_t>(wi * 64 + b));
                x &= x - 1;
            }
        }
    }

    std::vector<std::uint32_t> to_elems() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for_each_set([&](std::uint32_t i) { out.push_back(i); });
        return out;
    }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
        return *this;
    }
    BitVec& operator&=(const BitVec& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
        return *this;
    }
};

// Complement within the declared width.
inline BitVec complement(const BitVec& v) {
    BitVec out = v;
    for (auto& x : out.w) x = ~x;
    std::uint32_t tail = v.nbits & 63;
    if (tail) out.w.back() &= (std::uint64_t{1} << tail) - 1;
    return out;
}

// Image under x -> x ^ c (translation in the additive group).
inline BitVec xor_translate(const BitVec& v, std::uint32_t c) {
    BitVec out(v.nbits);
    v.for_each_set([&](std::uint32_t x) { out.set(x ^ c); });
    return out;
}

struct BitVecHash {
    std::size_t operator()(const BitVec& v) const { return static_cast<std::size_t>(v.hash()); }
};

}  // namespace apnd
