#pragma once

#include <bit>
#include <concepts>
#include <cstdint>

// Word-level helpers shared by every generator: rotations, wrapping
// arithmetic on sub-64-bit words, and the modular inverse of an odd
// multiplier (all arithmetic is in Z/2^w).

namespace romu {

constexpr uint64_t mask_of(unsigned bits) {
    return bits >= 64 ? ~uint64_t{0} : (uint64_t{1} << bits) - 1;
}

// Full-width rotate for native word types.
template <std::unsigned_integral T>
constexpr T rotl(T d, unsigned r) {
    return std::rotl(d, static_cast<int>(r));
}

template <std::unsigned_integral T>
constexpr T rotr(T d, unsigned r) {
    return std::rotr(d, static_cast<int>(r));
}

// Rotate within the low `width` bits of a 64-bit carrier. 0 < r < width.
constexpr uint64_t rotl_w(uint64_t d, unsigned r, unsigned width) {
    const uint64_t m = mask_of(width);
    d &= m;
    return ((d << r) | (d >> (width - r))) & m;
}

constexpr uint64_t rotr_w(uint64_t d, unsigned r, unsigned width) {
    return rotl_w(d, width - r, width);
}

constexpr uint64_t mul_w(uint64_t a, uint64_t b, unsigned width) {
    return (a * b) & mask_of(width);
}

constexpr uint64_t add_w(uint64_t a, uint64_t b, unsigned width) {
    return (a + b) & mask_of(width);
}

constexpr uint64_t sub_w(uint64_t a, uint64_t b, unsigned width) {
    return (a - b) & mask_of(width);
}

// Inverse of an odd m modulo 2^width, by Newton iteration:
// inv' = inv * (2 - m * inv) doubles the number of correct low bits.
constexpr uint64_t mod_inverse(uint64_t m, unsigned width = 64) {
    uint64_t inv = m;  // correct to 5 bits for odd m
    for (int i = 0; i < 5; ++i) inv *= 2 - m * inv;
    return inv & mask_of(width);
}

// splitmix64 step, the usual seed-expansion mix.
inline uint64_t splitmix64(uint64_t& s) {
    uint64_t z = (s += 0x9E3779B97F4A7C15u);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9u;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBu;
    return z ^ (z >> 31);
}

}  // namespace romu
