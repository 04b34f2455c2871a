#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "romu/spec.hpp"

// Scaled-down (mini) variants and the capacity-extrapolation rule.
// Rotations scale proportionally with the word width; multipliers do not
// scale and must be supplied (defaults below come from the multiplier
// heuristics, frozen as fixtures).

namespace romu {

// Default mini multipliers per word width. Each passes the multiplier
// heuristics (low nibble 1011, balanced Hamming weight, no long runs).
// 10-bit entry is the dot-plot generator's 715; 32-bit is the published
// RomuQuad32/Trio32 multiplier.
inline uint64_t default_mini_multiplier(unsigned word_bits) {
    switch (word_bits) {
        case 4: return 0xBu;
        case 8: return 0x3Bu;
        case 10: return 715u;
        case 12: return 0xACBu;
        case 16: return 0x9A4Bu;
        case 32: return kMultiplier32;
        case 64: return kMultiplier64;
        default:
            throw std::invalid_argument("no shipped mini multiplier for this word width");
    }
}

namespace detail {

// Proportional rounding, half-up, clamped into the valid range.
inline unsigned scale_rotation(unsigned r_full, unsigned word_bits) {
    unsigned r = static_cast<unsigned>((uint64_t{r_full} * word_bits + 32) / 64);
    if (r < 1) r = 1;
    if (r >= word_bits) r = word_bits - 1;
    return r;
}

}  // namespace detail

// Derive a mini variant of `full` at the given word width. Where the
// published 32-bit generators break a rounding tie (RomuQuad's 19 -> 9,
// not 10), the published rotations win.
inline GeneratorSpec scale_spec(const GeneratorSpec& full, unsigned word_bits,
                                uint64_t multiplier) {
    if ((multiplier & 1) == 0) throw std::invalid_argument("multiplier must be odd");
    if (word_bits < 2 || word_bits > 64)
        throw std::invalid_argument("word_bits must be in 2..64");
    if (word_bits == 64) {
        GeneratorSpec same = full;
        same.multiplier = multiplier & mask_of(64);
        return same;
    }
    std::vector<unsigned> rots;
    if (full.variant == Variant::quad && word_bits == 32) {
        rots = {26, 9};
    } else if (full.variant == Variant::trio && word_bits == 32) {
        rots = {6, 22};
    } else {
        for (unsigned r : full.rotations) rots.push_back(detail::scale_rotation(r, word_bits));
    }
    std::string name = full.name + "_w" + std::to_string(word_bits);
    OutputRule rule = full.output_rule;
    if (rule != OutputRule::full_word && word_bits % 2 != 0) rule = OutputRule::full_word;
    return make_spec(std::move(name), full.variant, word_bits, multiplier & mask_of(word_bits),
                     std::move(rots), rule, full.mono_order);
}

inline GeneratorSpec scale_spec(const GeneratorSpec& full, unsigned word_bits) {
    return scale_spec(full, word_bits, default_mini_multiplier(word_bits));
}

struct CapacityEstimate {
    double tested_log2_capacity;
    int doublings;
    double estimated_log2_capacity;
};

// One doubling of the state size multiplies the log2 capacity by 1.4
// (the conservative end of the observed 1.4-1.7 range).
inline constexpr double kCapacityDoublingFactor = 1.4;

inline CapacityEstimate extrapolate_capacity(double tested_log2, int doublings) {
    if (!(tested_log2 > 0)) throw std::invalid_argument("tested capacity must be positive");
    if (doublings < 0) throw std::invalid_argument("doublings must be >= 0");
    return {tested_log2, doublings,
            tested_log2 * std::pow(kCapacityDoublingFactor, doublings)};
}

}  // namespace romu
