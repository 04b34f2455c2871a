#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>

#include "romu/bits.hpp"
#include "romu/spec.hpp"

// Generic state container and the forward/backward state transitions for
// every variant at any word width. The typed engines in generators.hpp are
// the fast path for the full-size variants; this interpreter is what the
// census, scaling and search machinery run on.

namespace romu {

struct ZeroStateError : std::invalid_argument {
    ZeroStateError() : std::invalid_argument("zero state: the all-zeros state is a fixed point") {}
};

struct RomuState {
    GeneratorSpec spec;
    // Words in declaration order: quad (w,x,y,z), trio (x,y,z), duo (x,y),
    // mono (single word). Unused words stay 0.
    std::array<uint64_t, 4> words{};

    bool all_zero() const {
        uint64_t acc = 0;
        for (unsigned i = 0; i < spec.state_words(); ++i) acc |= words[i];
        return acc == 0;
    }
};

// Any not-all-zeros word set is a valid seed; the all-zeros state is the
// excluded fixed point.
inline RomuState seed(const GeneratorSpec& spec, std::span<const uint64_t> words) {
    if (words.size() != spec.state_words())
        throw std::invalid_argument("seed: wrong number of state words");
    RomuState st;
    st.spec = spec;
    const uint64_t m = spec.word_mask();
    for (unsigned i = 0; i < spec.state_words(); ++i) st.words[i] = words[i] & m;
    if (st.all_zero()) throw ZeroStateError{};
    return st;
}

// RomuMono32 init: 29 seed bits added to the base of the largest
// seed-block, so the state always lands inside the longest cycle.
inline RomuState seed_mono32(uint32_t seed_value) {
    RomuState st;
    st.spec = find_spec("romumono32");
    st.words[0] = (seed_value & kMono32SeedMask) + kMono32SeedBase;
    return st;
}

namespace detail {

// Forward step on raw words. Returns the pre-update output word
// (full word for multi-word variants; output_rule applied by the caller).
inline uint64_t step_forward(const GeneratorSpec& g, std::array<uint64_t, 4>& s) {
    const unsigned wb = g.word_bits;
    const uint64_t M = g.multiplier;
    switch (g.variant) {
        case Variant::quad: {
            const uint64_t wp = s[0], xp = s[1], yp = s[2], zp = s[3];
            s[0] = mul_w(M, zp, wb);
            s[1] = add_w(zp, rotl_w(wp, g.rotations[0], wb), wb);
            s[2] = sub_w(yp, xp, wb);
            s[3] = rotl_w(add_w(yp, wp, wb), g.rotations[1], wb);
            return xp;
        }
        case Variant::trio: {
            const uint64_t xp = s[0], yp = s[1], zp = s[2];
            s[0] = mul_w(M, zp, wb);
            s[1] = rotl_w(sub_w(yp, xp, wb), g.rotations[0], wb);
            s[2] = rotl_w(sub_w(zp, yp, wb), g.rotations[1], wb);
            return xp;
        }
        case Variant::duo: {
            const uint64_t xp = s[0], yp = s[1];
            s[0] = mul_w(M, yp, wb);
            s[1] = sub_w(add_w(rotl_w(yp, g.rotations[0], wb),
                               rotl_w(yp, g.rotations[1], wb), wb),
                         xp, wb);
            return xp;
        }
        case Variant::duojr: {
            const uint64_t xp = s[0], yp = s[1];
            s[0] = mul_w(M, yp, wb);
            s[1] = rotl_w(sub_w(yp, xp, wb), g.rotations[0], wb);
            return xp;
        }
        case Variant::mono: {
            const uint64_t sp = s[0];
            if (g.mono_order == MonoOrder::multiply_rotate)
                s[0] = rotl_w(mul_w(sp, M, wb), g.rotations[0], wb);
            else
                s[0] = mul_w(rotl_w(sp, g.rotations[0], wb), M, wb);
            return sp;
        }
    }
    return 0;
}

// Exact inverse of step_forward: reverse dataflow order, right rotations,
// multiply by the modular inverse of the multiplier.
inline void step_backward(const GeneratorSpec& g, std::array<uint64_t, 4>& s) {
    const unsigned wb = g.word_bits;
    const uint64_t Minv = mod_inverse(g.multiplier, wb);
    switch (g.variant) {
        case Variant::quad: {
            const uint64_t zp = mul_w(s[0], Minv, wb);
            const uint64_t wp = rotr_w(sub_w(s[1], zp, wb), g.rotations[0], wb);
            const uint64_t yp = sub_w(rotr_w(s[3], g.rotations[1], wb), wp, wb);
            const uint64_t xp = sub_w(yp, s[2], wb);
            s[0] = wp; s[1] = xp; s[2] = yp; s[3] = zp;
            break;
        }
        case Variant::trio: {
            const uint64_t zp = mul_w(s[0], Minv, wb);
            const uint64_t yp = sub_w(zp, rotr_w(s[2], g.rotations[1], wb), wb);
            const uint64_t xp = sub_w(yp, rotr_w(s[1], g.rotations[0], wb), wb);
            s[0] = xp; s[1] = yp; s[2] = zp;
            break;
        }
        case Variant::duo: {
            const uint64_t yp = mul_w(s[0], Minv, wb);
            const uint64_t xp = sub_w(add_w(rotl_w(yp, g.rotations[0], wb),
                                            rotl_w(yp, g.rotations[1], wb), wb),
                                      s[1], wb);
            s[0] = xp; s[1] = yp;
            break;
        }
        case Variant::duojr: {
            const uint64_t yp = mul_w(s[0], Minv, wb);
            const uint64_t xp = sub_w(yp, rotr_w(s[1], g.rotations[0], wb), wb);
            s[0] = xp; s[1] = yp;
            break;
        }
        case Variant::mono: {
            if (g.mono_order == MonoOrder::multiply_rotate)
                s[0] = mul_w(rotr_w(s[0], g.rotations[0], wb), Minv, wb);
            else
                s[0] = rotr_w(mul_w(s[0], Minv, wb), g.rotations[0], wb);
            break;
        }
    }
}

inline uint64_t apply_output_rule(const GeneratorSpec& g, uint64_t word) {
    switch (g.output_rule) {
        case OutputRule::full_word: return word & g.word_mask();
        case OutputRule::high_half: return (word & g.word_mask()) >> (g.word_bits / 2);
        case OutputRule::low_half: return word & mask_of(g.word_bits / 2);
    }
    return word;
}

}  // namespace detail

struct GeneratorOutput {
    uint64_t value;
    unsigned bits;
};

// Advance one step; the returned value is taken from the state *before*
// the update.
inline GeneratorOutput next(RomuState& st) {
    const uint64_t pre = detail::step_forward(st.spec, st.words);
    return {detail::apply_output_rule(st.spec, pre), st.spec.output_bits()};
}

inline void prev(RomuState& st) { detail::step_backward(st.spec, st.words); }

// Deterministic stream derivation: expand (entropy, stream_index) into
// state words with splitmix64 rounds. Distinct indices give distinct
// states; an all-zero expansion falls back to word 1.
inline RomuState make_stream(const GeneratorSpec& spec, uint64_t stream_index,
                             uint64_t entropy) {
    uint64_t mix = entropy;
    (void)splitmix64(mix);
    mix ^= stream_index * 0x9E3779B97F4A7C15u;
    RomuState st;
    st.spec = spec;
    const uint64_t m = spec.word_mask();
    for (unsigned i = 0; i < spec.state_words(); ++i) st.words[i] = splitmix64(mix) & m;
    if (st.all_zero()) st.words[0] = 1;
    return st;
}

}  // namespace romu
