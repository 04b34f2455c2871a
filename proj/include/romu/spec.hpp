#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "romu/bits.hpp"

// Generator descriptions. A GeneratorSpec pins down one rotate-multiply
// variant completely: word width, number of state words, multiplier,
// rotation counts and which bits of the pre-update state are returned.
// All shipped full-size variants live in the registry at the bottom.

namespace romu {

enum class Variant { mono, duo, duojr, trio, quad };

// Order of the two operations in the single-word (mono) step.
enum class MonoOrder { rotate_multiply, multiply_rotate };

enum class OutputRule { full_word, high_half, low_half };

constexpr unsigned state_words_of(Variant v) {
    switch (v) {
        case Variant::mono: return 1;
        case Variant::duo:
        case Variant::duojr: return 2;
        case Variant::trio: return 3;
        case Variant::quad: return 4;
    }
    return 0;
}

constexpr unsigned rotation_count_of(Variant v) {
    switch (v) {
        case Variant::mono:
        case Variant::duojr: return 1;
        case Variant::duo:
        case Variant::trio:
        case Variant::quad: return 2;
    }
    return 0;
}

std::string_view variant_name(Variant v);
Variant variant_from_name(std::string_view name);

struct GeneratorSpec {
    std::string name;
    Variant variant = Variant::trio;
    unsigned word_bits = 64;
    uint64_t multiplier = 0;
    std::vector<unsigned> rotations;
    OutputRule output_rule = OutputRule::full_word;
    MonoOrder mono_order = MonoOrder::multiply_rotate;

    unsigned state_words() const { return state_words_of(variant); }
    unsigned state_bits() const { return state_words() * word_bits; }
    uint64_t word_mask() const { return mask_of(word_bits); }

    unsigned output_bits() const {
        switch (output_rule) {
            case OutputRule::full_word: return word_bits;
            case OutputRule::high_half:
            case OutputRule::low_half: return word_bits / 2;
        }
        return word_bits;
    }
};

// Validated constructor; every invariant is enforced here so the step
// functions never have to check anything.
inline GeneratorSpec make_spec(std::string name, Variant variant, unsigned word_bits,
                               uint64_t multiplier, std::vector<unsigned> rotations,
                               OutputRule output_rule = OutputRule::full_word,
                               MonoOrder mono_order = MonoOrder::multiply_rotate) {
    if (word_bits < 2 || word_bits > 64)
        throw std::invalid_argument("word_bits must be in 2..64");
    if ((multiplier & 1) == 0)
        throw std::invalid_argument("multiplier must be odd");
    if ((multiplier & ~mask_of(word_bits)) != 0)
        throw std::invalid_argument("multiplier does not fit word_bits");
    if (rotations.size() != rotation_count_of(variant))
        throw std::invalid_argument("wrong number of rotations for variant");
    for (unsigned r : rotations)
        if (r == 0 || r >= word_bits)
            throw std::invalid_argument("rotation must satisfy 0 < r < word_bits");
    if (output_rule != OutputRule::full_word && word_bits % 2 != 0)
        throw std::invalid_argument("half-word output needs an even word width");
    GeneratorSpec s;
    s.name = std::move(name);
    s.variant = variant;
    s.word_bits = word_bits;
    s.multiplier = multiplier;
    s.rotations = std::move(rotations);
    s.output_rule = output_rule;
    s.mono_order = mono_order;
    return s;
}

// The multiplier shared by all full-size 64-bit variants.
inline constexpr uint64_t kMultiplier64 = 15241094284759029579u;
// The multiplier shared by RomuQuad32 and RomuTrio32.
inline constexpr uint32_t kMultiplier32 = 3323815723u;
// RomuMono32's multiplier and rotation (d-value 47, 29 seed bits).
inline constexpr uint32_t kMono32Multiplier = 3611795771u;
inline constexpr unsigned kMono32Rotation = 12;
inline constexpr uint32_t kMono32SeedBase = 1156979152u;
inline constexpr uint32_t kMono32SeedMask = 0x1fffffffu;

const std::vector<GeneratorSpec>& shipped_specs();
const GeneratorSpec& find_spec(std::string_view name);
std::vector<std::string> shipped_names();

inline std::string_view variant_name(Variant v) {
    switch (v) {
        case Variant::mono: return "mono";
        case Variant::duo: return "duo";
        case Variant::duojr: return "duojr";
        case Variant::trio: return "trio";
        case Variant::quad: return "quad";
    }
    return "?";
}

inline Variant variant_from_name(std::string_view name) {
    if (name == "mono") return Variant::mono;
    if (name == "duo") return Variant::duo;
    if (name == "duojr") return Variant::duojr;
    if (name == "trio") return Variant::trio;
    if (name == "quad") return Variant::quad;
    throw std::invalid_argument("unknown variant: " + std::string(name));
}

inline const std::vector<GeneratorSpec>& shipped_specs() {
    static const std::vector<GeneratorSpec> specs = [] {
        std::vector<GeneratorSpec> v;
        v.push_back(make_spec("romuquad", Variant::quad, 64, kMultiplier64, {52, 19}));
        v.push_back(make_spec("romutrio", Variant::trio, 64, kMultiplier64, {12, 44}));
        v.push_back(make_spec("romuduo", Variant::duo, 64, kMultiplier64, {36, 15}));
        v.push_back(make_spec("romuduojr", Variant::duojr, 64, kMultiplier64, {27}));
        v.push_back(make_spec("romuquad32", Variant::quad, 32, kMultiplier32, {26, 9}));
        v.push_back(make_spec("romutrio32", Variant::trio, 32, kMultiplier32, {6, 22}));
        v.push_back(make_spec("romumono32", Variant::mono, 32, kMono32Multiplier,
                              {kMono32Rotation}, OutputRule::high_half,
                              MonoOrder::multiply_rotate));
        // The two-instruction 64-bit generator from which the family grew.
        // Its 64-bit state is small by the paper's own standards; shipped for
        // completeness, not recommended for real work.
        v.push_back(make_spec("romumono", Variant::mono, 64, kMultiplier64, {32},
                              OutputRule::low_half, MonoOrder::rotate_multiply));
        return v;
    }();
    return specs;
}

inline const GeneratorSpec& find_spec(std::string_view name) {
    for (const auto& s : shipped_specs())
        if (s.name == name) return s;
    throw std::invalid_argument("unknown generator: " + std::string(name));
}

inline std::vector<std::string> shipped_names() {
    std::vector<std::string> names;
    for (const auto& s : shipped_specs()) names.push_back(s.name);
    return names;
}

}  // namespace romu
