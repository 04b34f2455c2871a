#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>
#include <vector>

#include "romu/smoke.hpp"
#include "romu/spec.hpp"
#include "romu/state.hpp"

// Exhaustive cycle-structure analysis for small-state generators, the
// empirical check of the cycle-length law, and the capacity-vs-period
// study scaffolding.

namespace romu::cycle {

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CycleInfo {
    uint64_t length;
    uint64_t representative;  // encoded state index of one member
};

struct CycleCensus {
    GeneratorSpec spec;
    uint64_t total_states = 0;   // 2^state_bits, all-zeros included
    uint64_t fixed_points = 0;   // cycles of length 1 (always >= 1: all-zeros)
    std::map<uint64_t, uint64_t> cycles;  // length (>= 2) -> count
    std::vector<CycleInfo> cycle_list;    // one entry per cycle of length >= 2

    uint64_t partition_sum() const {
        uint64_t sum = fixed_points;
        for (const auto& [len, count] : cycles) sum += len * count;
        return sum;
    }
};

namespace detail {

inline uint64_t encode_state(const GeneratorSpec& g, const std::array<uint64_t, 4>& w) {
    uint64_t idx = 0;
    for (unsigned i = 0; i < g.state_words(); ++i)
        idx |= (w[i] & g.word_mask()) << (i * g.word_bits);
    return idx;
}

inline std::array<uint64_t, 4> decode_state(const GeneratorSpec& g, uint64_t idx) {
    std::array<uint64_t, 4> w{};
    for (unsigned i = 0; i < g.state_words(); ++i)
        w[i] = (idx >> (i * g.word_bits)) & g.word_mask();
    return w;
}

inline uint64_t step_index(const GeneratorSpec& g, uint64_t idx) {
    auto w = decode_state(g, idx);
    romu::detail::step_forward(g, w);
    return encode_state(g, w);
}

}  // namespace detail

inline constexpr unsigned kCensusMaxStateBits = 32;

// Exact census: one visited bit per state, every state walked once.
inline CycleCensus census(const GeneratorSpec& spec) {
    const unsigned bits = spec.state_bits();
    if (bits > kCensusMaxStateBits)
        throw ResourceLimitError("census: state space over " +
                                 std::to_string(kCensusMaxStateBits) + " bits");
    const uint64_t total = uint64_t{1} << bits;
    std::vector<uint64_t> visited((total + 63) / 64, 0);
    auto is_visited = [&](uint64_t i) { return (visited[i >> 6] >> (i & 63)) & 1; };
    auto mark = [&](uint64_t i) { visited[i >> 6] |= uint64_t{1} << (i & 63); };

    CycleCensus out;
    out.spec = spec;
    out.total_states = total;
    for (uint64_t start = 0; start < total; ++start) {
        if (is_visited(start)) continue;
        uint64_t len = 0;
        uint64_t cur = start;
        do {
            mark(cur);
            cur = detail::step_index(spec, cur);
            ++len;
        } while (cur != start);
        if (len == 1) {
            ++out.fixed_points;
        } else {
            ++out.cycles[len];
            out.cycle_list.push_back({len, start});
        }
    }
    return out;
}

// Exact period of the cycle containing the given state. Dedicated loop
// for the 32-bit mono maps whose full-period walks take 2^32 steps.
inline uint64_t cycle_length_of(const GeneratorSpec& spec, std::span<const uint64_t> start_words) {
    RomuState st = seed(spec, start_words);
    if (spec.variant == Variant::mono && spec.word_bits == 32) {
        const uint32_t m = static_cast<uint32_t>(spec.multiplier);
        const unsigned r = spec.rotations[0];
        const uint32_t start = static_cast<uint32_t>(st.words[0]);
        uint32_t cur = start;
        uint64_t len = 0;
        if (spec.mono_order == MonoOrder::multiply_rotate) {
            do {
                cur = rotl(static_cast<uint32_t>(cur * m), r);
                ++len;
            } while (cur != start);
        } else {
            do {
                cur = rotl(cur, r) * m;
                ++len;
            } while (cur != start);
        }
        return len;
    }
    const auto start_copy = st.words;
    uint64_t len = 0;
    do {
        romu::detail::step_forward(spec, st.words);
        ++len;
    } while (st.words != start_copy);
    return len;
}

struct CycleLawSummary {
    unsigned word_bits = 0;
    size_t multipliers = 0;
    double sup_deviation = 0;      // max |empirical CDF - uniform|
    double mean_cycle_count = 0;   // cycles per permutation, nonzero states
    double log_n = 0;              // harmonic-law reference
};

// Pool censuses of mono maps over random odd multipliers and compare the
// distribution of cycle-length/n against the uniform law.
inline CycleLawSummary empirical_cycle_law(unsigned word_bits, size_t multiplier_count,
                                           unsigned rotation, uint64_t rng_seed = 1) {
    if (word_bits > 16) throw ResourceLimitError("empirical_cycle_law: word_bits over 16");
    if (rotation == 0 || rotation >= word_bits)
        throw std::invalid_argument("rotation out of range");
    std::mt19937_64 rng(rng_seed);
    const double n = static_cast<double>((uint64_t{1} << word_bits) - 1);
    constexpr int kGrid = 256;
    std::vector<double> pooled_cdf(kGrid, 0.0);
    double total_cycles = 0;
    for (size_t mi = 0; mi < multiplier_count; ++mi) {
        const uint64_t mult = (rng() | 1) & mask_of(word_bits);
        const auto spec = make_spec("law_probe", Variant::mono, word_bits, mult, {rotation});
        const CycleCensus c = census(spec);
        // nonzero states only; the all-zeros fixed point is excluded by theory
        std::map<uint64_t, uint64_t> lengths(c.cycles);
        if (c.fixed_points > 1) lengths[1] += c.fixed_points - 1;
        total_cycles += static_cast<double>(c.fixed_points - 1);
        for (const auto& [len, count] : c.cycles) total_cycles += static_cast<double>(count);
        for (int j = 0; j < kGrid; ++j) {
            const double threshold = n * static_cast<double>(j + 1) / kGrid;
            double states = 0;
            for (const auto& [len, count] : lengths)
                if (static_cast<double>(len) <= threshold)
                    states += static_cast<double>(len * count);
            pooled_cdf[j] += states / n;
        }
    }
    CycleLawSummary s;
    s.word_bits = word_bits;
    s.multipliers = multiplier_count;
    s.log_n = std::log(n);
    s.mean_cycle_count = total_cycles / static_cast<double>(multiplier_count);
    for (int j = 0; j < kGrid; ++j) {
        const double t = static_cast<double>(j + 1) / kGrid;
        s.sup_deviation = std::max(s.sup_deviation,
                                   std::fabs(pooled_cdf[j] / static_cast<double>(multiplier_count) - t));
    }
    return s;
}

struct CapacityPoint {
    double log2_period;
    double log2_good_values;
};

// Seed inside cycles of differing lengths and record how many values the
// smoke suite accepts from each, capped at the cycle period.
inline std::vector<CapacityPoint> capacity_study(const GeneratorSpec& spec,
                                                 const smoke::Config& cfg,
                                                 size_t max_points = 12) {
    const CycleCensus c = census(spec);
    std::vector<CycleInfo> cycles = c.cycle_list;
    std::sort(cycles.begin(), cycles.end(),
              [](const CycleInfo& a, const CycleInfo& b) { return a.length < b.length; });
    // thin to at most max_points cycles of distinct lengths, spread over the range
    std::vector<CycleInfo> chosen;
    for (const auto& ci : cycles)
        if (chosen.empty() || ci.length != chosen.back().length) chosen.push_back(ci);
    if (chosen.size() > max_points) {
        std::vector<CycleInfo> thin;
        for (size_t i = 0; i < max_points; ++i)
            thin.push_back(chosen[i * (chosen.size() - 1) / (max_points - 1)]);
        chosen = std::move(thin);
    }
    const unsigned out_bits = spec.output_bits();
    std::vector<CapacityPoint> points;
    for (const auto& ci : chosen) {
        const auto words = detail::decode_state(spec, ci.representative);
        RomuState st = seed(spec, std::span<const uint64_t>(words.data(), spec.state_words()));
        smoke::GeneratorByteSource src(st, ci.length);
        smoke::Config run_cfg = cfg;
        run_cfg.budget_bytes = std::min<uint64_t>(cfg.budget_bytes,
                                                  (ci.length * out_bits + 7) / 8);
        const smoke::Verdict v = smoke::run_smoke(src, run_cfg);
        const uint64_t good_values = std::min<uint64_t>(ci.length, v.bytes_consumed * 8 / out_bits);
        points.push_back({std::log2(static_cast<double>(ci.length)),
                          std::log2(static_cast<double>(std::max<uint64_t>(good_values, 1)))});
    }
    return points;
}

// Plain-text/CSV census report: spec identity header, one row per length.
inline void write_census_csv(std::ostream& out, const CycleCensus& c) {
    out << "# generator=" << c.spec.name << " variant=" << variant_name(c.spec.variant)
        << " word_bits=" << c.spec.word_bits << " multiplier=" << c.spec.multiplier
        << " rotations=";
    for (size_t i = 0; i < c.spec.rotations.size(); ++i)
        out << (i ? "/" : "") << c.spec.rotations[i];
    out << " total_states=" << c.total_states << "\n";
    out << "cycle_length,count\n";
    out << "1," << c.fixed_points << "\n";
    for (const auto& [len, count] : c.cycles) out << len << "," << count << "\n";
}

}  // namespace romu::cycle
