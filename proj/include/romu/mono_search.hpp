#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "romu/bits.hpp"
#include "romu/spec.hpp"

// RomuMono32 constant tooling: d-value walks, seed-block discovery,
// multiplier heuristics, the rotation-neighborhood scoring harness, and
// the published multiplier-rotation table with its verification report.

namespace romu::mono_search {

struct MonoPair {
    uint32_t multiplier;
    unsigned rotation;
    MonoOrder order;
};

inline MonoPair make_pair(uint32_t multiplier, unsigned rotation, MonoOrder order) {
    if ((multiplier & 1) == 0) throw std::invalid_argument("multiplier must be odd");
    if (rotation < 1 || rotation > 31) throw std::invalid_argument("rotation must be in 1..31");
    return {multiplier, rotation, order};
}

inline uint32_t mono_step(uint32_t s, const MonoPair& p) {
    return p.order == MonoOrder::multiply_rotate ? rotl(s * p.multiplier, p.rotation)
                                                 : rotl(s, p.rotation) * p.multiplier;
}

struct DValue {
    uint64_t period;
    int64_t d;  // 2^32 - period
};

namespace detail {

inline uint64_t walk_period(const MonoPair& p, uint32_t start) {
    uint32_t cur = start;
    uint64_t len = 0;
    if (p.order == MonoOrder::multiply_rotate) {
        const uint32_t m = p.multiplier;
        const unsigned r = p.rotation;
        do {
            cur = rotl(static_cast<uint32_t>(cur * m), r);
            ++len;
        } while (cur != start);
    } else {
        const uint32_t m = p.multiplier;
        const unsigned r = p.rotation;
        do {
            cur = rotl(cur, r) * m;
            ++len;
        } while (cur != start);
    }
    return len;
}

// 2^32-bit membership/visited set (512 MiB). Throws on allocation failure.
inline std::vector<uint64_t> make_state_bitset() {
    try {
        return std::vector<uint64_t>(uint64_t{1} << 26, 0);
    } catch (const std::bad_alloc&) {
        throw std::runtime_error("seed_block: cannot allocate the 512 MiB membership set");
    }
}

}  // namespace detail

// Period and d of the cycle containing `start` (default: state 1). For
// every published pair the non-longest cycles cover a vanishing fraction
// of states, so state 1 lands in the longest cycle in practice; when the
// traversed cycle is short the longest one is located by full marking.
inline DValue d_value(const MonoPair& p, uint32_t start = 1) {
    if (start == 0) throw std::invalid_argument("start state must be nonzero");
    const uint64_t period = detail::walk_period(p, start);
    if (period >= (uint64_t{1} << 31))
        return {period, static_cast<int64_t>((uint64_t{1} << 32) - period)};
    // fall back to a full sweep for the longest cycle
    auto visited = detail::make_state_bitset();
    auto is_visited = [&](uint32_t i) { return (visited[i >> 6] >> (i & 63)) & 1; };
    auto mark = [&](uint32_t i) { visited[i >> 6] |= uint64_t{1} << (i & 63); };
    uint64_t longest = 0;
    for (uint64_t s = 1; s < (uint64_t{1} << 32); ++s) {
        if (is_visited(static_cast<uint32_t>(s))) continue;
        uint32_t cur = static_cast<uint32_t>(s);
        uint64_t len = 0;
        do {
            mark(cur);
            cur = mono_step(cur, p);
            ++len;
        } while (cur != static_cast<uint32_t>(s));
        longest = std::max(longest, len);
    }
    return {longest, static_cast<int64_t>((uint64_t{1} << 32) - longest)};
}

struct SeedBlockResult {
    MonoPair pair;
    uint64_t period;
    int64_t d;
    uint32_t block_base;
    unsigned block_bits;  // floor(log2(longest run of consecutive members))
};

// Mark every member of the cycle containing `cycle_member`, then scan the
// number line for the longest run of consecutive members. Needs the
// 512 MiB membership set.
inline SeedBlockResult seed_block(const MonoPair& p, uint32_t cycle_member = 1) {
    if (cycle_member == 0) throw std::invalid_argument("cycle member must be nonzero");
    auto member = detail::make_state_bitset();
    auto is_member = [&](uint32_t i) { return (member[i >> 6] >> (i & 63)) & 1; };
    uint32_t cur = cycle_member;
    uint64_t period = 0;
    do {
        member[cur >> 6] |= uint64_t{1} << (cur & 63);
        cur = mono_step(cur, p);
        ++period;
    } while (cur != cycle_member);

    uint64_t best_len = 0, best_base = 0;
    uint64_t run_len = 0, run_base = 0;
    const uint64_t total = uint64_t{1} << 32;
    for (uint64_t i = 0; i < total;) {
        if ((i & 63) == 0 && member[i >> 6] == ~uint64_t{0}) {
            if (run_len == 0) run_base = i;
            run_len += 64;
            i += 64;
            continue;
        }
        if (is_member(static_cast<uint32_t>(i))) {
            if (run_len == 0) run_base = i;
            ++run_len;
        } else {
            if (run_len > best_len) { best_len = run_len; best_base = run_base; }
            run_len = 0;
        }
        ++i;
    }
    if (run_len > best_len) { best_len = run_len; best_base = run_base; }

    SeedBlockResult r;
    r.pair = p;
    r.period = period;
    r.d = static_cast<int64_t>(total - period);
    r.block_base = static_cast<uint32_t>(best_base);
    r.block_bits = best_len ? static_cast<unsigned>(std::floor(std::log2(static_cast<double>(best_len)))) : 0;
    return r;
}

// ---- multiplier heuristics ----

namespace detail {

inline unsigned longest_bit_run(uint64_t m, unsigned word_bits) {
    unsigned best = 0, run = 0;
    int prev = -1;
    for (unsigned i = 0; i < word_bits; ++i) {
        const int bit = static_cast<int>((m >> i) & 1);
        run = (bit == prev) ? run + 1 : 1;
        prev = bit;
        best = std::max(best, run);
    }
    return best;
}

inline bool has_triple_nibble(uint64_t m, unsigned word_bits) {
    const unsigned nibbles = word_bits / 4;
    unsigned repeat = 1;
    for (unsigned i = 1; i < nibbles; ++i) {
        const unsigned a = (m >> (4 * i)) & 0xF;
        const unsigned b = (m >> (4 * (i - 1))) & 0xF;
        repeat = (a == b) ? repeat + 1 : 1;
        if (repeat >= 3) return true;
    }
    return false;
}

}  // namespace detail

// Concrete reading of the published multiplier rules: low nibble 1011,
// Hamming weight within +-2 of w/2, no nibble repeated three times in a
// row, and no bit-run longer than max(4, w/8). The shipped 64-bit
// multiplier contains an 8-bit zero run, which pins the run threshold.
inline bool multiplier_passes_heuristics(uint64_t m, unsigned word_bits) {
    if (word_bits < 4 || word_bits > 64) return false;
    if ((m & ~mask_of(word_bits)) != 0) return false;
    if ((m & 0xF) != 0xB) return false;
    const int weight = std::popcount(m);
    if (std::abs(weight - static_cast<int>(word_bits / 2)) > 2) return false;
    const unsigned max_run = std::max(4u, word_bits / 8);
    if (detail::longest_bit_run(m, word_bits) > max_run) return false;
    if (detail::has_triple_nibble(m, word_bits)) return false;
    return true;
}

// Rejection-sample random candidates until `count` pass the heuristics.
inline std::vector<uint64_t> heuristic_multipliers(unsigned word_bits, size_t count,
                                                   uint64_t rng_seed) {
    if (word_bits != 32 && word_bits != 64)
        throw std::invalid_argument("heuristic multipliers are defined for 32- or 64-bit words");
    std::mt19937_64 rng(rng_seed);
    std::vector<uint64_t> out;
    while (out.size() < count) {
        uint64_t m = (rng() & mask_of(word_bits) & ~uint64_t{0xF}) | 0xB;
        if (multiplier_passes_heuristics(m, word_bits)) out.push_back(m);
    }
    return out;
}

// ---- rotation-neighborhood scoring ----

struct RotationCandidate {
    std::vector<unsigned> rotations;  // one or two counts
};

struct NeighborhoodScore {
    RotationCandidate candidate;
    double score = 0;
    double neighbor1_min = 0, neighbor1_mean = 0;  // grid distance 1
    double neighbor2_min = 0, neighbor2_mean = 0;  // grid distance 2
    bool has_neighbors = false;
};

// Score each rotation (or rotation pair) with the supplied evaluator and
// attach min/mean scores of grid neighbors at Chebyshev distance 1 and 2,
// for the pick-the-gentle-hill selection rule. Evaluator failures
// propagate with the candidate identified.
inline std::vector<NeighborhoodScore> score_rotation_neighborhood(
    const std::vector<RotationCandidate>& grid,
    const std::function<double(const RotationCandidate&)>& evaluator) {
    std::vector<double> scores;
    scores.reserve(grid.size());
    for (const auto& cand : grid) {
        try {
            scores.push_back(evaluator(cand));
        } catch (const std::exception& e) {
            std::string where = "evaluator failed for rotations ";
            for (size_t i = 0; i < cand.rotations.size(); ++i)
                where += (i ? "/" : "") + std::to_string(cand.rotations[i]);
            throw std::runtime_error(where + ": " + e.what());
        }
    }
    auto distance = [](const RotationCandidate& a, const RotationCandidate& b) -> unsigned {
        if (a.rotations.size() != b.rotations.size()) return ~0u;
        unsigned d = 0;
        for (size_t i = 0; i < a.rotations.size(); ++i)
            d = std::max(d, static_cast<unsigned>(
                                std::abs(static_cast<int>(a.rotations[i]) -
                                         static_cast<int>(b.rotations[i]))));
        return d;
    };
    std::vector<NeighborhoodScore> out;
    for (size_t i = 0; i < grid.size(); ++i) {
        NeighborhoodScore ns;
        ns.candidate = grid[i];
        ns.score = scores[i];
        double min1 = 0, sum1 = 0, min2 = 0, sum2 = 0;
        size_t n1 = 0, n2 = 0;
        for (size_t j = 0; j < grid.size(); ++j) {
            if (j == i) continue;
            const unsigned d = distance(grid[i], grid[j]);
            if (d == 1) {
                min1 = n1 ? std::min(min1, scores[j]) : scores[j];
                sum1 += scores[j];
                ++n1;
            } else if (d == 2) {
                min2 = n2 ? std::min(min2, scores[j]) : scores[j];
                sum2 += scores[j];
                ++n2;
            }
        }
        ns.has_neighbors = (n1 + n2) > 0;
        if (n1) { ns.neighbor1_min = min1; ns.neighbor1_mean = sum1 / static_cast<double>(n1); }
        if (n2) { ns.neighbor2_min = min2; ns.neighbor2_mean = sum2 / static_cast<double>(n2); }
        out.push_back(std::move(ns));
    }
    return out;
}

// ---- published multiplier-rotation table ----

struct AppendixRow {
    uint32_t multiplier;
    unsigned rotation;
    uint32_t d;
    uint32_t rm_base;
    unsigned rm_bits;
    uint32_t mr_base;
    unsigned mr_bits;
};

// All published pairs with d under 2000, in ascending-d order.
inline const std::vector<AppendixRow>& appendix_rows() {
    static const std::vector<AppendixRow> rows = {
        {2540121707u, 14, 2, 437125826u, 31, 1u, 31},
        {3731015275u, 18, 3, 1u, 31, 1564370705u, 30},
        {2336447867u, 16, 43, 3779345575u, 28, 2076771216u, 29},
        {3611795771u, 12, 47, 342645537u, 28, 1156979152u, 29},
        {3952805931u, 13, 157, 1159051389u, 26, 2515406761u, 26},
        {3276993211u, 14, 184, 226123367u, 27, 1335894518u, 27},
        {4084487243u, 12, 347, 1339372056u, 26, 2141099809u, 25},
        {4127380763u, 12, 397, 606354474u, 26, 1315333761u, 25},
        {3563976171u, 16, 420, 2941035005u, 25, 1377002680u, 25},
        {3651999659u, 14, 429, 3209498982u, 25, 2227458680u, 26},
        {3365008619u, 12, 476, 874642096u, 25, 2055179747u, 26},
        {3953463755u, 16, 514, 4174029353u, 26, 2817505743u, 25},
        {3989591211u, 13, 592, 3721670923u, 25, 3643450503u, 25},
        {3332453915u, 14, 650, 3818020724u, 25, 1456733700u, 25},
        {3586487947u, 16, 681, 3925643197u, 25, 3307401597u, 25},
        {4272641883u, 16, 709, 3002109605u, 25, 2625009597u, 25},
        {3525693099u, 14, 758, 144357697u, 25, 3440120341u, 25},
        {3690361499u, 14, 768, 2120353896u, 24, 2598302657u, 25},
        {1698147467u, 13, 775, 1398136959u, 25, 2483006683u, 25},
        {3319523819u, 15, 838, 3085144041u, 25, 2129925777u, 24},
    };
    return rows;
}

struct RowCheck {
    AppendixRow row;
    MonoOrder order;
    uint64_t got_period = 0;
    int64_t got_d = 0;
    std::optional<uint32_t> got_base;   // heavy tier only
    std::optional<unsigned> got_bits;   // heavy tier only
    bool pass = false;
};

// Fast tier: walk the published base's cycle and compare d. Heavy tier
// additionally rebuilds the seed-block (512 MiB membership set).
inline RowCheck verify_row(const AppendixRow& row, MonoOrder order, bool heavy = false) {
    const MonoPair pair = make_pair(row.multiplier, row.rotation, order);
    const uint32_t base = (order == MonoOrder::rotate_multiply) ? row.rm_base : row.mr_base;
    const unsigned bits = (order == MonoOrder::rotate_multiply) ? row.rm_bits : row.mr_bits;
    RowCheck chk;
    chk.row = row;
    chk.order = order;
    if (heavy) {
        const SeedBlockResult sb = seed_block(pair, base);
        chk.got_period = sb.period;
        chk.got_d = sb.d;
        chk.got_base = sb.block_base;
        chk.got_bits = sb.block_bits;
        chk.pass = (sb.d == row.d) && (sb.block_base == base) && (sb.block_bits == bits);
    } else {
        const uint64_t period = detail::walk_period(pair, base);
        chk.got_period = period;
        chk.got_d = static_cast<int64_t>((uint64_t{1} << 32) - period);
        chk.pass = (chk.got_d == row.d);
    }
    return chk;
}

inline void write_verification_csv(std::ostream& out, const std::vector<RowCheck>& checks) {
    out << "multiplier,rotation,order,expected_d,got_d,expected_base,got_base,"
           "expected_bits,got_bits,pass\n";
    for (const auto& c : checks) {
        const bool rm = c.order == MonoOrder::rotate_multiply;
        out << c.row.multiplier << "," << c.row.rotation << "," << (rm ? "rm" : "mr") << ","
            << c.row.d << "," << c.got_d << "," << (rm ? c.row.rm_base : c.row.mr_base) << ",";
        if (c.got_base) out << *c.got_base;
        out << "," << (rm ? c.row.rm_bits : c.row.mr_bits) << ",";
        if (c.got_bits) out << *c.got_bits;
        out << "," << (c.pass ? "1" : "0") << "\n";
    }
}

// ---- the random search loop ----

struct SearchHit {
    MonoPair pair;
    uint64_t period;
    int64_t d;
};

// The published table came from months of this loop; here it is at desk
// scale: random heuristic multipliers crossed with a rotation range,
// keeping pairs whose longest cycle falls short of 2^32 by less than
// d_limit. Each attempt costs a full-period walk.
inline std::vector<SearchHit> search_low_d(unsigned min_rotation, unsigned max_rotation,
                                           uint32_t d_limit, size_t attempts,
                                           uint64_t rng_seed, MonoOrder order) {
    if (min_rotation < 1 || max_rotation > 31 || min_rotation > max_rotation)
        throw std::invalid_argument("rotation range must lie in 1..31");
    std::mt19937_64 rng(rng_seed);
    std::vector<SearchHit> hits;
    for (size_t i = 0; i < attempts; ++i) {
        const uint64_t m = heuristic_multipliers(32, 1, rng())[0];
        const unsigned r = min_rotation +
                           static_cast<unsigned>(rng() % (max_rotation - min_rotation + 1));
        const MonoPair pair = make_pair(static_cast<uint32_t>(m), r, order);
        const uint64_t period = detail::walk_period(pair, 1);
        if (period >= (uint64_t{1} << 31)) {
            // a cycle this long is necessarily the longest one
            const int64_t d = static_cast<int64_t>((uint64_t{1} << 32) - period);
            if (d < static_cast<int64_t>(d_limit)) hits.push_back({pair, period, d});
        } else if (period <= d_limit) {
            // tiny cycle: the longest one is elsewhere, find it properly
            const DValue dv = d_value(pair);
            if (dv.d < static_cast<int64_t>(d_limit)) hits.push_back({pair, dv.period, dv.d});
        }
        // otherwise d > d_limit either way: at least `period` states lie
        // outside the longest cycle, or the walked cycle is the longest
        // and falls short by more than 2^31
    }
    return hits;
}

}  // namespace romu::mono_search
