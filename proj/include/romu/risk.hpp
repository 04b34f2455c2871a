#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Short-cycle and stream-overlap probability calculators. Everything is
// carried in the log2 domain; a raw probability like 2^-200 underflows
// double, the exponent does not.

namespace romu::risk {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Warn when the n*l/p ratio leaves the regime where the closed forms are
// accurate; the exact product should be used instead.
inline constexpr double kSmallRatioWarnLog2 = -10.0;

// P(cycle containing a random state is shorter than 2^k) ~ 2^(k-s).
inline double p_short_cycle_log2(unsigned s, unsigned k) {
    if (k > s) throw std::invalid_argument("k must not exceed s");
    return static_cast<double>(k) - static_cast<double>(s);
}

// P(log2 period falls in [k-1, k]) = 2^(k-s-1).
inline double interval_probability_log2(unsigned s, unsigned k) {
    if (k < 1 || k > s) throw std::invalid_argument("k must be in 1..s");
    return static_cast<double>(k) - static_cast<double>(s) - 1.0;
}

namespace detail {

// log2((n-1)*n) for n = 2^log2_n. Exact integer product while n fits a
// double; 2*log2_n beyond that (relative slack <= 2^-52).
inline double log2_pairs(double log2_n) {
    if (log2_n < 0) throw std::invalid_argument("log2_n must be >= 0");
    if (log2_n == 0) return kNegInf;  // n = 1: no pair can overlap
    if (log2_n <= 52.0) {
        const double n = std::exp2(log2_n);
        return std::log2(n - 1.0) + log2_n;
    }
    return 2.0 * log2_n;
}

}  // namespace detail

// Overlap among n sequences of length l in a single cycle of known
// period p: (n-1)*n*l / p.
inline double overlap_known_log2(double log2_p, double log2_l, double log2_n) {
    const double pairs = detail::log2_pairs(log2_n);
    if (pairs == kNegInf) return kNegInf;
    return pairs + log2_l - log2_p;
}

// Knuth's ball/urn bound: l*n^2 / p. Always >= overlap_known.
inline double overlap_knuth_log2(double log2_p, double log2_l, double log2_n) {
    return log2_l + 2.0 * log2_n - log2_p;
}

// Convolution against the cycle-length law, sum form over unit intervals
// with the geometric mean as the per-interval period:
// (n-1)*n*l*s / (sqrt(2) * 2^s).
inline double overlap_romu_sum_log2(unsigned s, double log2_l, double log2_n) {
    const double pairs = detail::log2_pairs(log2_n);
    if (pairs == kNegInf) return kNegInf;
    return pairs + log2_l + std::log2(static_cast<double>(s)) - 0.5 - static_cast<double>(s);
}

// Integral form of the same convolution: ln(2)*(n-1)*n*l*s / 2^s.
// Offset from the sum form by exactly log2(sqrt(2)*ln(2)).
inline double overlap_romu_integral_log2(unsigned s, double log2_l, double log2_n) {
    const double pairs = detail::log2_pairs(log2_n);
    if (pairs == kNegInf) return kNegInf;
    return std::log2(std::log(2.0)) + pairs + log2_l +
           std::log2(static_cast<double>(s)) - static_cast<double>(s);
}

// Exact product form, 1 - prod(1 - 2*i*l/p), evaluated in log space.
// Index range: i in [0, n-1] for even n, [1, n-1] for odd n. Returns a
// raw probability. If any vulnerable zone exceeds the period the overlap
// is certain and 1 is returned.
inline double exact_overlap(double p, double l, uint64_t n) {
    if (p <= 0 || l < 0) throw std::invalid_argument("need p > 0 and l >= 0");
    if (n > (uint64_t{1} << 20)) throw std::invalid_argument("n too large for direct product");
    if (n <= 1) return 0.0;
    double log_survive = 0.0;  // natural log of prod(1 - 2*i*l/p)
    const uint64_t first = (n % 2 == 0) ? 0 : 1;
    for (uint64_t i = first; i < n; ++i) {
        const double zone = 2.0 * static_cast<double>(i) * l / p;
        if (zone >= 1.0) return 1.0;
        log_survive += std::log1p(-zone);
    }
    return -std::expm1(log_survive);
}

struct RiskQuery {
    unsigned s = 0;                   // state bits
    double log2_l = 0;                // log2 sequence length
    double log2_n = 0;                // log2 number of sequences
    std::optional<double> log2_p;     // log2 known period, if any
};

struct RiskReport {
    double log2_overlap_known = kNegInf;   // only when a period is given
    double log2_overlap_knuth = kNegInf;
    double log2_overlap_romu_sum = kNegInf;
    double log2_overlap_romu_integral = kNegInf;
    std::optional<double> exact_overlap;   // small cases only
    bool small_ratio_warning = false;
};

inline RiskReport assess(const RiskQuery& q) {
    if (q.s == 0) throw std::invalid_argument("state bits must be positive");
    if (q.log2_l < 0 || q.log2_n < 0) throw std::invalid_argument("l and n must be >= 1");
    RiskReport r;
    const double log2_p = q.log2_p.value_or(static_cast<double>(q.s));
    r.log2_overlap_known = overlap_known_log2(log2_p, q.log2_l, q.log2_n);
    r.log2_overlap_knuth = overlap_knuth_log2(log2_p, q.log2_l, q.log2_n);
    r.log2_overlap_romu_sum = overlap_romu_sum_log2(q.s, q.log2_l, q.log2_n);
    r.log2_overlap_romu_integral = overlap_romu_integral_log2(q.s, q.log2_l, q.log2_n);
    r.small_ratio_warning = (q.log2_n + q.log2_l - log2_p) > kSmallRatioWarnLog2;
    if (q.log2_n <= 20 && q.log2_l <= 512 && log2_p <= 512) {
        r.exact_overlap = exact_overlap(std::exp2(log2_p), std::exp2(q.log2_l),
                                        static_cast<uint64_t>(std::llround(std::exp2(q.log2_n))));
    }
    return r;
}

// ---- published tables ----

struct Table2Row {
    unsigned state_bits;
    unsigned min_cycle_log2;
    int published_log2_prob;
};

inline const std::vector<Table2Row>& table2_rows() {
    static const std::vector<Table2Row> rows = {
        {256, 56, -200}, {192, 56, -136}, {128, 56, -72}, {96, 56, -40}, {64, 53, -11}};
    return rows;
}

struct Table3Row {
    unsigned s;
    unsigned log2_l;
    unsigned log2_n;
    double published_known;
    double published_romu;
};

inline const std::vector<Table3Row>& table3_rows() {
    static const std::vector<Table3Row> rows = {
        {256, 64, 40, -112.0, -104.5},
        {192, 58, 17, -103.0, -92.9},
        {128, 53, 14, -47.0, -40.5},
        {96, 44, 8, -36.0, -29.9},
        {64, 44, 5, -10.0, -4.6}};
    return rows;
}

namespace detail {

inline std::string pow2(double log2_value, int decimals) {
    std::ostringstream out;
    out << "2^";
    out.precision(decimals);
    out << std::fixed << log2_value;
    return out.str();
}

}  // namespace detail

// Short-cycle table: one row per state size, exponents are exact integers.
inline std::string render_table2(bool csv = false) {
    std::ostringstream out;
    if (csv) {
        out << "state_bits,min_cycle_log2,log2_p_short_cycle\n";
        for (const auto& r : table2_rows())
            out << r.state_bits << "," << r.min_cycle_log2 << ","
                << p_short_cycle_log2(r.state_bits, r.min_cycle_log2) << "\n";
    } else {
        out << "Probabilities of shorter cycles\n";
        out << "state bits   min cycle   P(shorter cycle)\n";
        for (const auto& r : table2_rows()) {
            const double v = p_short_cycle_log2(r.state_bits, r.min_cycle_log2);
            out << "  " << r.state_bits << "\t   2^" << r.min_cycle_log2 << "\t  "
                << detail::pow2(v, 0) << "\n";
        }
    }
    return out.str();
}

// Sequence-overlap table: known-period column next to the Romu
// convolution column.
inline std::string render_table3(bool csv = false) {
    std::ostringstream out;
    if (csv) {
        out << "s,log2_l,log2_n,log2_overlap_known,log2_overlap_romu\n";
        for (const auto& r : table3_rows())
            out << r.s << "," << r.log2_l << "," << r.log2_n << ","
                << overlap_known_log2(r.s, r.log2_l, r.log2_n) << ","
                << overlap_romu_integral_log2(r.s, r.log2_l, r.log2_n) << "\n";
    } else {
        out << "Probabilities of sequence-overlap\n";
        out << "  s    l      n      known period   Romu\n";
        for (const auto& r : table3_rows()) {
            out << "  " << r.s << "   2^" << r.log2_l << "  2^" << r.log2_n << "   "
                << detail::pow2(overlap_known_log2(r.s, r.log2_l, r.log2_n), 1) << "   "
                << detail::pow2(overlap_romu_integral_log2(r.s, r.log2_l, r.log2_n), 1)
                << "\n";
        }
    }
    return out.str();
}

}  // namespace romu::risk
