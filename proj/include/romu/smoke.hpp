#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "romu/state.hpp"

// Desk-scale statistical smoke tests with a bytes-before-failure score.
// Not a PractRand replacement: four cheap statistics with a very
// conservative failure threshold, enough to fail degenerate streams fast
// and to score mini-generator cycles.

namespace romu::smoke {

// Byte producers. read() returns the number of bytes written; short reads
// mean the source is exhausted.
class ByteSource {
  public:
    virtual ~ByteSource() = default;
    virtual size_t read(uint8_t* dst, size_t n) = 0;
};

// Adapts a generator to a byte stream. Outputs are packed LSB-first,
// which is plain little-endian whenever the output width is a multiple
// of 8 bits. An optional value limit caps the stream at one cycle.
class GeneratorByteSource final : public ByteSource {
  public:
    explicit GeneratorByteSource(RomuState state,
                                 uint64_t max_values = ~uint64_t{0})
        : state_(std::move(state)), remaining_(max_values) {}

    size_t read(uint8_t* dst, size_t n) override {
        size_t filled = 0;
        while (filled < n) {
            if (bits_ >= 8) {
                dst[filled++] = static_cast<uint8_t>(acc_);
                acc_ >>= 8;
                bits_ -= 8;
                continue;
            }
            if (remaining_ == 0) break;
            const GeneratorOutput out = next(state_);
            acc_ |= static_cast<unsigned __int128>(out.value) << bits_;
            bits_ += out.bits;
            --remaining_;
        }
        return filled;
    }

  private:
    RomuState state_;
    uint64_t remaining_;
    unsigned __int128 acc_ = 0;
    unsigned bits_ = 0;
};

class ConstantByteSource final : public ByteSource {
  public:
    explicit ConstantByteSource(uint8_t value) : value_(value) {}
    size_t read(uint8_t* dst, size_t n) override {
        std::memset(dst, value_, n);
        return n;
    }

  private:
    uint8_t value_;
};

class AlternatingByteSource final : public ByteSource {
  public:
    AlternatingByteSource(uint8_t a, uint8_t b) : a_(a), b_(b) {}
    size_t read(uint8_t* dst, size_t n) override {
        for (size_t i = 0; i < n; ++i) dst[i] = (parity_ ^= 1) ? a_ : b_;
        return n;
    }

  private:
    uint8_t a_, b_;
    unsigned parity_ = 0;
};

enum class Test { monobit, byte_chi_square, serial_correlation, gap_test };

inline std::string test_name(Test t) {
    switch (t) {
        case Test::monobit: return "monobit";
        case Test::byte_chi_square: return "byte_chi_square";
        case Test::serial_correlation: return "serial_correlation";
        case Test::gap_test: return "gap_test";
    }
    return "?";
}

struct Config {
    std::set<Test> tests = {Test::monobit, Test::byte_chi_square,
                            Test::serial_correlation, Test::gap_test};
    size_t block_bytes = size_t{1} << 16;
    double fail_log10p = -9.0;
    uint64_t budget_bytes = uint64_t{1} << 26;
};

struct Failure {
    Test test;
    size_t block_index;
    double log10_p;
};

struct Verdict {
    uint64_t bytes_consumed = 0;
    std::optional<Failure> first_failure;
};

namespace detail {

inline double log10_erfc(double x) {
    if (x < 0) x = 0;
    if (x < 20.0) return std::log10(std::erfc(x));
    // asymptotic tail: erfc(x) ~ exp(-x^2) / (x*sqrt(pi))
    return (-x * x - std::log(x * std::sqrt(M_PI))) / std::log(10.0);
}

// One-sided upper tail of a chi-square with df degrees of freedom,
// Wilson-Hilferty cube-root normal approximation. Good enough in the
// deep tail this suite cares about.
inline double log10_chi2_upper(double chi2, double df) {
    const double c = 2.0 / (9.0 * df);
    const double z = (std::cbrt(chi2 / df) - (1.0 - c)) / std::sqrt(c);
    if (z <= 0) return 0.0;
    return std::log10(0.5) + log10_erfc(z / std::sqrt(2.0));
}

struct Accumulators {
    // monobit
    uint64_t ones = 0;
    uint64_t total_bytes = 0;
    // byte chi-square
    std::array<uint64_t, 256> byte_counts{};
    // lag-1 serial correlation on 64-bit words
    double sum_xy = 0;
    uint64_t word_pairs = 0;
    bool have_prev_word = false;
    double prev_word_v = 0;
    std::array<uint8_t, 8> word_buf{};
    unsigned word_buf_fill = 0;
    // gap test on byte values < 32
    std::array<uint64_t, 17> gap_counts{};
    uint64_t gaps_total = 0;
    uint64_t current_gap = 0;

    void consume(const uint8_t* data, size_t n) {
        for (size_t i = 0; i < n; ++i) {
            const uint8_t b = data[i];
            ones += static_cast<unsigned>(std::popcount(b));
            ++byte_counts[b];
            // words, little-endian
            word_buf[word_buf_fill++] = b;
            if (word_buf_fill == 8) {
                uint64_t u = 0;
                for (int k = 7; k >= 0; --k) u = (u << 8) | word_buf[k];
                const double v = static_cast<double>(u >> 11) * 0x1p-53 - 0.5;
                if (have_prev_word) {
                    sum_xy += prev_word_v * v;
                    ++word_pairs;
                }
                prev_word_v = v;
                have_prev_word = true;
                word_buf_fill = 0;
            }
            // gaps
            if (b < 32) {
                const uint64_t g = current_gap;
                ++gap_counts[g < 16 ? g : 16];
                ++gaps_total;
                current_gap = 0;
            } else {
                ++current_gap;
            }
        }
        total_bytes += n;
    }

    double monobit_log10p() const {
        const double bits = static_cast<double>(total_bytes) * 8.0;
        if (bits < 4096) return 0.0;
        const double z = std::fabs(2.0 * static_cast<double>(ones) - bits) / std::sqrt(bits);
        return log10_erfc(z / std::sqrt(2.0));
    }

    double byte_chi2_log10p() const {
        if (total_bytes < 16384) return 0.0;
        const double e = static_cast<double>(total_bytes) / 256.0;
        double chi2 = 0;
        for (uint64_t c : byte_counts) {
            const double d = static_cast<double>(c) - e;
            chi2 += d * d / e;
        }
        return log10_chi2_upper(chi2, 255.0);
    }

    double serial_log10p() const {
        if (word_pairs < 1024) return 0.0;
        // under H0 each product has mean 0, variance 1/144
        const double z = std::fabs(sum_xy) * 12.0 / std::sqrt(static_cast<double>(word_pairs));
        return log10_erfc(z / std::sqrt(2.0));
    }

    double gap_log10p() const {
        if (gaps_total < 2048) return 0.0;
        const double q = 32.0 / 256.0;
        double chi2 = 0;
        for (int k = 0; k < 17; ++k) {
            const double pk = (k < 16) ? q * std::pow(1.0 - q, k) : std::pow(1.0 - q, 16);
            const double e = pk * static_cast<double>(gaps_total);
            const double d = static_cast<double>(gap_counts[k]) - e;
            chi2 += d * d / e;
        }
        return log10_chi2_upper(chi2, 16.0);
    }
};

}  // namespace detail

// Consume blocks, re-evaluating every enabled statistic on the cumulative
// prefix; stop at the first p-value under the threshold, at the budget,
// or when the source runs dry.
inline Verdict run_smoke(ByteSource& source, const Config& cfg) {
    if (cfg.block_bytes < 1024) throw std::invalid_argument("block_bytes must be >= 1024");
    if (cfg.fail_log10p >= 0) throw std::invalid_argument("failure threshold must be negative");
    detail::Accumulators acc;
    std::vector<uint8_t> block(cfg.block_bytes);
    Verdict verdict;
    size_t block_index = 0;
    while (verdict.bytes_consumed < cfg.budget_bytes) {
        const size_t want = static_cast<size_t>(
            std::min<uint64_t>(cfg.block_bytes, cfg.budget_bytes - verdict.bytes_consumed));
        const size_t got = source.read(block.data(), want);
        if (got == 0) break;
        acc.consume(block.data(), got);
        verdict.bytes_consumed += got;
        for (Test t : cfg.tests) {
            double lp = 0;
            switch (t) {
                case Test::monobit: lp = acc.monobit_log10p(); break;
                case Test::byte_chi_square: lp = acc.byte_chi2_log10p(); break;
                case Test::serial_correlation: lp = acc.serial_log10p(); break;
                case Test::gap_test: lp = acc.gap_log10p(); break;
            }
            if (lp < cfg.fail_log10p) {
                verdict.first_failure = Failure{t, block_index, lp};
                return verdict;
            }
        }
        if (got < want) break;  // exhausted
        ++block_index;
    }
    return verdict;
}

}  // namespace romu::smoke
