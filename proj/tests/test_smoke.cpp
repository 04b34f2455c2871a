#include <gtest/gtest.h>

#include "romu/smoke.hpp"

namespace sk = romu::smoke;

namespace {

sk::Config only(sk::Test t) {
    sk::Config cfg;
    cfg.tests = {t};
    return cfg;
}

TEST(Smoke, AllZerosFailsMonobitInFirstBlock) {
    sk::ConstantByteSource src(0x00);
    const auto v = sk::run_smoke(src, only(sk::Test::monobit));
    ASSERT_TRUE(v.first_failure.has_value());
    EXPECT_EQ(v.first_failure->test, sk::Test::monobit);
    EXPECT_EQ(v.first_failure->block_index, 0u);
    EXPECT_LT(v.first_failure->log10_p, -9.0);
    EXPECT_LE(v.bytes_consumed, uint64_t{1} << 16);
}

TEST(Smoke, AllOnesFailsToo) {
    sk::ConstantByteSource src(0xFF);
    const auto v = sk::run_smoke(src, only(sk::Test::monobit));
    ASSERT_TRUE(v.first_failure.has_value());
}

TEST(Smoke, BalancedButDegenerateStreamFailsChiSquare) {
    // 0x55/0xAA alternation is perfectly monobit-balanced but uses 2 of
    // 256 byte values
    sk::AlternatingByteSource src(0x55, 0xAA);
    {
        sk::ConstantByteSource c(0x55);
        const auto v = sk::run_smoke(c, only(sk::Test::monobit));
        EXPECT_FALSE(v.first_failure.has_value());  // 0x55 is bit-balanced
    }
    const auto v = sk::run_smoke(src, only(sk::Test::byte_chi_square));
    ASSERT_TRUE(v.first_failure.has_value());
    EXPECT_EQ(v.first_failure->test, sk::Test::byte_chi_square);
    EXPECT_EQ(v.first_failure->block_index, 0u);
}

TEST(Smoke, PeriodicWordsFailSerialCorrelation) {
    // strongly lag-1-correlated 64-bit words: sawtooth over the top bytes
    class Sawtooth final : public sk::ByteSource {
      public:
        size_t read(uint8_t* dst, size_t n) override {
            for (size_t i = 0; i < n; ++i) {
                // every byte cycles 0..255 in step, so consecutive words are
                // nearly equal -> positive correlation of the centered values
                dst[i] = static_cast<uint8_t>(counter_);
                if (++phase_ == 8) {
                    phase_ = 0;
                    ++counter_;
                }
            }
            return n;
        }

      private:
        unsigned counter_ = 0;
        unsigned phase_ = 0;
    } src;
    sk::Config cfg = only(sk::Test::serial_correlation);
    const auto v = sk::run_smoke(src, cfg);
    ASSERT_TRUE(v.first_failure.has_value());
    EXPECT_EQ(v.first_failure->test, sk::Test::serial_correlation);
}

TEST(Smoke, MissingLowBytesFailGapTest) {
    // bytes uniform over 32..255: the gap test's marked set never occurs
    class NoLowBytes final : public sk::ByteSource {
      public:
        size_t read(uint8_t* dst, size_t n) override {
            for (size_t i = 0; i < n; ++i) {
                x_ = x_ * 6364136223846793005ull + 1442695040888963407ull;
                dst[i] = static_cast<uint8_t>(32 + ((x_ >> 56) % 224));
            }
            return n;
        }

      private:
        uint64_t x_ = 1;
    } src;
    const auto v = sk::run_smoke(src, only(sk::Test::gap_test));
    // no gap ever completes, so the gap statistic stays silent; the stream
    // still dies on the chi-square as soon as both tests run
    EXPECT_FALSE(v.first_failure.has_value());
    sk::Config cfg;
    cfg.tests = {sk::Test::byte_chi_square, sk::Test::gap_test};
    NoLowBytes src2;
    const auto v2 = sk::run_smoke(src2, cfg);
    ASSERT_TRUE(v2.first_failure.has_value());
    EXPECT_EQ(v2.first_failure->test, sk::Test::byte_chi_square);
}

TEST(Smoke, ClusteredLowBytesFailGapTest) {
    // low bytes arrive in bursts: gap distribution is far from geometric
    class Bursty final : public sk::ByteSource {
      public:
        size_t read(uint8_t* dst, size_t n) override {
            for (size_t i = 0; i < n; ++i) {
                x_ = x_ * 6364136223846793005ull + 1442695040888963407ull;
                const uint64_t r = x_ >> 40;
                if ((pos_++ & 15) == 0)
                    dst[i] = static_cast<uint8_t>(r % 32);  // burst slot
                else
                    dst[i] = static_cast<uint8_t>(32 + (r % 224));
            }
            return n;
        }

      private:
        uint64_t x_ = 7;
        uint64_t pos_ = 0;
    } src;
    const auto v = sk::run_smoke(src, only(sk::Test::gap_test));
    ASSERT_TRUE(v.first_failure.has_value());
    EXPECT_EQ(v.first_failure->test, sk::Test::gap_test);
}

TEST(Smoke, FullSizeGeneratorSurvivesDefaultBudget) {
    // regression fixture: 64 MiB from RomuTrio(1,2,3) passes all four tests
    auto st = romu::seed(romu::find_spec("romutrio"), std::vector<uint64_t>{1, 2, 3});
    sk::GeneratorByteSource src(st);
    sk::Config cfg;
    const auto v = sk::run_smoke(src, cfg);
    EXPECT_FALSE(v.first_failure.has_value());
    EXPECT_EQ(v.bytes_consumed, cfg.budget_bytes);
}

TEST(Smoke, DeterministicVerdicts) {
    for (int rep = 0; rep < 2; ++rep) {
        auto st = romu::make_stream(romu::find_spec("romuduojr"), 3, 17);
        sk::GeneratorByteSource src(st);
        sk::Config cfg;
        cfg.budget_bytes = uint64_t{1} << 22;
        const auto v = sk::run_smoke(src, cfg);
        EXPECT_EQ(v.bytes_consumed, cfg.budget_bytes);
        EXPECT_FALSE(v.first_failure.has_value());
    }
}

TEST(Smoke, ExhaustedSourceStopsCleanly) {
    // 1000 outputs of 64 bits = 8000 bytes, less than one block
    auto st = romu::seed(romu::find_spec("romutrio"), std::vector<uint64_t>{1, 2, 3});
    sk::GeneratorByteSource src(st, 1000);
    sk::Config cfg;
    const auto v = sk::run_smoke(src, cfg);
    EXPECT_EQ(v.bytes_consumed, 8000u);
    EXPECT_FALSE(v.first_failure.has_value());  // below every minimum-data gate
}

TEST(Smoke, ByteAccounting) {
    auto st = romu::seed(romu::find_spec("romumono32"), std::vector<uint64_t>{12345});
    sk::GeneratorByteSource src(st, 100);  // 16-bit outputs -> 200 bytes
    std::vector<uint8_t> buf(1024);
    EXPECT_EQ(src.read(buf.data(), buf.size()), 200u);
    EXPECT_EQ(src.read(buf.data(), buf.size()), 0u);
}

TEST(Smoke, LittleEndianPacking) {
    auto st = romu::seed(romu::find_spec("romutrio"), std::vector<uint64_t>{1, 2, 3});
    romu::RomuState copy = st;
    sk::GeneratorByteSource src(st, 2);
    uint8_t buf[16];
    ASSERT_EQ(src.read(buf, 16), 16u);
    for (int w = 0; w < 2; ++w) {
        const uint64_t v = romu::next(copy).value;
        for (int b = 0; b < 8; ++b)
            EXPECT_EQ(buf[w * 8 + b], static_cast<uint8_t>(v >> (8 * b)));
    }
}

TEST(Smoke, ConfigValidation) {
    sk::ConstantByteSource src(0);
    sk::Config cfg;
    cfg.block_bytes = 16;
    EXPECT_THROW(sk::run_smoke(src, cfg), std::invalid_argument);
    sk::Config cfg2;
    cfg2.fail_log10p = 1.0;
    EXPECT_THROW(sk::run_smoke(src, cfg2), std::invalid_argument);
}

}  // namespace
