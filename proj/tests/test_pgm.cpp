#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "romu/pgm.hpp"

namespace {

TEST(Pgm, HeaderAndPayload) {
    romu::pgm::Image img(4, 3, 200);
    img.at(1, 2) = 7;
    const std::string path = std::string(::testing::TempDir()) + "tiny.pgm";
    img.write(path);
    std::ifstream in(path, std::ios::binary);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "P5");
    std::string dims, maxval;
    std::getline(in, dims);
    std::getline(in, maxval);
    EXPECT_EQ(dims, "4 3");
    EXPECT_EQ(maxval, "255");
    std::string payload((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    ASSERT_EQ(payload.size(), 12u);
    EXPECT_EQ(static_cast<uint8_t>(payload[2 * 4 + 1]), 7);
    EXPECT_EQ(static_cast<uint8_t>(payload[0]), 200);
    std::remove(path.c_str());
}

TEST(Pgm, LcgPlotShowsLattice) {
    romu::pgm::DotPlotStats stats;
    const auto img = romu::pgm::dotplot(romu::pgm::DotPlotKind::lcg477, &stats);
    // 477 = 5 mod 8, so the multiplicative order of 477 mod 2^10 is 2^8
    EXPECT_EQ(stats.period, 256u);
    EXPECT_EQ(stats.distinct_pairs, 256u);
    // lattice structure: a large fraction of point triples are collinear
    EXPECT_GT(stats.collinear_fraction, 0.008);
    // plotted pixels match the reported pair count
    uint64_t black = 0;
    for (uint8_t p : img.pixels) black += (p == 0);
    EXPECT_EQ(black, stats.distinct_pairs);
}

TEST(Pgm, RomuPlotShowsNoLattice) {
    romu::pgm::DotPlotStats stats;
    const auto img = romu::pgm::dotplot(romu::pgm::DotPlotKind::romu_r4_m715, &stats);
    EXPECT_EQ(stats.period, 853u);   // longest cycle of the 10-bit map from seed 1
    EXPECT_EQ(stats.distinct_pairs, 853u);
    EXPECT_LT(stats.collinear_fraction, 0.002);
    EXPECT_EQ(img.width, 1024u);
    EXPECT_EQ(img.height, 1024u);
}

TEST(Pgm, CollinearityContrast) {
    romu::pgm::DotPlotStats lcg, rot;
    romu::pgm::dotplot(romu::pgm::DotPlotKind::lcg477, &lcg);
    romu::pgm::dotplot(romu::pgm::DotPlotKind::romu_r4_m715, &rot);
    // the rotate-multiply map covers a longer cycle and scores an order of
    // magnitude lower on exact collinearity
    EXPECT_GT(rot.period, 3 * lcg.period / 2);
    EXPECT_GT(lcg.collinear_fraction, 5 * rot.collinear_fraction);
}

}  // namespace
