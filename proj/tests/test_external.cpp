#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "romu/external.hpp"

namespace ex = romu::external;

namespace {

std::vector<uint8_t> expected_bytes(uint64_t n) {
    auto st = romu::seed(romu::find_spec("romutrio"), std::vector<uint64_t>{1, 2, 3});
    romu::smoke::GeneratorByteSource src(st);
    std::vector<uint8_t> bytes(n);
    EXPECT_EQ(src.read(bytes.data(), n), n);
    return bytes;
}

std::vector<uint8_t> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::vector<uint8_t> out((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
    return out;
}

class TempFile {
  public:
    explicit TempFile(const char* tag) : path_(std::string(::testing::TempDir()) + tag) {}
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

  private:
    std::string path_;
};

TEST(External, EmptyCommandIsASkip) {
    unsetenv(ex::kEnvVar);
    auto st = romu::seed(romu::find_spec("romutrio"), std::vector<uint64_t>{1, 2, 3});
    romu::smoke::GeneratorByteSource src(st);
    const auto r = ex::run_external("", src, 1024, "/tmp/unused.log");
    EXPECT_EQ(r.status, ex::Status::skipped);
    EXPECT_EQ(r.bytes_sent, 0u);
}

TEST(External, ResolveCommandPrecedence) {
    setenv(ex::kEnvVar, "env-tester", 1);
    EXPECT_EQ(ex::resolve_command("explicit-tester"), "explicit-tester");
    EXPECT_EQ(ex::resolve_command(""), "env-tester");
    unsetenv(ex::kEnvVar);
    EXPECT_EQ(ex::resolve_command(""), "");
}

TEST(External, DeliversExactBytesToChildStdin) {
    TempFile sink("external_sink.bin"), log("external.log");
    auto st = romu::seed(romu::find_spec("romutrio"), std::vector<uint64_t>{1, 2, 3});
    romu::smoke::GeneratorByteSource src(st);
    const uint64_t budget = 200000;  // not a block multiple
    const auto r = ex::run_external("cat > " + sink.path(), src, budget, log.path());
    EXPECT_EQ(r.status, ex::Status::completed);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_FALSE(r.pipe_closed_early);
    EXPECT_EQ(r.bytes_sent, budget);
    EXPECT_EQ(slurp(sink.path()), expected_bytes(budget));
}

TEST(External, ChildStoppingEarlyIsReported) {
    TempFile sink("external_head.bin"), log("external_head.log");
    auto st = romu::seed(romu::find_spec("romutrio"), std::vector<uint64_t>{1, 2, 3});
    romu::smoke::GeneratorByteSource src(st);
    const auto r = ex::run_external("head -c 5000 > " + sink.path(), src, 50'000'000,
                                    log.path());
    EXPECT_EQ(r.status, ex::Status::completed);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(r.pipe_closed_early);
    EXPECT_LT(r.bytes_sent, 50'000'000u);
    EXPECT_EQ(slurp(sink.path()), expected_bytes(5000));
}

TEST(External, ChildExitCodeIsPropagated) {
    TempFile log("external_exit.log");
    auto st = romu::seed(romu::find_spec("romutrio"), std::vector<uint64_t>{1, 2, 3});
    romu::smoke::GeneratorByteSource src(st);
    const auto r = ex::run_external("head -c 100 > /dev/null; exit 3", src, 100000, log.path());
    EXPECT_EQ(r.status, ex::Status::completed);
    EXPECT_EQ(r.exit_code, 3);
}

TEST(External, ChildOutputLandsInLogFile) {
    TempFile log("external_log.log");
    auto st = romu::seed(romu::find_spec("romutrio"), std::vector<uint64_t>{1, 2, 3});
    romu::smoke::GeneratorByteSource src(st);
    const auto r = ex::run_external("wc -c", src, 4096, log.path());
    EXPECT_EQ(r.status, ex::Status::completed);
    const auto logged = slurp(log.path());
    const std::string text(logged.begin(), logged.end());
    EXPECT_NE(text.find("4096"), std::string::npos);
}

TEST(External, MissingBinaryIsSpawnFailure) {
    TempFile log("external_missing.log");
    auto st = romu::seed(romu::find_spec("romutrio"), std::vector<uint64_t>{1, 2, 3});
    romu::smoke::GeneratorByteSource src(st);
    const auto r = ex::run_external("/nonexistent/tester-binary", src, 4096, log.path());
    EXPECT_EQ(r.status, ex::Status::spawn_failed);
}

TEST(External, EnvironmentVariableDrivesTheBridge) {
    TempFile sink("external_env.bin"), log("external_env.log");
    setenv(ex::kEnvVar, ("cat > " + sink.path()).c_str(), 1);
    auto st = romu::seed(romu::find_spec("romutrio"), std::vector<uint64_t>{1, 2, 3});
    romu::smoke::GeneratorByteSource src(st);
    const auto r = ex::run_external("", src, 1024, log.path());
    unsetenv(ex::kEnvVar);
    EXPECT_EQ(r.status, ex::Status::completed);
    EXPECT_EQ(slurp(sink.path()), expected_bytes(1024));
}

}  // namespace
