#pragma once

#include <algorithm>
#include <cerrno>
#include <cstdint>
#include <vector>
#include <cstdlib>
#include <string>

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include "romu/smoke.hpp"

// Bridge to an external statistical tester (PractRand, TestU01, ...).
// The child is opaque: raw little-endian bytes go to its standard input,
// its output and exit status land in a log file. No command configured
// means a clean skip, not an error.

namespace romu::external {

inline constexpr const char* kEnvVar = "ROMU_EXTERNAL_TESTER";

enum class Status { completed, skipped, spawn_failed, broken_pipe };

inline std::string status_name(Status s) {
    switch (s) {
        case Status::completed: return "completed";
        case Status::skipped: return "skipped";
        case Status::spawn_failed: return "spawn_failed";
        case Status::broken_pipe: return "broken_pipe";
    }
    return "?";
}

struct BridgeResult {
    Status status = Status::skipped;
    int exit_code = 0;
    bool pipe_closed_early = false;  // child stopped reading before the budget
    uint64_t bytes_sent = 0;
    std::string log_path;
};

// Resolve the command: explicit argument wins, then the environment
// variable; empty means skip.
inline std::string resolve_command(const std::string& explicit_cmd) {
    if (!explicit_cmd.empty()) return explicit_cmd;
    const char* env = std::getenv(kEnvVar);
    return env ? std::string(env) : std::string();
}

inline BridgeResult run_external(const std::string& command, smoke::ByteSource& source,
                                 uint64_t budget_bytes, const std::string& log_path) {
    BridgeResult result;
    result.log_path = log_path;
    const std::string cmd = resolve_command(command);
    if (cmd.empty()) {
        result.status = Status::skipped;
        return result;
    }

    int fds[2];
    if (pipe(fds) != 0) {
        result.status = Status::spawn_failed;
        return result;
    }
    const int log_fd = open(log_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
    if (log_fd < 0) {
        close(fds[0]);
        close(fds[1]);
        result.status = Status::spawn_failed;
        return result;
    }

    const pid_t pid = fork();
    if (pid < 0) {
        close(fds[0]);
        close(fds[1]);
        close(log_fd);
        result.status = Status::spawn_failed;
        return result;
    }
    if (pid == 0) {
        dup2(fds[0], STDIN_FILENO);
        dup2(log_fd, STDOUT_FILENO);
        dup2(log_fd, STDERR_FILENO);
        close(fds[0]);
        close(fds[1]);
        close(log_fd);
        execl("/bin/sh", "sh", "-c", cmd.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }

    close(fds[0]);
    close(log_fd);
    // EPIPE instead of SIGPIPE when the child stops reading
    struct sigaction ignore{}, saved{};
    ignore.sa_handler = SIG_IGN;
    sigaction(SIGPIPE, &ignore, &saved);

    std::vector<uint8_t> buf(size_t{1} << 16);
    while (result.bytes_sent < budget_bytes) {
        const size_t want = static_cast<size_t>(
            std::min<uint64_t>(buf.size(), budget_bytes - result.bytes_sent));
        const size_t got = source.read(buf.data(), want);
        if (got == 0) break;
        size_t off = 0;
        while (off < got) {
            const ssize_t n = write(fds[1], buf.data() + off, got - off);
            if (n < 0) {
                if (errno == EINTR) continue;
                result.pipe_closed_early = true;
                break;
            }
            off += static_cast<size_t>(n);
            result.bytes_sent += static_cast<uint64_t>(n);
        }
        if (result.pipe_closed_early) break;
    }
    close(fds[1]);

    int wstatus = 0;
    waitpid(pid, &wstatus, 0);
    sigaction(SIGPIPE, &saved, nullptr);

    if (WIFEXITED(wstatus)) {
        result.exit_code = WEXITSTATUS(wstatus);
        result.status = (result.exit_code == 127) ? Status::spawn_failed : Status::completed;
    } else {
        result.exit_code = -1;
        result.status = Status::broken_pipe;
    }
    return result;
}

}  // namespace romu::external
