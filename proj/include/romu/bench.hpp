#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "romu/generators.hpp"

// Micro-benchmark harness: per-call nanoseconds for each generator and
// for the interleaved RomuMono32 combos. Outputs are XOR-folded into a
// sink that ends up in the result, so nothing is dead code. Timings are
// hardware facts, reported and never asserted as fixed numbers.

namespace romu::bench {

struct Result {
    std::string name;
    double ns_per_call = 0;   // median over repetitions
    double cycles_per_call = 0;  // only when a clock frequency is supplied
    uint64_t sink = 0;
};

namespace detail {

template <typename Body>
Result measure(const std::string& name, uint64_t iterations, int repetitions, Body&& body) {
    std::vector<double> times;
    uint64_t sink = 0;
    for (int rep = 0; rep < repetitions; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        sink ^= body(iterations);
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count() /
                        static_cast<double>(iterations));
    }
    std::sort(times.begin(), times.end());
    Result r;
    r.name = name;
    r.ns_per_call = times[times.size() / 2];
    r.sink = sink;
    return r;
}

}  // namespace detail

// A RomuTrio rewired so every update depends on the freshly computed x:
// the dependency chain spans the whole step, killing the ILP the real
// generator is built around. Exists only as a timing baseline.
struct SerializedTrio {
    uint64_t x, y, z;
    uint64_t next() {
        x = kMultiplier64 * z;
        y = rotl(y - x, 12);
        z = rotl(z - y, 44);
        return x;
    }
};

inline Result run_case(const std::string& name, uint64_t iterations, int repetitions = 5) {
    using detail::measure;
    if (name == "romuquad") {
        return measure(name, iterations, repetitions, [](uint64_t n) {
            RomuQuad g(1, 2, 3, 4);
            uint64_t s = 0;
            for (uint64_t i = 0; i < n; ++i) s ^= g.next();
            return s;
        });
    }
    if (name == "romutrio") {
        return measure(name, iterations, repetitions, [](uint64_t n) {
            RomuTrio g(1, 2, 3);
            uint64_t s = 0;
            for (uint64_t i = 0; i < n; ++i) s ^= g.next();
            return s;
        });
    }
    if (name == "romuduo") {
        return measure(name, iterations, repetitions, [](uint64_t n) {
            RomuDuo g(1, 2);
            uint64_t s = 0;
            for (uint64_t i = 0; i < n; ++i) s ^= g.next();
            return s;
        });
    }
    if (name == "romuduojr") {
        return measure(name, iterations, repetitions, [](uint64_t n) {
            RomuDuoJr g(1, 2);
            uint64_t s = 0;
            for (uint64_t i = 0; i < n; ++i) s ^= g.next();
            return s;
        });
    }
    if (name == "romuquad32") {
        return measure(name, iterations, repetitions, [](uint64_t n) {
            RomuQuad32 g(1, 2, 3, 4);
            uint64_t s = 0;
            for (uint64_t i = 0; i < n; ++i) s ^= g.next();
            return s;
        });
    }
    if (name == "romutrio32") {
        return measure(name, iterations, repetitions, [](uint64_t n) {
            RomuTrio32 g(1, 2, 3);
            uint64_t s = 0;
            for (uint64_t i = 0; i < n; ++i) s ^= g.next();
            return s;
        });
    }
    if (name == "romumono32") {
        return measure(name, iterations, repetitions, [](uint64_t n) {
            RomuMono32 g(1);
            uint64_t s = 0;
            for (uint64_t i = 0; i < n; ++i) s ^= g.next();
            return s;
        });
    }
    if (name == "romumono") {
        return measure(name, iterations, repetitions, [](uint64_t n) {
            RomuMono g(1);
            uint64_t s = 0;
            for (uint64_t i = 0; i < n; ++i) s ^= g.next();
            return s;
        });
    }
    if (name == "mono32x2") {
        // two independent mono steps per call; the second is multiply-first
        // so both multiplications pipeline
        return measure(name, iterations, repetitions, [](uint64_t n) {
            uint32_t x = 1, y = 2;
            uint64_t s = 0;
            for (uint64_t i = 0; i < n; ++i) {
                x = rotl(x, 12) * 3611795771u;
                y *= 2540121707u;
                y = rotl(y, 14);
                s ^= x ^ y;
            }
            return s;
        });
    }
    if (name == "mono32x3") {
        return measure(name, iterations, repetitions, [](uint64_t n) {
            uint32_t x = 1, y = 2, z = 3;
            uint64_t s = 0;
            for (uint64_t i = 0; i < n; ++i) {
                x = rotl(x, 12) * 3611795771u;
                y *= 2540121707u;
                y = rotl(y, 14);
                z *= 2336447867u;
                z = rotl(z, 16);
                s ^= x ^ y ^ z;
            }
            return s;
        });
    }
    if (name == "serialized") {
        return measure(name, iterations, repetitions, [](uint64_t n) {
            SerializedTrio g{1, 2, 3};
            uint64_t s = 0;
            for (uint64_t i = 0; i < n; ++i) s ^= g.next();
            return s;
        });
    }
    throw std::invalid_argument("unknown bench case: " + name);
}

inline std::vector<std::string> default_cases() {
    return {"romuquad", "romutrio", "romuduo", "romuduojr", "romuquad32",
            "romutrio32", "romumono32", "mono32x2", "mono32x3"};
}

}  // namespace romu::bench
