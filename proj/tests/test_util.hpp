#pragma once

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <random>
#include <string>
#include <vector>

// Shared helpers for the test binaries. Every randomized suite draws from
// test_rng(); the seed defaults to a fixed value and can be overridden with
// --seed=N on the command line (strip_seed_arg removes it before doctest
// parses argv) or the NETFORGE_TEST_SEED environment variable.
namespace testutil {

inline uint64_t& seed_storage() {
    static uint64_t seed = 0x5eed5eed1234ULL;
    return seed;
}

inline void init_seed_from_env() {
    if (const char* s = std::getenv("NETFORGE_TEST_SEED")) seed_storage() = std::strtoull(s, nullptr, 10);
}

inline int strip_seed_arg(int argc, char** argv) {
    init_seed_from_env();
    int out = 1;
    for (int i = 1; i < argc; ++i) {
        if (std::strncmp(argv[i], "--seed=", 7) == 0) {
            seed_storage() = std::strtoull(argv[i] + 7, nullptr, 10);
        } else {
            argv[out++] = argv[i];
        }
    }
    return out;
}

inline std::mt19937_64 test_rng(uint64_t salt = 0) { return std::mt19937_64(seed_storage() ^ salt); }

} // namespace testutil
