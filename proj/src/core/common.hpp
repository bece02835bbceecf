#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace mdrn {

// Error categories map 1:1 onto the process exit codes used by the CLI and
// the status codes of the C API.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
    static constexpr int code = 2;
};

struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
    static constexpr int code = 3;
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
    static constexpr int code = 4;
};

#define MDRN_CHECK(cond, msg)                          \
    do {                                               \
        if (!(cond)) throw std::invalid_argument(msg); \
    } while (0)

// Deterministic 64-bit RNG. All randomness in the project flows from one of
// these, seeded from the run seed, so identical seeds give identical runs.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    uint64_t next_u64() {
        // xorshift64* — small, portable and reproducible across platforms
        uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545f4914f6cdd1dull;
    }

    // uniform in [0, 1)
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n)
    int64_t uniform_int(int64_t n) { return int64_t(next_u64() % uint64_t(n)); }

    // derive an independent stream (for per-scene / per-epoch seeding)
    uint64_t fork(uint64_t salt) {
        uint64_t x = state_ ^ (salt * 0xff51afd7ed558ccdull + 0x9e3779b97f4a7c15ull);
        x ^= x >> 33;
        x *= 0xc4ceb9fe1a85ec53ull;
        x ^= x >> 33;
        return x ? x : 1;
    }

private:
    uint64_t state_;
};

// Global worker-thread count. 0 means "use all hardware threads". Every
// parallel loop partitions work by a fixed rule and never reduces across
// threads, so results are bit-identical for any thread count.
void set_thread_count(int n);
int thread_count();

// Runs fn(begin, end) over a fixed contiguous partition of [0, n).
void parallel_for(int64_t n, const std::function<void(int64_t, int64_t)>& fn);

}  // namespace mdrn
