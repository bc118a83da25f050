#pragma once

#include <cstdint>
#include <random>

namespace gotcent {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Expands one master seed into independent streams keyed by a counter tuple.
/// Every call site uses a distinct (stream, a, b, c), so experiment cells are
/// independent of each other and individually re-runnable.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                    std::uint64_t a = 0, std::uint64_t b = 0,
                                    std::uint64_t c = 0) noexcept {
    std::uint64_t s = splitmix64(master ^ 0x6a09e667f3bcc909ULL);
    s = splitmix64(s ^ splitmix64(stream + 1));
    s = splitmix64(s ^ splitmix64(a + 1));
    s = splitmix64(s ^ splitmix64(b + 1));
    s = splitmix64(s ^ splitmix64(c + 1));
    return s;
}

/// mt19937_64 with self-contained draw helpers (no std distributions), so a
/// seeded run reproduces exactly regardless of the standard library in use.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Unbiased uniform integer in [0, bound); bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t x = engine_();
            if (x >= threshold) {
                return x % bound;
            }
        }
    }

    bool bernoulli(double p) { return next_unit() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace gotcent
