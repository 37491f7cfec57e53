#ifndef LXBBSCA_RNG_HPP
#define LXBBSCA_RNG_HPP

#include <cstdint>
#include <random>

namespace lxb {

/// Deterministic random stream: identical seeds give identical draw
/// sequences on every platform (the mt19937_64 output sequence is fixed by
/// the standard and the [0,1) mapping uses only the raw 64-bit output).
///
/// Trials must not share a stream; multi-trial drivers seed trial i with
/// base_seed + i.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Uniform on [0, 1): 53 random mantissa bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform on (0, 1]. Keeps log(u) finite for Laplace sampling.
    double uniform_open01() { return 1.0 - uniform01(); }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform index in {0, ..., n-1}; n must be positive.
    std::size_t uniform_index(std::size_t n) {
        return static_cast<std::size_t>(engine_() % n);
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace lxb

#endif
