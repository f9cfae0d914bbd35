#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

namespace noma {

/// Counter-based generator (Philox4x32-10). A stream is fully determined by
/// its 64-bit key and 64-bit stream id, so any trial can be regenerated in
/// isolation and results do not depend on how trials are scheduled.
class CounterRng {
public:
    CounterRng(std::uint64_t key, std::uint64_t stream) noexcept : key_(key), stream_(stream) {}

    /// Master stream for one seed.
    static CounterRng from_seed(std::uint64_t seed) noexcept { return {seed, 0}; }

    /// Independent child stream addressed by a path of ids.
    CounterRng fork(std::initializer_list<std::uint64_t> path) const noexcept;

    std::uint64_t next_u64() noexcept;

    /// Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform() noexcept;

    /// Unit-mean exponential by inversion.
    double exponential() noexcept;

    /// Gamma with integer shape as a sum of exponentials; mean shape*scale.
    double gamma_int(int shape, double scale) noexcept;

    bool bernoulli(double p) noexcept { return uniform() < p; }

    using result_type = std::uint64_t;
    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }
    result_type operator()() noexcept { return next_u64(); }

private:
    std::uint64_t key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int used_ = 4;
};

/// One Philox4x32-10 block. Exposed for known-answer tests.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) noexcept;

}  // namespace noma
