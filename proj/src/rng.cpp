#include "noma/rng.hpp"

#include <cmath>

namespace noma {

namespace {

constexpr std::uint32_t kWeylA = 0x9E3779B9;
constexpr std::uint32_t kWeylB = 0xBB67AE85;
constexpr std::uint32_t kMulA = 0xD2511F53;
constexpr std::uint32_t kMulB = 0xCD9E8D57;

// splitmix64 finalizer, used to derive child keys
std::uint64_t mix64(std::uint64_t z) noexcept
{
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key) noexcept
{
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = std::uint64_t{kMulA} * ctr[0];
        const std::uint64_t p1 = std::uint64_t{kMulB} * ctr[2];
        ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
               static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
        key[0] += kWeylA;
        key[1] += kWeylB;
    }
    return ctr;
}

CounterRng CounterRng::fork(std::initializer_list<std::uint64_t> path) const noexcept
{
    std::uint64_t k = mix64(key_ ^ mix64(stream_));
    for (std::uint64_t id : path) {
        k = mix64(k ^ mix64(id + 0x632BE59BD9B4E019ULL));
    }
    return {k, mix64(k + 1)};
}

std::uint64_t CounterRng::next_u64() noexcept
{
    if (used_ >= 4) {
        buffer_ = philox4x32({static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
                              static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)},
                             {static_cast<std::uint32_t>(key_), static_cast<std::uint32_t>(key_ >> 32)});
        ++block_;
        used_ = 0;
    }
    const std::uint64_t hi = buffer_[used_];
    const std::uint64_t lo = buffer_[used_ + 1];
    used_ += 2;
    return (hi << 32) | lo;
}

double CounterRng::uniform() noexcept
{
    // (k + 0.5) / 2^53 never hits 0 or 1
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::exponential() noexcept
{
    return -std::log(uniform());
}

double CounterRng::gamma_int(int shape, double scale) noexcept
{
    double sum = 0.0;
    for (int i = 0; i < shape; ++i) {
        sum += exponential();
    }
    return sum * scale;
}

}  // namespace noma
