#pragma once

#include <array>
#include <cstdint>

namespace cayley {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent random stream identified by (master_seed, stream_index).
//
// The xoshiro256** state is derived from the pair by a counter-based hash, so
// any stream can be materialized directly without stepping through others.
// That is what makes trial-level parallelism reproducible.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index) noexcept;

    [[nodiscard]] std::uint64_t master_seed() const noexcept { return master_seed_; }
    [[nodiscard]] std::uint64_t stream_index() const noexcept { return stream_index_; }

    std::uint64_t next_u64() noexcept;

    // Uniform on [0, bound), bound >= 1. Exact: Lemire's multiply-shift with rejection.
    std::uint64_t below(std::uint64_t bound) noexcept;

    // Uniform on [0, 1) with 53 random bits.
    double unit() noexcept;

    // UniformRandomBitGenerator interface, so std::shuffle and friends accept it.
    using result_type = std::uint64_t;
    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }
    result_type operator()() noexcept { return next_u64(); }

private:
    std::uint64_t master_seed_;
    std::uint64_t stream_index_;
    std::array<std::uint64_t, 4> s_{};
};

// Separates the stream families used by different samplers sharing one master seed.
[[nodiscard]] inline constexpr std::uint64_t derive_seed(std::uint64_t master_seed,
                                                         std::uint64_t domain) noexcept {
    return splitmix64(master_seed ^ splitmix64(domain ^ 0x6a09e667f3bcc909ULL));
}

} // namespace cayley
