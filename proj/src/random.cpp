#include "cayley/random.hpp"

namespace cayley {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
}

} // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index) noexcept
    : master_seed_(master_seed), stream_index_(stream_index) {
    std::uint64_t key = splitmix64(master_seed) ^ splitmix64(stream_index + 0x3c6ef372fe94f82bULL);
    for (auto& word : s_) {
        key += 0x9e3779b97f4a7c15ULL;
        word = splitmix64(key);
    }
    // All-zero is the one fixed point of xoshiro.
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) {
        s_[0] = 1;
    }
}

std::uint64_t RngStream::next_u64() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t RngStream::below(std::uint64_t bound) noexcept {
    unsigned __int128 product = static_cast<unsigned __int128>(next_u64()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            product = static_cast<unsigned __int128>(next_u64()) * bound;
            low = static_cast<std::uint64_t>(product);
        }
    }
    return static_cast<std::uint64_t>(product >> 64);
}

double RngStream::unit() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

} // namespace cayley
