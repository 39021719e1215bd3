#include "goldbach/random_stream.hpp"

#include <stdexcept>
#include <vector>

namespace goldbach {
namespace {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

RandomStream::RandomStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed), stream_index_(stream_index) {
    std::uint64_t sm = master_seed;
    // Two mixing rounds fold the stream index in before state extraction.
    (void)splitmix64(sm);
    sm ^= 0xD1B54A32D192ED03ULL + stream_index;
    (void)splitmix64(sm);
    for (auto& word : state_)
        word = splitmix64(sm);
}

std::uint64_t RandomStream::next_u64() {
    // xoshiro256** by Blackman/Vigna.
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

std::uint64_t RandomStream::next_below_u64(std::uint64_t bound) {
    if (bound == 0)
        throw std::domain_error("next_below_u64: bound must be >= 1");
    // Classic unbiased rejection: discard the incomplete top interval.
    const std::uint64_t residue = std::uint64_t(-bound) % bound; // (2^64 - bound) mod bound
    for (;;) {
        const std::uint64_t x = next_u64();
        if (x >= residue)
            return x % bound;
    }
}

Natural RandomStream::next_below(const Natural& bound) {
    if (bound <= 0)
        throw std::domain_error("next_below: bound must be >= 1");
    if (fits_u64(bound))
        return Natural(static_cast<unsigned long>(next_below_u64(to_u64(bound))));

    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    const unsigned top_bits = static_cast<unsigned>(bits - (words - 1) * 64);
    const std::uint64_t top_mask =
        top_bits == 64 ? ~0ULL : ((std::uint64_t(1) << top_bits) - 1);

    std::vector<std::uint64_t> buffer(words);
    Natural candidate;
    for (;;) {
        for (std::size_t i = 0; i < words; ++i)
            buffer[i] = next_u64();
        buffer[words - 1] &= top_mask;
        mpz_import(candidate.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buffer.data());
        if (candidate < bound)
            return candidate;
    }
}

} // namespace goldbach
