#pragma once

#include "goldbach/natural.hpp"

#include <array>
#include <cstdint>

namespace goldbach {

// Deterministic seeded random stream. The output sequence is a pure function
// of (master_seed, stream_index): the pair is mixed through a splitmix64
// chain into the state of a xoshiro256** generator. Streams with distinct
// indices are de-correlated for statistical purposes, which is what lets
// experiment trials fan out across workers without changing results.
//
// Single-owner by contract: one stream per worker, never shared.
//
// std::uniform_int_distribution is implementation-defined, so all range
// reduction here is explicit rejection sampling on raw 64-bit words.
class RandomStream {
public:
    RandomStream(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_index() const { return stream_index_; }

    std::uint64_t next_u64();

    // Uniform over [0, bound), bound >= 1.
    std::uint64_t next_below_u64(std::uint64_t bound);

    // Uniform over [0, bound), bound >= 1, arbitrary precision.
    Natural next_below(const Natural& bound);

private:
    std::array<std::uint64_t, 4> state_{};
    std::uint64_t master_seed_ = 0;
    std::uint64_t stream_index_ = 0;
};

} // namespace goldbach
