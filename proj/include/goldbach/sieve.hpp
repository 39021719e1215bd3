#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace goldbach {

// Bit-packed odd-only sieve of Eratosthenes over [0, limit] with O(1) prime
// counting via per-word cumulative popcounts. Immutable after construction
// and freely shareable across threads.
class PrimeTable {
public:
    // Memory cap in stored bits (one bit per odd number), ~10^9 by default.
    static constexpr std::uint64_t kDefaultBitCap = 1'000'000'000ULL;

    explicit PrimeTable(std::uint64_t limit, std::uint64_t bit_cap = kDefaultBitCap);

    std::uint64_t limit() const { return limit_; }

    bool is_prime(std::uint64_t n) const {
        if (n > limit_)
            throw std::domain_error("PrimeTable::is_prime: n exceeds the table limit");
        if (n < 3)
            return n == 2;
        if ((n & 1) == 0)
            return false;
        const std::uint64_t j = n >> 1;
        return (words_[j >> 6] >> (j & 63)) & 1;
    }

    // pi(x) for x <= limit.
    std::uint64_t count_upto(std::uint64_t x) const;

    std::uint64_t prime_count() const { return count_upto(limit_); }

    // Calls f(p) for each prime p in [lo, hi] ∩ [0, limit], ascending.
    template <typename F>
    void for_each_prime(std::uint64_t lo, std::uint64_t hi, F&& f) const {
        if (hi > limit_)
            hi = limit_;
        if (lo > hi)
            return;
        if (lo <= 2 && hi >= 2)
            f(std::uint64_t(2));
        std::uint64_t j = lo >> 1; // index of first odd number >= lo
        if (j < 1)
            j = 1;
        const std::uint64_t j_end = (hi - 1) >> 1;         // last odd index <= hi (hi>=3 here when used)
        if (hi < 3 || j > j_end)
            return;
        std::uint64_t w = j >> 6;
        const std::uint64_t w_end = j_end >> 6;
        std::uint64_t bits = words_[w] & (~0ULL << (j & 63));
        for (;;) {
            std::uint64_t masked = bits;
            if (w == w_end)
                masked &= (j_end & 63) == 63 ? ~0ULL : ((1ULL << ((j_end & 63) + 1)) - 1);
            while (masked) {
                const int b = __builtin_ctzll(masked);
                masked &= masked - 1;
                f(((w << 6) + static_cast<std::uint64_t>(b)) * 2 + 1);
            }
            if (w == w_end)
                break;
            bits = words_[++w];
        }
    }

    std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) const;

private:
    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> words_; // bit j <=> 2j+1 prime (j >= 1)
    std::vector<std::uint64_t> cum_;   // cum_[w] = popcount of words_[0..w)
};

// Segmented sieve over [lo, hi]: bit (i - lo) set iff i prime.
class RangeTable {
public:
    static constexpr std::uint64_t kDefaultSegmentCap = 1ULL << 24;

    RangeTable(std::uint64_t lo, std::uint64_t hi,
               std::uint64_t segment_cap = kDefaultSegmentCap);

    std::uint64_t lo() const { return lo_; }
    std::uint64_t hi() const { return hi_; }

    bool is_prime(std::uint64_t n) const {
        if (n < lo_ || n > hi_)
            return false;
        const std::uint64_t i = n - lo_;
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::uint64_t count() const;

    template <typename F>
    void for_each_prime(F&& f) const {
        for (std::uint64_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                f(lo_ + (w << 6) + static_cast<std::uint64_t>(b));
            }
        }
    }

    std::vector<std::uint64_t> primes() const;

private:
    std::uint64_t lo_ = 0;
    std::uint64_t hi_ = 0;
    std::vector<std::uint64_t> words_;
};

// Op-shaped conveniences.
PrimeTable sieve_upto(std::uint64_t limit);
RangeTable primes_in_range(std::uint64_t lo, std::uint64_t hi);

// pi(x) via a freshly built table; for one-off queries, not inner loops.
std::uint64_t prime_count_upto(std::uint64_t x);

} // namespace goldbach
