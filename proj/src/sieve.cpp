#include "goldbach/sieve.hpp"

#include "goldbach/errors.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace goldbach {
namespace {

std::uint64_t integer_sqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

} // namespace

PrimeTable::PrimeTable(std::uint64_t limit, std::uint64_t bit_cap) {
    if (limit < 2)
        throw std::domain_error("PrimeTable: limit must be >= 2");
    const std::uint64_t odd_bits = (limit + 1) / 2; // odd numbers <= limit
    if (odd_bits > bit_cap)
        throw ResourceError("PrimeTable: limit " + std::to_string(limit) +
                            " exceeds the configured memory cap");
    limit_ = limit;
    const std::uint64_t word_count = (odd_bits + 63) / 64;
    words_.assign(word_count, ~0ULL);

    // Bit j represents 2j+1; clear j=0 (the number 1) and everything past limit.
    words_[0] &= ~1ULL;
    const std::uint64_t last = odd_bits - 1;
    words_[last >> 6] &= (last & 63) == 63 ? ~0ULL : ((1ULL << ((last & 63) + 1)) - 1);
    for (std::uint64_t w = (last >> 6) + 1; w < word_count; ++w)
        words_[w] = 0;

    const std::uint64_t root = integer_sqrt(limit);
    for (std::uint64_t p = 3; p <= root; p += 2) {
        if (!((words_[(p >> 1) >> 6] >> ((p >> 1) & 63)) & 1))
            continue;
        for (std::uint64_t m = p * p; m <= limit; m += 2 * p) {
            const std::uint64_t j = m >> 1;
            words_[j >> 6] &= ~(1ULL << (j & 63));
        }
    }

    cum_.assign(word_count + 1, 0);
    for (std::uint64_t w = 0; w < word_count; ++w)
        cum_[w + 1] = cum_[w] + static_cast<std::uint64_t>(std::popcount(words_[w]));
}

std::uint64_t PrimeTable::count_upto(std::uint64_t x) const {
    if (x > limit_)
        throw std::domain_error("count_upto: x exceeds the table limit");
    if (x < 2)
        return 0;
    if (x == 2)
        return 1;
    const std::uint64_t j = (x - 1) >> 1; // last odd index <= x
    const std::uint64_t w = j >> 6;
    const std::uint64_t mask = (j & 63) == 63 ? ~0ULL : ((1ULL << ((j & 63) + 1)) - 1);
    return 1 + cum_[w] + static_cast<std::uint64_t>(std::popcount(words_[w] & mask));
}

std::vector<std::uint64_t> PrimeTable::primes_in(std::uint64_t lo, std::uint64_t hi) const {
    std::vector<std::uint64_t> out;
    for_each_prime(lo, hi, [&](std::uint64_t p) { out.push_back(p); });
    return out;
}

RangeTable::RangeTable(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_cap) {
    if (lo < 2 || lo > hi)
        throw std::domain_error("RangeTable: requires 2 <= lo <= hi");
    if (hi - lo + 1 > segment_cap)
        throw std::domain_error("RangeTable: range width exceeds the segment cap");
    lo_ = lo;
    hi_ = hi;
    const std::uint64_t width = hi - lo + 1;
    words_.assign((width + 63) / 64, ~0ULL);
    if (width & 63)
        words_.back() = (1ULL << (width & 63)) - 1;

    const std::uint64_t root = integer_sqrt(hi);
    if (root >= 2) {
        const PrimeTable base(root);
        base.for_each_prime(2, root, [&](std::uint64_t p) {
            std::uint64_t start = ((lo + p - 1) / p) * p;
            if (start < p * p)
                start = p * p;
            for (std::uint64_t m = start; m <= hi; m += p) {
                const std::uint64_t i = m - lo;
                words_[i >> 6] &= ~(1ULL << (i & 63));
            }
        });
    }
    // A base prime inside the range survives since marking starts at p^2.
}

std::uint64_t RangeTable::count() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_)
        total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

std::vector<std::uint64_t> RangeTable::primes() const {
    std::vector<std::uint64_t> out;
    for_each_prime([&](std::uint64_t p) { out.push_back(p); });
    return out;
}

PrimeTable sieve_upto(std::uint64_t limit) {
    return PrimeTable(limit);
}

RangeTable primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    return RangeTable(lo, hi);
}

std::uint64_t prime_count_upto(std::uint64_t x) {
    if (x < 2)
        return 0;
    return PrimeTable(x).count_upto(x);
}

} // namespace goldbach
