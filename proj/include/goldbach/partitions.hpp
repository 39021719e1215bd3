#pragma once

#include "goldbach/sieve.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace goldbach {

// One Goldbach pair (q, p): q >= p, q + p = n, both prime.
struct PartitionPair {
    std::uint64_t q = 0;
    std::uint64_t p = 0;
    friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
};

// Per-n partition record: g = Goldbach partition count, h = candidate count
// (primes in [n/2, n-2]), percentage = 100*g/h. g <= h always: each
// partition's larger element is a candidate.
struct PartitionStats {
    std::uint64_t n = 0;
    std::uint64_t g = 0;
    std::uint64_t h = 0;
    double percentage = 0.0;
    std::optional<std::vector<PartitionPair>> pairs;
};

// A squarefree product of distinct primes (first factor 2).
struct ProductFormSpec {
    std::vector<std::uint64_t> prime_factors;
    std::uint64_t n = 0;
};

enum class ScanDomain { AllEven, ProductForm };

struct LocalMaximaRow {
    std::uint64_t n = 0;
    std::uint64_t g_prev = 0;
    std::uint64_t g = 0;
    std::uint64_t g_next = 0;
    bool is_local_max = false;
};

// h(n): primes q with n/2 <= q <= n-2, computed as pi(n-2) - pi(n/2 - 1).
// n even, >= 4, n-2 within the table limit.
std::uint64_t candidate_h(const PrimeTable& table, std::uint64_t n);

// g(n): unordered prime pairs {p, q} with p + q = n; (n/2, n/2) counts once.
std::uint64_t goldbach_g(const PrimeTable& table, std::uint64_t n);

// All Goldbach pairs of n, larger element first, descending by q.
std::vector<PartitionPair> partition_pairs(const PrimeTable& table, std::uint64_t n);

// 100 * g(n) / h(n).
double prime_partition_percentage(const PrimeTable& table, std::uint64_t n);

// 100*g/h scaled by 100 and rounded half away from zero (exact integer
// arithmetic, e.g. g=7, h=9 -> 7778 meaning 77.78).
std::int64_t percentage_scaled_2dp(std::uint64_t g, std::uint64_t h);
std::string render_percentage_2dp(std::int64_t scaled);

// Ascending n in the domain with g(n) = h(n), n <= limit.
std::vector<std::uint64_t> equality_scan(const PrimeTable& table, std::uint64_t limit,
                                         ScanDomain domain);

// All squarefree products of >= 2 distinct primes including 2, value <= max_n,
// at most max_factors factors, ascending by value.
std::vector<ProductFormSpec> product_form_values(std::uint64_t max_n, int max_factors = 64);

// g at each base and its even neighbors; is_local_max iff strictly larger
// than both.
std::vector<LocalMaximaRow> local_maxima_check(const PrimeTable& table,
                                               const std::vector<std::uint64_t>& bases);

PartitionStats partition_stats(const PrimeTable& table, std::uint64_t n, bool with_pairs);

} // namespace goldbach
