#include "goldbach/partitions.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace goldbach {
namespace {

void check_even_n(const PrimeTable& table, std::uint64_t n) {
    if (n < 4 || (n & 1))
        throw std::domain_error("partition analytics require even n >= 4, got " +
                                std::to_string(n));
    if (n - 2 > table.limit())
        throw std::domain_error("prime table limit " + std::to_string(table.limit()) +
                                " too small for n = " + std::to_string(n));
}

} // namespace

std::uint64_t candidate_h(const PrimeTable& table, std::uint64_t n) {
    check_even_n(table, n);
    return table.count_upto(n - 2) - table.count_upto(n / 2 - 1);
}

std::uint64_t goldbach_g(const PrimeTable& table, std::uint64_t n) {
    check_even_n(table, n);
    std::uint64_t count = 0;
    table.for_each_prime(n / 2, n - 2, [&](std::uint64_t q) {
        if (table.is_prime(n - q))
            ++count;
    });
    return count;
}

std::vector<PartitionPair> partition_pairs(const PrimeTable& table, std::uint64_t n) {
    check_even_n(table, n);
    std::vector<PartitionPair> pairs;
    table.for_each_prime(n / 2, n - 2, [&](std::uint64_t q) {
        if (table.is_prime(n - q))
            pairs.push_back({q, n - q});
    });
    std::reverse(pairs.begin(), pairs.end()); // descending by q
    return pairs;
}

std::int64_t percentage_scaled_2dp(std::uint64_t g, std::uint64_t h) {
    if (h == 0)
        throw std::domain_error("percentage undefined for h = 0");
    const std::uint64_t numerator = 10000 * g;
    std::uint64_t quotient = numerator / h;
    const std::uint64_t remainder = numerator % h;
    if (2 * remainder >= h)
        ++quotient; // half away from zero (all values non-negative)
    return static_cast<std::int64_t>(quotient);
}

std::string render_percentage_2dp(std::int64_t scaled) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld.%02lld",
                  static_cast<long long>(scaled / 100),
                  static_cast<long long>(scaled % 100));
    return buf;
}

double prime_partition_percentage(const PrimeTable& table, std::uint64_t n) {
    const std::uint64_t h = candidate_h(table, n);
    const std::uint64_t g = goldbach_g(table, n);
    return 100.0 * static_cast<double>(g) / static_cast<double>(h);
}

std::vector<std::uint64_t> equality_scan(const PrimeTable& table, std::uint64_t limit,
                                         ScanDomain domain) {
    if (limit < 4)
        throw std::domain_error("equality_scan requires limit >= 4");
    std::vector<std::uint64_t> hits;
    auto attains_equality = [&](std::uint64_t n) {
        // g == h iff every candidate's complement is prime.
        bool all = true;
        table.for_each_prime(n / 2, n - 2, [&](std::uint64_t q) {
            if (all && !table.is_prime(n - q))
                all = false;
        });
        return all;
    };
    if (domain == ScanDomain::AllEven) {
        for (std::uint64_t n = 4; n <= limit; n += 2)
            if (attains_equality(n))
                hits.push_back(n);
    } else if (limit >= 6) {
        for (const auto& spec : product_form_values(limit))
            if (attains_equality(spec.n))
                hits.push_back(spec.n);
    }
    return hits;
}

std::vector<ProductFormSpec> product_form_values(std::uint64_t max_n, int max_factors) {
    if (max_n < 6)
        throw std::domain_error("product_form_values requires max_n >= 6");
    if (max_factors < 2)
        throw std::domain_error("product_form_values requires max_factors >= 2");

    const PrimeTable odd_primes(max_n / 2 + 1);
    std::vector<std::uint64_t> primes = odd_primes.primes_in(3, max_n / 2);

    std::vector<ProductFormSpec> out;
    std::vector<std::uint64_t> factors{2};

    // DFS over ascending odd primes; every node with >= 2 factors is a value.
    auto extend = [&](auto&& self, std::size_t start, std::uint64_t product) -> void {
        for (std::size_t i = start; i < primes.size(); ++i) {
            const std::uint64_t p = primes[i];
            if (product > max_n / p)
                break;
            const std::uint64_t value = product * p;
            factors.push_back(p);
            out.push_back({factors, value});
            if (static_cast<int>(factors.size()) < max_factors)
                self(self, i + 1, value);
            factors.pop_back();
        }
    };
    extend(extend, 0, 2);

    std::sort(out.begin(), out.end(),
              [](const ProductFormSpec& a, const ProductFormSpec& b) { return a.n < b.n; });
    return out;
}

std::vector<LocalMaximaRow> local_maxima_check(const PrimeTable& table,
                                               const std::vector<std::uint64_t>& bases) {
    std::vector<LocalMaximaRow> rows;
    rows.reserve(bases.size());
    for (std::uint64_t n : bases) {
        if (n < 6 || (n & 1))
            throw std::domain_error("local_maxima_check requires even n >= 6");
        LocalMaximaRow row;
        row.n = n;
        row.g_prev = goldbach_g(table, n - 2);
        row.g = goldbach_g(table, n);
        row.g_next = goldbach_g(table, n + 2);
        row.is_local_max = row.g > row.g_prev && row.g > row.g_next;
        rows.push_back(row);
    }
    return rows;
}

PartitionStats partition_stats(const PrimeTable& table, std::uint64_t n, bool with_pairs) {
    PartitionStats stats;
    stats.n = n;
    stats.h = candidate_h(table, n);
    stats.g = goldbach_g(table, n);
    stats.percentage = 100.0 * static_cast<double>(stats.g) / static_cast<double>(stats.h);
    if (with_pairs)
        stats.pairs = partition_pairs(table, n);
    return stats;
}

} // namespace goldbach
