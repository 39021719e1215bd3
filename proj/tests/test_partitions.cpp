#include "goldbach/partitions.hpp"

#include "goldbach/primality.hpp"
#include "goldbach/random_stream.hpp"

#include "doctest.h"

#include <algorithm>

using namespace goldbach;

namespace {

const PrimeTable& shared_table() {
    static const PrimeTable table(500000);
    return table;
}

} // namespace

TEST_CASE("candidate_h reference values") {
    const auto& t = shared_table();
    CHECK(candidate_h(t, 30) == 3);
    CHECK(candidate_h(t, 210) == 19);
    CHECK(candidate_h(t, 510) == 42);
    CHECK(candidate_h(t, 2310) == 151);
    CHECK(candidate_h(t, 490314) == 19148);
    CHECK_THROWS_AS(candidate_h(t, 7), std::domain_error);
    CHECK_THROWS_AS(candidate_h(t, 2), std::domain_error);
}

TEST_CASE("goldbach_g reference values") {
    const auto& t = shared_table();
    CHECK(goldbach_g(t, 30) == 3);
    CHECK(goldbach_g(t, 4) == 1);
    CHECK(goldbach_g(t, 6) == 1);
    CHECK(goldbach_g(t, 210) == 19);
}

TEST_CASE("partition_pairs worked examples") {
    const auto& t = shared_table();
    const auto pairs30 = partition_pairs(t, 30);
    CHECK(pairs30 == std::vector<PartitionPair>{{23, 7}, {19, 11}, {17, 13}});

    CHECK(partition_pairs(t, 6) == std::vector<PartitionPair>{{3, 3}});

    const auto pairs210 = partition_pairs(t, 210);
    REQUIRE(pairs210.size() == 19);
    CHECK(pairs210[0] == PartitionPair{199, 11});
    CHECK(pairs210[1] == PartitionPair{197, 13});
    CHECK(pairs210.back() == PartitionPair{107, 103});
    // 187 = 11 * 17 is not prime, so (187, 23) must be absent.
    CHECK(std::none_of(pairs210.begin(), pairs210.end(),
                       [](const PartitionPair& p) { return p.q == 187; }));
}

TEST_CASE("pairs validate against deterministic MR and match g") {
    const auto& t = shared_table();
    PrimalityPolicy policy;
    RandomStream rng(2, 0);
    for (std::uint64_t n : {30ULL, 210ULL, 1024ULL, 4096ULL, 9682ULL, 30030ULL}) {
        const auto pairs = partition_pairs(t, n);
        CHECK(pairs.size() == goldbach_g(t, n));
        for (const auto& pair : pairs) {
            CHECK(pair.q >= pair.p);
            CHECK(pair.q + pair.p == n);
            CHECK(miller_rabin(Natural(static_cast<unsigned long>(pair.p)), policy, rng)
                      .is_prime_like());
            CHECK(miller_rabin(Natural(static_cast<unsigned long>(pair.q)), policy, rng)
                      .is_prime_like());
        }
    }
}

TEST_CASE("percentage rounding and reference values") {
    const auto& t = shared_table();
    CHECK(percentage_scaled_2dp(goldbach_g(t, 30), candidate_h(t, 30)) == 10000);
    CHECK(percentage_scaled_2dp(goldbach_g(t, 78), candidate_h(t, 78)) == 7778); // 700/9
    CHECK(percentage_scaled_2dp(goldbach_g(t, 66), candidate_h(t, 66)) == 8571);
    CHECK(render_percentage_2dp(7778) == "77.78");
    CHECK(render_percentage_2dp(10000) == "100.00");
    CHECK(render_percentage_2dp(5000) == "50.00");
    CHECK(prime_partition_percentage(t, 30) == doctest::Approx(100.0));
    CHECK(prime_partition_percentage(t, 66) == doctest::Approx(600.0 / 7.0));
    CHECK_THROWS_AS(percentage_scaled_2dp(1, 0), std::domain_error);
}

TEST_CASE("equality_scan domains") {
    const auto& t = shared_table();

    const auto product_form = equality_scan(t, 250, ScanDomain::ProductForm);
    CHECK(product_form == std::vector<std::uint64_t>{6, 10, 14, 30, 42, 210});
    // The published claim's witnesses are all present.
    for (std::uint64_t n : {6ULL, 30ULL, 210ULL})
        CHECK(std::count(product_form.begin(), product_form.end(), n) == 1);

    const auto all_even_20 = equality_scan(t, 20, ScanDomain::AllEven);
    CHECK(all_even_20 == std::vector<std::uint64_t>{4, 6, 8, 10, 12, 14, 16, 18});

    const auto all_even_full = equality_scan(t, 100000, ScanDomain::AllEven);
    CHECK(all_even_full.back() == 210);
    CHECK(all_even_full ==
          std::vector<std::uint64_t>{4, 6, 8, 10, 12, 14, 16, 18, 24, 30, 36, 42, 48, 60, 90, 210});
}

TEST_CASE("product_form_values enumeration") {
    const auto small = product_form_values(50);
    std::vector<std::uint64_t> values;
    for (const auto& spec : small)
        values.push_back(spec.n);
    CHECK(values == std::vector<std::uint64_t>{6, 10, 14, 22, 26, 30, 34, 38, 42, 46});
    CHECK(small.front().prime_factors == std::vector<std::uint64_t>{2, 3});

    const auto big = product_form_values(500000);
    bool found690 = false, found490314 = false;
    for (const auto& spec : big) {
        if (spec.n == 690)
            found690 = spec.prime_factors == std::vector<std::uint64_t>{2, 3, 5, 23};
        if (spec.n == 490314)
            found490314 = spec.prime_factors == std::vector<std::uint64_t>{2, 3, 11, 17, 19, 23};
    }
    CHECK(found690);
    CHECK(found490314);

    // Every value is even, squarefree, and the product of its factors.
    for (const auto& spec : small) {
        CHECK(spec.prime_factors.front() == 2);
        std::uint64_t product = 1;
        for (std::uint64_t p : spec.prime_factors)
            product *= p;
        CHECK(product == spec.n);
        CHECK(std::is_sorted(spec.prime_factors.begin(), spec.prime_factors.end()));
    }

    // max_factors prunes deeper products: with 2 factors, 30 = 2*3*5 is out.
    for (const auto& spec : product_form_values(1000, 2))
        CHECK(spec.prime_factors.size() == 2);
    CHECK_THROWS_AS(product_form_values(4), std::domain_error);
}

TEST_CASE("local maxima at small primorial-family bases") {
    const auto& t = shared_table();
    const auto rows = local_maxima_check(t, {30, 210, 8, 6, 2310, 30030});

    CHECK(rows[0].g_prev == 2);
    CHECK(rows[0].g == 3);
    CHECK(rows[0].g_next == 2);
    CHECK(rows[0].is_local_max);

    CHECK(rows[1].is_local_max); // 210

    CHECK(rows[2].g == 1); // g(8) = {3+5}
    CHECK_FALSE(rows[2].is_local_max);

    // 6 has flat neighbors: g(4) = g(6) = g(8) = 1.
    CHECK(rows[3].g_prev == 1);
    CHECK(rows[3].g == 1);
    CHECK(rows[3].g_next == 1);
    CHECK_FALSE(rows[3].is_local_max);

    CHECK(rows[4].is_local_max); // 2310
    CHECK(rows[5].is_local_max); // 30030
}

TEST_CASE("g <= h and oracle equivalence over a dense range") {
    const auto& t = shared_table();
    for (std::uint64_t n = 4; n <= 10000; n += 2) {
        const std::uint64_t g = goldbach_g(t, n);
        const std::uint64_t h = candidate_h(t, n);
        CHECK(g <= h);
        CHECK(g >= 1); // empirical Goldbach at desk scale

        // Independent count over the small side of each pair.
        std::uint64_t oracle = 0;
        for (std::uint64_t p = 2; p <= n / 2; ++p)
            if (t.is_prime(p) && t.is_prime(n - p))
                ++oracle;
        if (g != oracle)
            FAIL("goldbach_g mismatch at n=", n);
    }
}

TEST_CASE("candidate_h equals direct range enumeration") {
    const auto& t = shared_table();
    const auto primes = t.primes_in(2, 100000);
    for (std::uint64_t n = 4; n <= 100000; n += 2) {
        const auto lower = std::lower_bound(primes.begin(), primes.end(), n / 2);
        const auto upper = std::upper_bound(primes.begin(), primes.end(), n - 2);
        const auto direct = static_cast<std::uint64_t>(upper - lower);
        if (candidate_h(t, n) != direct)
            FAIL("candidate_h mismatch at n=", n);
    }
}

TEST_CASE("percentage is 100 exactly on equality members") {
    const auto& t = shared_table();
    const auto members = equality_scan(t, 10000, ScanDomain::AllEven);
    for (std::uint64_t n = 4; n <= 10000; n += 2) {
        const bool is_member = std::binary_search(members.begin(), members.end(), n);
        const bool is_hundred =
            percentage_scaled_2dp(goldbach_g(t, n), candidate_h(t, n)) == 10000 &&
            goldbach_g(t, n) == candidate_h(t, n);
        CHECK(is_member == is_hundred);
    }
}

TEST_CASE("partition_stats assembles the record") {
    const auto& t = shared_table();
    const auto stats = partition_stats(t, 30, true);
    CHECK(stats.n == 30);
    CHECK(stats.g == 3);
    CHECK(stats.h == 3);
    CHECK(stats.percentage == doctest::Approx(100.0));
    REQUIRE(stats.pairs.has_value());
    CHECK(stats.pairs->size() == 3);

    const auto no_pairs = partition_stats(t, 30, false);
    CHECK_FALSE(no_pairs.pairs.has_value());
}
