#include "goldbach/numeric.hpp"

#include "goldbach/sieve.hpp"

#include "doctest.h"

#include <map>
#include <numeric>
#include <stdexcept>

using namespace goldbach;

namespace {

// Independent repeated-squaring oracle, kept apart from the production path.
Natural slow_mod_pow(Natural base, Natural exp, const Natural& mod) {
    Natural result = 1;
    base %= mod;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t()))
            result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

} // namespace

TEST_CASE("mod_pow basics") {
    CHECK(mod_pow(2, 10, 1000) == 24);
    CHECK(mod_pow(5, 0, 7) == 1);
    CHECK(mod_pow(2, 560, 561) == 1); // Fermat pseudoprime to base 2
    CHECK(mod_pow(2, 560, 561) == slow_mod_pow(2, 560, 561));
    CHECK_THROWS_AS(mod_pow(2, 3, 1), std::domain_error);
    CHECK_THROWS_AS(mod_pow(2, 3, 0), std::domain_error);
}

TEST_CASE("mod_pow agrees with the oracle on random operands") {
    RandomStream rng(11, 0);
    for (int i = 0; i < 50; ++i) {
        const Natural base = rng.next_below(pow10(20));
        const Natural exp = rng.next_below(Natural(4096));
        const Natural mod = rng.next_below(pow10(18)) + 2;
        CHECK(mod_pow(base, exp, mod) == slow_mod_pow(base, exp, mod));
    }
}

TEST_CASE("Fermat identity against sieve-certified primes") {
    const PrimeTable table(1000000);
    RandomStream rng(5, 0);
    std::uint64_t primes_checked = 0;
    table.for_each_prime(2, 1000000, [&](std::uint64_t p) {
        for (int i = 0; i < 100; ++i) {
            const std::uint64_t a = 1 + rng.next_below_u64(p - 1); // 1 <= a < p, gcd(a, p) = 1
            if (mod_pow(Natural(static_cast<unsigned long>(a)),
                        Natural(static_cast<unsigned long>(p - 1)),
                        Natural(static_cast<unsigned long>(p))) != 1)
                FAIL("Fermat identity failed at p=", p, " a=", a);
        }
        ++primes_checked;
    });
    CHECK(primes_checked == 78498);
}

TEST_CASE("gcd basics") {
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(7, 1) == 1);
    CHECK(gcd(30030, 187) == 11); // 187 = 11 * 17
    CHECK(gcd(0, 5) == 5);
    CHECK_THROWS_AS(gcd(0, 0), std::domain_error);
}

TEST_CASE("is_perfect_power examples") {
    auto nine = is_perfect_power(9);
    REQUIRE(nine.has_value());
    CHECK(nine->first == 3);
    CHECK(nine->second == 2);

    auto eight = is_perfect_power(8);
    REQUIRE(eight.has_value());
    CHECK(eight->first == 2);
    CHECK(eight->second == 3);

    CHECK_FALSE(is_perfect_power(10).has_value());

    auto one = is_perfect_power(1); // documented convention
    REQUIRE(one.has_value());
    CHECK(one->first == 1);
    CHECK(one->second == 2);

    auto sixty_four = is_perfect_power(64); // smallest base wins: 2^6, not 8^2
    REQUIRE(sixty_four.has_value());
    CHECK(sixty_four->first == 2);
    CHECK(sixty_four->second == 6);

    CHECK_THROWS_AS(is_perfect_power(0), std::domain_error);
}

TEST_CASE("is_perfect_power agrees with exhaustive enumeration below 1e5") {
    // Oracle: every b^k <= 1e5 with k >= 2, keeping the smallest base.
    std::map<std::uint64_t, std::pair<std::uint64_t, unsigned>> oracle;
    for (std::uint64_t b = 2; b * b <= 100000; ++b) {
        std::uint64_t v = b * b;
        unsigned k = 2;
        while (v <= 100000) {
            auto it = oracle.find(v);
            if (it == oracle.end() || b < it->second.first)
                oracle[v] = {b, k};
            if (v > 100000 / b)
                break;
            v *= b;
            ++k;
        }
    }
    for (std::uint64_t n = 2; n <= 100000; ++n) {
        const auto result = is_perfect_power(Natural(static_cast<unsigned long>(n)));
        const auto expected = oracle.find(n);
        if (expected == oracle.end()) {
            CHECK_FALSE(result.has_value());
        } else {
            REQUIRE(result.has_value());
            CHECK(result->first == Natural(static_cast<unsigned long>(expected->second.first)));
        }
    }
}

TEST_CASE("multiplicative_order examples and brute-force agreement") {
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(2, 5) == 4);
    CHECK(multiplicative_order(10, 9) == 1);
    CHECK_THROWS_AS(multiplicative_order(6, 9), std::domain_error);
    CHECK_THROWS_AS(multiplicative_order(2, 1), std::domain_error);

    for (std::uint64_t r = 2; r <= 120; ++r) {
        for (std::uint64_t a = 1; a < r; ++a) {
            if (std::gcd(a, r) != 1)
                continue;
            std::uint64_t x = a % r, t = 1;
            while (x != 1) {
                x = x * a % r;
                ++t;
            }
            CHECK(multiplicative_order(a, r) == t);
        }
    }
}

TEST_CASE("primorial values and chain") {
    CHECK(primorial(3).product == 30);
    CHECK(primorial(4).product == 210);
    CHECK(primorial(1).product == 2);
    CHECK(primorial(10).product == 6469693230);

    const auto p4 = primorial(4);
    CHECK(p4.primes == std::vector<std::uint64_t>{2, 3, 5, 7});

    for (int k = 2; k <= 60; ++k) {
        const auto smaller = primorial(k - 1);
        const auto larger = primorial(k);
        CHECK(larger.product ==
              smaller.product * Natural(static_cast<unsigned long>(larger.primes.back())));
    }
    CHECK_THROWS_AS(primorial(0), std::domain_error);
}

TEST_CASE("random_natural_with_digits ranges and determinism") {
    RandomStream rng(3, 1);
    for (int i = 0; i < 500; ++i) {
        const Natural v = random_natural_with_digits(3, rng);
        CHECK(v >= 100);
        CHECK(v <= 999);
    }

    RandomStream a(77, 2), b(77, 2);
    for (int i = 0; i < 20; ++i)
        CHECK(random_natural_with_digits(7, a) == random_natural_with_digits(7, b));

    RandomStream big(8, 0);
    CHECK(decimal_digits(random_natural_with_digits(45, big)) == 45);

    CHECK_THROWS_AS(random_natural_with_digits(0, rng), std::domain_error);
}

TEST_CASE("random_natural_with_digits decile balance at d=4") {
    RandomStream rng(123, 0);
    std::vector<int> deciles(10, 0);
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        const std::uint64_t v = to_u64(random_natural_with_digits(4, rng));
        ++deciles[(v - 1000) / 900];
    }
    for (int count : deciles) {
        const double share = static_cast<double>(count) / draws;
        CHECK(share > 0.085); // 10% +/- 1.5%
        CHECK(share < 0.115);
    }
}
