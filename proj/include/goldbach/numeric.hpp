#pragma once

#include "goldbach/natural.hpp"
#include "goldbach/random_stream.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace goldbach {

// Product of the first `prime_count` primes, with the primes themselves.
struct PrimorialBase {
    int prime_count = 0;
    std::vector<std::uint64_t> primes;
    Natural product;
};

// base^exponent mod modulus. modulus >= 2 or std::domain_error.
Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus);

// gcd(a, b); (0, 0) is a domain error.
Natural gcd(const Natural& a, const Natural& b);

// Smallest-base representation n = b^k with k >= 2, if any (so 64 -> (2, 6)).
// n >= 1; by convention 1 -> (1, 2).
std::optional<std::pair<Natural, unsigned>> is_perfect_power(const Natural& n);

// Least t >= 1 with a^t == 1 (mod r). Requires r >= 2 and gcd(a, r) == 1.
Natural multiplicative_order(const Natural& a, const Natural& r);

// Primorial P_k# = product of the first k primes, k >= 1.
PrimorialBase primorial(int k);

// Uniform over [10^(d-1), 10^d - 1]; consumes the stream deterministically.
Natural random_natural_with_digits(int digits, RandomStream& rng);

// First `count` primes (2, 3, 5, ...).
std::vector<std::uint64_t> first_primes(int count);

} // namespace goldbach
