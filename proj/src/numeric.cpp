#include "goldbach/numeric.hpp"

#include "goldbach/detail/u64_math.hpp"

#include <stdexcept>

namespace goldbach {

Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus) {
    if (modulus < 2)
        throw std::domain_error("mod_pow: modulus must be >= 2");
    if (fits_u64(base) && fits_u64(exponent) && fits_u64(modulus))
        return Natural(static_cast<unsigned long>(
            detail::powmod_u64(to_u64(base), to_u64(exponent), to_u64(modulus))));
    Natural result;
    mpz_powm(result.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    return result;
}

Natural gcd(const Natural& a, const Natural& b) {
    if (a == 0 && b == 0)
        throw std::domain_error("gcd(0, 0) is undefined");
    Natural result;
    mpz_gcd(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return result;
}

std::optional<std::pair<Natural, unsigned>> is_perfect_power(const Natural& n) {
    if (n < 1)
        throw std::domain_error("is_perfect_power requires n >= 1");
    if (n == 1)
        return std::make_pair(Natural(1), 2u); // 1 = 1^2, documented convention
    // The largest exponent gives the smallest base, so search downward.
    const auto max_k = static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2)); // >= log2(n)
    for (unsigned k = max_k; k >= 2; --k) {
        Natural root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0)
            return std::make_pair(root, k);
    }
    return std::nullopt;
}

Natural multiplicative_order(const Natural& a, const Natural& r) {
    if (r < 2)
        throw std::domain_error("multiplicative_order requires r >= 2");
    if (gcd(a, r) != 1)
        throw std::domain_error("multiplicative_order requires gcd(a, r) = 1");
    const Natural base = a % r;
    Natural x = base;
    Natural order = 1;
    while (x != 1) {
        x = (x * base) % r;
        ++order;
    }
    return order;
}

std::vector<std::uint64_t> first_primes(int count) {
    if (count < 0)
        throw std::domain_error("first_primes: count must be >= 0");
    std::vector<std::uint64_t> primes;
    primes.reserve(static_cast<std::size_t>(count));
    std::uint64_t candidate = 2;
    while (primes.size() < static_cast<std::size_t>(count)) {
        bool prime = true;
        for (std::uint64_t p : primes) {
            if (p * p > candidate)
                break;
            if (candidate % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime)
            primes.push_back(candidate);
        candidate += (candidate == 2) ? 1 : 2;
    }
    return primes;
}

PrimorialBase primorial(int k) {
    if (k < 1)
        throw std::domain_error("primorial requires k >= 1");
    PrimorialBase base;
    base.prime_count = k;
    base.primes = first_primes(k);
    base.product = 1;
    for (std::uint64_t p : base.primes)
        base.product *= Natural(static_cast<unsigned long>(p));
    return base;
}

Natural random_natural_with_digits(int digits, RandomStream& rng) {
    if (digits < 1)
        throw std::domain_error("random_natural_with_digits requires d >= 1");
    const Natural lo = digits == 1 ? Natural(1) : pow10(static_cast<unsigned>(digits - 1));
    const Natural width = pow10(static_cast<unsigned>(digits)) - lo; // 9 * 10^(d-1)
    return lo + rng.next_below(width);
}

} // namespace goldbach
