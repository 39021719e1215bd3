#include "goldbach/primality.hpp"

#include "goldbach/detail/u64_math.hpp"
#include "goldbach/errors.hpp"
#include "goldbach/numeric.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace goldbach {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using detail::mulmod_u64;
using detail::powmod_u64;

const std::vector<u64>& small_screen_primes() {
    static const std::vector<u64> primes = first_primes(1229); // all primes below 10^4
    return primes;
}

PrimalityVerdict composite_with_factor(TestMethod method, Natural factor) {
    PrimalityVerdict v;
    v.classification = Classification::Composite;
    v.method = method;
    v.factor_witness = std::move(factor);
    return v;
}

PrimalityVerdict certain(Classification c, TestMethod method) {
    PrimalityVerdict v;
    v.classification = c;
    v.method = method;
    return v;
}

} // namespace

namespace detail {

bool strong_probable_prime_u64(u64 n, u64 base) {
    base %= n;
    if (base == 0)
        return true; // base shares all of n's content; no information
    const u64 n_minus_1 = n - 1;
    u64 d = n_minus_1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod_u64(base, d, n);
    if (x == 1 || x == n_minus_1)
        return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n_minus_1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

bool strong_probable_prime(const Natural& n, const Natural& base) {
    if (fits_u64(n) && fits_u64(base))
        return strong_probable_prime_u64(to_u64(n), to_u64(base));
    const Natural reduced = base % n;
    if (reduced == 0)
        return true;
    const Natural n_minus_1 = n - 1;
    Natural d = n_minus_1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    Natural x = mod_pow(reduced, d, n);
    if (x == 1 || x == n_minus_1)
        return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n_minus_1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

} // namespace detail

const Natural& PrimalityPolicy::max_deterministic_threshold() {
    static const Natural bound("3317044064679887385961981");
    return bound;
}

void PrimalityPolicy::validate() const {
    if (mr_rounds < 1)
        throw std::domain_error("PrimalityPolicy: mr_rounds must be >= 1");
    if (deterministic_threshold > max_deterministic_threshold())
        throw std::domain_error(
            "PrimalityPolicy: deterministic_threshold exceeds the base-set validity bound");
    if (aks_size_limit > (Natural(1) << 48))
        throw std::domain_error("PrimalityPolicy: aks_size_limit exceeds the 2^48 ceiling");
}

const std::vector<u64>& deterministic_mr_bases() {
    static const std::vector<u64> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    return bases;
}

PrimalityVerdict trial_division(const Natural& n, const Natural& limit) {
    if (n < 0)
        throw std::domain_error("trial_division requires n >= 0");
    if (n < 2)
        return certain(Classification::Composite, TestMethod::TrialDivision); // unit convention
    if (n < 4)
        return certain(Classification::Prime, TestMethod::TrialDivision);

    Natural root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    const Natural bound = limit < root ? limit : root;

    if (bound >= 2 && mpz_even_p(n.get_mpz_t()))
        return composite_with_factor(TestMethod::TrialDivision, Natural(2));
    for (Natural f = 3; f <= bound; f += 2) {
        if (mpz_divisible_p(n.get_mpz_t(), f.get_mpz_t()))
            return composite_with_factor(TestMethod::TrialDivision, f);
    }
    if (limit >= root)
        return certain(Classification::Prime, TestMethod::TrialDivision);
    return certain(Classification::ProbablePrime, TestMethod::TrialDivision); // no small factor
}

PrimalityVerdict miller_rabin(const Natural& n, const PrimalityPolicy& policy, RandomStream& rng) {
    policy.validate();
    if (n < 0)
        throw std::domain_error("miller_rabin requires n >= 0");
    if (n < 2)
        return certain(Classification::Composite, TestMethod::MillerRabinDeterministic);
    if (n == 2 || n == 3)
        return certain(Classification::Prime, TestMethod::MillerRabinDeterministic);
    if (mpz_even_p(n.get_mpz_t()))
        return composite_with_factor(TestMethod::MillerRabinDeterministic, Natural(2));

    if (n < policy.deterministic_threshold) {
        for (u64 base : deterministic_mr_bases()) {
            if (!detail::strong_probable_prime(n, Natural(static_cast<unsigned long>(base)))) {
                PrimalityVerdict v = certain(Classification::Composite,
                                             TestMethod::MillerRabinDeterministic);
                v.base_witnesses.emplace_back(static_cast<unsigned long>(base));
                return v;
            }
        }
        return certain(Classification::Prime, TestMethod::MillerRabinDeterministic);
    }

    const Natural span = n - 3; // bases drawn uniformly from [2, n-2]
    for (int round = 0; round < policy.mr_rounds; ++round) {
        const Natural base = rng.next_below(span) + 2;
        if (!detail::strong_probable_prime(n, base)) {
            PrimalityVerdict v = certain(Classification::Composite,
                                         TestMethod::MillerRabinProbabilistic);
            v.base_witnesses.push_back(base);
            return v;
        }
    }
    return certain(Classification::ProbablePrime, TestMethod::MillerRabinProbabilistic);
}

namespace {

// --- AKS helpers (word-size coefficients, schoolbook ring arithmetic) ---

u64 euler_phi_u64(u64 r) {
    u64 result = r;
    for (u64 p = 2; p * p <= r; p += (p == 2) ? 1 : 2) {
        if (r % p == 0) {
            result -= result / p;
            while (r % p == 0)
                r /= p;
        }
    }
    if (r > 1)
        result -= result / r;
    return result;
}

u64 order_mod_u64(u64 n, u64 r) {
    const u64 base = n % r;
    u64 x = base;
    u64 order = 1;
    while (x != 1) {
        x = x * base % r; // r < 2^32 in practice, no overflow at the search sizes
        ++order;
    }
    return order;
}

// (X + a)^n modulo (X^r - 1, n), compared against X^(n mod r) + a.
bool aks_congruence_holds(u64 n, u64 r, u64 a) {
    std::vector<u64> poly(r, 0);
    std::vector<u128> acc(2 * r, 0);
    const u64 a_mod = a % n;
    poly[0] = a_mod;
    if (r > 1)
        poly[1] = 1; // r == 1 cannot happen: ord_1 is degenerate and never exceeds the threshold

    int bit = 63 - __builtin_clzll(n);
    for (--bit; bit >= 0; --bit) {
        // square
        std::fill(acc.begin(), acc.end(), u128(0));
        for (u64 i = 0; i < r; ++i) {
            const u64 ci = poly[i];
            if (ci == 0)
                continue;
            acc[2 * i] += static_cast<u128>(ci) * ci;
            const u64 twice = ci << 1; // ci < n <= 2^48
            for (u64 j = i + 1; j < r; ++j)
                acc[i + j] += static_cast<u128>(twice) * poly[j];
        }
        for (u64 k = 0; k < r; ++k) {
            u128 v = acc[k];
            if (k + r <= 2 * r - 2)
                v += acc[k + r];
            poly[k] = static_cast<u64>(v % n);
        }
        if ((n >> bit) & 1) {
            // multiply by (X + a): poly'[k] = a*poly[k] + poly[k-1 mod r]
            const u64 last = poly[r - 1];
            u64 prev = last;
            for (u64 k = 0; k < r; ++k) {
                const u64 cur = poly[k];
                poly[k] = static_cast<u64>(
                    (static_cast<u128>(a_mod) * cur + prev) % n);
                prev = cur;
            }
        }
    }

    const u64 xn = n % r; // expected: X^(n mod r) + a
    for (u64 k = 0; k < r; ++k) {
        u64 expected = 0;
        if (k == 0)
            expected = (xn == 0) ? (1 + a_mod) % n : a_mod;
        if (k == xn && xn != 0)
            expected = 1;
        if (poly[k] != expected)
            return false;
    }
    return true;
}

} // namespace

PrimalityVerdict aks(const Natural& n_in, const PrimalityPolicy& policy) {
    policy.validate();
    if (n_in < 2)
        throw std::domain_error("aks requires n >= 2");
    if (n_in > policy.aks_size_limit)
        throw SizeLimitError("aks: input exceeds the policy size limit (" +
                             render_natural(n_in) + ")");
    const u64 n = to_u64(n_in); // guaranteed by the 2^48 policy ceiling

    if (n == 2)
        return certain(Classification::Prime, TestMethod::Aks);

    if (auto power = is_perfect_power(n_in)) {
        PrimalityVerdict v = certain(Classification::Composite, TestMethod::Aks);
        v.factor_witness = power->first; // b divides b^k
        return v;
    }

    const long double log2n = std::log2(static_cast<long double>(n));
    const u64 order_floor = static_cast<u64>(log2n * log2n); // ord must exceed (log2 n)^2

    u64 r = 2;
    for (;; ++r) {
        if (r >= n)
            break; // step 3 below decides
        const u64 g = std::gcd(r, n);
        if (g > 1)
            return composite_with_factor(TestMethod::Aks, Natural(static_cast<unsigned long>(g)));
        if (order_mod_u64(n, r) > order_floor)
            break;
    }

    if (n <= r)
        return certain(Classification::Prime, TestMethod::Aks);

    const u64 phi = euler_phi_u64(r);
    const u64 a_limit = static_cast<u64>(
        std::ceil(std::sqrt(static_cast<long double>(phi)) * log2n)); // rounded up, conservative

    for (u64 a = 1; a <= a_limit; ++a) {
        if (!aks_congruence_holds(n, r, a)) {
            PrimalityVerdict v = certain(Classification::Composite, TestMethod::Aks);
            v.base_witnesses.emplace_back(static_cast<unsigned long>(a));
            return v;
        }
    }
    return certain(Classification::Prime, TestMethod::Aks);
}

PrimalityVerdict is_prime(const Natural& n, const PrimalityPolicy& policy, RandomStream& rng) {
    policy.validate();
    if (n < 0)
        throw std::domain_error("is_prime requires n >= 0");
    if (n < 2)
        return certain(Classification::Composite, TestMethod::TrialDivision);

    // Screen by the primes below 10^4; certain for n < 10^8.
    if (fits_u64(n)) {
        const u64 v = to_u64(n);
        for (u64 p : small_screen_primes()) {
            if (p * p > v)
                return certain(Classification::Prime, TestMethod::TrialDivision);
            if (v % p == 0) {
                if (v == p)
                    return certain(Classification::Prime, TestMethod::TrialDivision);
                return composite_with_factor(TestMethod::TrialDivision,
                                             Natural(static_cast<unsigned long>(p)));
            }
        }
    } else {
        for (u64 p : small_screen_primes()) {
            if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)))
                return composite_with_factor(TestMethod::TrialDivision,
                                             Natural(static_cast<unsigned long>(p)));
        }
    }

    if (policy.preferred_method == PreferredMethod::Aks) {
        if (n <= policy.aks_size_limit)
            return aks(n, policy);
        PrimalityVerdict v = miller_rabin(n, policy, rng);
        v.aks_fallback = true;
        return v;
    }
    return miller_rabin(n, policy, rng);
}

} // namespace goldbach
