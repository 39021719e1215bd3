#pragma once

#include "goldbach/natural.hpp"
#include "goldbach/random_stream.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace goldbach {

enum class Classification { Prime, Composite, ProbablePrime };

enum class TestMethod {
    TrialDivision,
    MillerRabinDeterministic,
    MillerRabinProbabilistic,
    Aks,
};

// Prime/Composite are certain claims; ProbablePrime only comes from the
// probabilistic Miller-Rabin path. A factor witness, when present, divides
// the input; base witnesses are MR bases or AKS a-values that exposed
// compositeness.
struct PrimalityVerdict {
    Classification classification = Classification::Composite;
    TestMethod method = TestMethod::TrialDivision;
    std::optional<Natural> factor_witness;
    std::vector<Natural> base_witnesses;
    bool aks_fallback = false; // AKS was requested but the size limit forced MR

    bool is_prime_like() const { return classification != Classification::Composite; }
    bool is_certain() const { return classification != Classification::ProbablePrime; }
};

enum class PreferredMethod { MillerRabin, Aks };

struct PrimalityPolicy {
    int mr_rounds = 40;
    Natural deterministic_threshold = max_deterministic_threshold();
    Natural aks_size_limit = Natural(1) << 32;
    PreferredMethod preferred_method = PreferredMethod::MillerRabin;

    // Validity bound of the fixed base set {2,...,37}: 3.317... x 10^24.
    static const Natural& max_deterministic_threshold();

    // Throws std::domain_error when a field is out of range (rounds < 1,
    // threshold above the base-set validity bound, AKS limit beyond the
    // coefficient-arithmetic ceiling of 2^48).
    void validate() const;
};

// Fixed deterministic base set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}.
const std::vector<std::uint64_t>& deterministic_mr_bases();

// Divides n by 2, 3, 5, ... up to min(limit, isqrt(n)). Certain verdicts when
// the bound reaches isqrt(n); otherwise ProbablePrime meaning "no small factor".
PrimalityVerdict trial_division(const Natural& n, const Natural& limit);

// Below the deterministic threshold: certain verdict via the fixed base set.
// Above it: mr_rounds uniformly random bases in [2, n-2].
PrimalityVerdict miller_rabin(const Natural& n, const PrimalityPolicy& policy, RandomStream& rng);

// Deterministic polynomial-congruence test:
//   1. reject perfect powers;
//   2. find the least r with ord_r(n) > (log2 n)^2, screening gcd(n, r);
//   3. n <= r is prime;
//   4. check (X + a)^n == X^n + a  (mod X^r - 1, n)  for a = 1..sqrt(phi(r))*log2(n).
// Requires 2 <= n <= policy.aks_size_limit.
PrimalityVerdict aks(const Natural& n, const PrimalityPolicy& policy);

// Dispatcher: trial division by primes < 10^4 first, then the preferred
// method. AKS requests above the size limit fall back to MR with the
// fallback recorded on the verdict.
PrimalityVerdict is_prime(const Natural& n, const PrimalityPolicy& policy, RandomStream& rng);

namespace detail {
// Strong-pseudoprime check for odd n > 2, base reduced mod n. Exposed for
// cross-validation between the word-size and big-integer paths.
bool strong_probable_prime_u64(std::uint64_t n, std::uint64_t base);
bool strong_probable_prime(const Natural& n, const Natural& base);
} // namespace detail

} // namespace goldbach
