#pragma once

#include "goldbach/natural.hpp"
#include "goldbach/primality.hpp"
#include "goldbach/random_stream.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace goldbach {

enum class NStrategy { ExactPrimorial, PrimorialMultiple, RandomEven };

// Generator configuration. pa_digits must keep p_a below n/2: for the
// digit-driven strategies that is 1 <= pa_digits < n_digits/2; for
// ExactPrimorial the bound is checked against the primorial itself, since
// the effective n comes from primorial_k rather than n_digits.
struct GpgaConfig {
    int n_digits = 45;
    int pa_digits = 6;
    NStrategy n_strategy = NStrategy::PrimorialMultiple;
    int primorial_k = 6;
    PrimalityPolicy policy;
    std::uint64_t max_attempts = 100000;
    std::uint64_t seed = 0;

    void validate() const; // throws ConfigError
};

struct AttemptRecord {
    Natural p_a;
    PrimalityVerdict verdict; // verdict on p_b = n - p_a
};

// One accepted generation: p_a + p_b = n exactly; p_b prime or probable
// prime under the configured policy; attempts counts p_b tests only.
struct GenerationRecord {
    Natural n;
    Natural p_a;
    Natural p_b;
    std::uint64_t attempts = 0;
    std::vector<AttemptRecord> per_attempt_log; // populated when requested
};

struct BaselineResult {
    Natural prime;
    std::uint64_t attempts = 0;
};

// max_attempts exceeded; carries the full attempt log.
class GenerationExhausted : public std::runtime_error {
public:
    GenerationExhausted(std::string what, GenerationRecord partial)
        : std::runtime_error(std::move(what)), partial_record(std::move(partial)) {}
    GenerationRecord partial_record;
};

// Draw fresh uniform d-digit values and test each until one is accepted.
// Every draw counts as one attempt.
BaselineResult baseline_generate(int digits, const PrimalityPolicy& policy, RandomStream& rng,
                                 std::uint64_t max_attempts = 1'000'000);

// Fix the even target: the exact primorial, a random primorial multiple of
// exactly n_digits digits, or a uniform even n_digits-digit value.
Natural choose_even_n(const GpgaConfig& config, RandomStream& rng);

// Fix n once, then subtract fresh pa_digits-digit primes until n - p_a is
// prime. p_a values dividing n are redrawn without counting an attempt.
GenerationRecord gpga_generate(const GpgaConfig& config, RandomStream& rng,
                               bool keep_log = false);

// Expected p_b tests: ln(n) / prod(p/(p-1)) over the known prime factors.
// Every listed prime must divide n. An empty list gives the ln(n) baseline.
double predicted_attempts(const Natural& n, const std::vector<std::uint64_t>& known_factors);

} // namespace goldbach
