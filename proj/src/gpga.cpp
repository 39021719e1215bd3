#include "goldbach/gpga.hpp"

#include "goldbach/errors.hpp"
#include "goldbach/numeric.hpp"

namespace goldbach {

void GpgaConfig::validate() const {
    policy.validate();
    if (max_attempts < 1)
        throw ConfigError("GpgaConfig: max_attempts must be >= 1");
    if (pa_digits < 1)
        throw ConfigError("GpgaConfig: pa_digits must be >= 1");
    if (primorial_k < 1 && n_strategy != NStrategy::RandomEven)
        throw ConfigError("GpgaConfig: primorial_k must be >= 1");
    if (n_strategy == NStrategy::ExactPrimorial) {
        // p_a must stay below n/2 for the actual primorial.
        const Natural product = primorial(primorial_k).product;
        if (2 * (pow10(static_cast<unsigned>(pa_digits)) - 1) >= product)
            throw ConfigError("GpgaConfig: pa_digits too large for primorial k=" +
                              std::to_string(primorial_k));
    } else {
        if (n_digits < 2)
            throw ConfigError("GpgaConfig: n_digits must be >= 2");
        if (2 * pa_digits >= n_digits)
            throw ConfigError("GpgaConfig: requires pa_digits < n_digits/2");
    }
}

BaselineResult baseline_generate(int digits, const PrimalityPolicy& policy, RandomStream& rng,
                                 std::uint64_t max_attempts) {
    if (digits < 1)
        throw ConfigError("baseline_generate: digits must be >= 1");
    for (std::uint64_t attempt = 1; attempt <= max_attempts; ++attempt) {
        Natural candidate = random_natural_with_digits(digits, rng);
        if (is_prime(candidate, policy, rng).is_prime_like())
            return {std::move(candidate), attempt};
    }
    throw GenerationExhausted("baseline_generate: no prime found within " +
                              std::to_string(max_attempts) + " attempts",
                              GenerationRecord{});
}

Natural choose_even_n(const GpgaConfig& config, RandomStream& rng) {
    config.validate();
    switch (config.n_strategy) {
    case NStrategy::ExactPrimorial:
        return primorial(config.primorial_k).product;
    case NStrategy::PrimorialMultiple: {
        const Natural product = primorial(config.primorial_k).product;
        const Natural lo = pow10(static_cast<unsigned>(config.n_digits - 1));
        const Natural hi = pow10(static_cast<unsigned>(config.n_digits)) - 1;
        Natural m_lo = (lo + product - 1) / product; // ceil
        Natural m_hi = hi / product;                 // floor
        if (m_lo > m_hi)
            throw ConfigError("choose_even_n: primorial k=" + std::to_string(config.primorial_k) +
                              " has no multiple with " + std::to_string(config.n_digits) +
                              " digits");
        const Natural m = m_lo + rng.next_below(m_hi - m_lo + 1);
        return m * product; // even: the primorial includes 2
    }
    case NStrategy::RandomEven: {
        const Natural lo = pow10(static_cast<unsigned>(config.n_digits - 1)); // even for d >= 2
        const Natural hi = pow10(static_cast<unsigned>(config.n_digits)) - 1;
        const Natural evens = (hi - lo) / 2 + 1;
        return lo + 2 * rng.next_below(evens);
    }
    }
    throw ConfigError("choose_even_n: unknown strategy");
}

GenerationRecord gpga_generate(const GpgaConfig& config, RandomStream& rng, bool keep_log) {
    config.validate();
    GenerationRecord record;
    record.n = choose_even_n(config, rng);
    const Natural half = record.n / 2;

    for (std::uint64_t attempt = 1; attempt <= config.max_attempts; ++attempt) {
        Natural p_a;
        for (std::uint64_t redraws = 0;; ++redraws) {
            if (redraws > 10000)
                throw ConfigError("gpga_generate: no usable p_a with " +
                                  std::to_string(config.pa_digits) + " digits for this n");
            p_a = baseline_generate(config.pa_digits, config.policy, rng).prime;
            // A p_a dividing n makes p_b share that factor; redraw, not an attempt.
            if (!mpz_divisible_p(record.n.get_mpz_t(), p_a.get_mpz_t()) && p_a < half)
                break;
        }
        Natural p_b = record.n - p_a;
        PrimalityVerdict verdict = is_prime(p_b, config.policy, rng);
        const bool accepted = verdict.is_prime_like();
        record.per_attempt_log.push_back({p_a, std::move(verdict)});
        if (accepted) {
            record.p_a = std::move(p_a);
            record.p_b = std::move(p_b);
            record.attempts = attempt;
            if (!keep_log)
                record.per_attempt_log.clear();
            return record;
        }
    }
    record.attempts = config.max_attempts;
    throw GenerationExhausted("gpga_generate: no prime p_b within " +
                              std::to_string(config.max_attempts) + " attempts",
                              std::move(record));
}

double predicted_attempts(const Natural& n, const std::vector<std::uint64_t>& known_factors) {
    if (n < 2)
        throw std::domain_error("predicted_attempts requires n >= 2");
    double boost = 1.0;
    for (std::uint64_t p : known_factors) {
        if (p < 2 || !mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)))
            throw std::domain_error("predicted_attempts: " + std::to_string(p) +
                                    " does not divide n");
        boost *= static_cast<double>(p) / static_cast<double>(p - 1);
    }
    return natural_log(n) / boost;
}

} // namespace goldbach
