#include "goldbach/natural.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace goldbach {

Natural parse_natural(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty string is not a natural number");
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("non-digit character in natural number: '" + text + "'");
    }
    if (text.size() > 1 && text.front() == '0')
        throw std::invalid_argument("leading zeros are not canonical: '" + text + "'");
    Natural value;
    if (value.set_str(text, 10) != 0)
        throw std::invalid_argument("unparsable natural number: '" + text + "'");
    return value;
}

std::string render_natural(const Natural& value) {
    return value.get_str(10);
}

std::size_t decimal_digits(const Natural& value) {
    if (value == 0)
        return 1;
    // mpz_sizeinbase is exact or one too large for base 10; correct downward.
    std::size_t n = mpz_sizeinbase(value.get_mpz_t(), 10);
    if (n > 1 && value < pow10(static_cast<unsigned>(n - 1)))
        --n;
    return n;
}

Natural pow10(unsigned exponent) {
    Natural r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
    return r;
}

bool fits_u64(const Natural& value) {
    if (value < 0)
        return false;
    return mpz_sizeinbase(value.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Natural& value) {
    if (!fits_u64(value))
        throw std::domain_error("value does not fit in 64 bits: " + render_natural(value));
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
    return out;
}

double natural_log(const Natural& value) {
    if (value < 1)
        throw std::domain_error("natural_log requires value >= 1");
    signed long exp = 0;
    double mant = mpz_get_d_2exp(&exp, value.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * M_LN2;
}

} // namespace goldbach
