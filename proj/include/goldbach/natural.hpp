#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace goldbach {

// Arbitrary-precision non-negative integer. Backed by GMP; the parse/render
// boundary enforces non-negativity and canonical decimal form.
using Natural = mpz_class;

// Strict decimal parse: digits only, no sign, no leading zeros ("0" is the
// only string starting with '0'). Throws std::invalid_argument otherwise.
Natural parse_natural(const std::string& text);

// Canonical decimal rendering, "0" for zero. parse_natural(render_natural(x)) == x.
std::string render_natural(const Natural& value);

// Number of digits in the decimal rendering (1 for zero).
std::size_t decimal_digits(const Natural& value);

// 10^exponent.
Natural pow10(unsigned exponent);

bool fits_u64(const Natural& value);
std::uint64_t to_u64(const Natural& value); // throws std::domain_error if it does not fit

// ln(value) for value >= 1, via mantissa/exponent decomposition (exact enough
// for the density model at any digit count).
double natural_log(const Natural& value);

} // namespace goldbach
