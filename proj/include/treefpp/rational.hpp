#ifndef TREEFPP_RATIONAL_HPP
#define TREEFPP_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace treefpp {

// All exact arithmetic in the library runs on GMP. Int is an
// arbitrary-precision integer, Rat a canonical num/den fraction.
using Int = mpz_class;
using Rat = mpq_class;

/// Canonicalized rational from an integer pair, den != 0.
Rat make_rat(const Int& num, const Int& den);

/// mpz_class has no long long constructor; all library counts fit in long.
inline Int int_of(long long v) { return Int(static_cast<long>(v)); }

/// base^exp for nonnegative exp.
Int int_pow(const Int& base, unsigned long exp);

/// d! as an exact integer.
Int factorial(unsigned d);

/// Binomial coefficient C(n, k).
Int binomial(unsigned n, unsigned k);

/// "num/den" with canonical sign (den > 0); "0/1" for zero.
std::string rat_to_string(const Rat& q);

/// Parse "num/den" or a bare integer.
Rat rat_from_string(const std::string& text);

/// Decimal expansion of q truncated toward zero to `digits` fractional
/// digits, zero-padded (fixed width for a fixed digit count).
std::string decimal_truncated(const Rat& q, std::size_t digits);

/// Like decimal_truncated but with trailing fractional zeros removed
/// ("7/8", 6 -> "0.875"; "0/1" -> "0").
std::string decimal_trimmed(const Rat& q, std::size_t digits);

/// Number of decimal digits carried by a 2^-bits bracket (>= 1).
std::size_t decimal_digits_for_bits(unsigned precision_bits);

}  // namespace treefpp

#endif
