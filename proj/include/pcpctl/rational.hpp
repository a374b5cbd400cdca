#ifndef PCPCTL_RATIONAL_HPP
#define PCPCTL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pcpctl {

/// Exact rational number. All probabilities and squared moduli use this type.
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on anything else
/// (including a zero denominator).
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering, e.g. "13/16", "1", "0".
std::string to_string(const Rational& value);

/// num / den in lowest terms. mpq_class(num, den) alone does not reduce, and
/// GMP comparisons assume reduced operands.
Rational ratio(long num, unsigned long den);

/// 1 / 2^k.
Rational inverse_power_of_two(unsigned k);

}  // namespace pcpctl

#endif  // PCPCTL_RATIONAL_HPP
