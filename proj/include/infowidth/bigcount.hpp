#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace infowidth {

/// Arbitrary-precision nonnegative count. Cardinalities such as |P(P(F))| = 2^(2^n)
/// overflow every machine type long before the interesting regimes.
using BigCount = boost::multiprecision::cpp_int;

/// ~166-bit binary float used where counts must be mixed with logarithms without
/// losing the exactness of the counts themselves.
using HighPrecision = boost::multiprecision::cpp_bin_float_50;

/// Base-2 logarithm measured in bits.
using LogBits = double;

BigCount pow2(std::uint64_t exponent);

/// C(n, k); zero when k > n.
BigCount binomial(std::uint64_t n, std::uint64_t k);

/// Row C(n, 0), ..., C(n, kmax) by the multiplicative recurrence.
std::vector<BigCount> binomial_row(std::uint64_t n, std::uint64_t kmax);

/// log2 of a positive count. Uses the bit length plus a 64-bit leading window, so the
/// result carries the full double mantissa regardless of magnitude.
LogBits log2_count(const BigCount& value);

/// a / b as a double with ~1 ulp relative error, for arbitrarily large operands.
double ratio_to_double(const BigCount& numerator, const BigCount& denominator);

/// Number of significant bits (0 for zero).
std::uint64_t bit_length(const BigCount& value);

/// Exact log2 for powers of two, otherwise log(k)/log(2) at HighPrecision.
HighPrecision log2_hp(std::uint64_t k);
HighPrecision log2_hp(const HighPrecision& x);

BigCount parse_count(std::string_view decimal);
std::string format_count(const BigCount& value);

}  // namespace infowidth
