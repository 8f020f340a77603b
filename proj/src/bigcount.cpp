#include "infowidth/bigcount.hpp"

#include <bit>
#include <cmath>

#include "infowidth/errors.hpp"

namespace infowidth {

namespace mp = boost::multiprecision;

BigCount pow2(std::uint64_t exponent) {
    BigCount out = 0;
    mp::bit_set(out, static_cast<unsigned>(exponent));
    return out;
}

BigCount binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;
    }
    return c;
}

std::vector<BigCount> binomial_row(std::uint64_t n, std::uint64_t kmax) {
    if (kmax > n) kmax = n;
    std::vector<BigCount> row;
    row.reserve(kmax + 1);
    row.emplace_back(1);
    for (std::uint64_t k = 1; k <= kmax; ++k) {
        BigCount next = row.back() * (n - k + 1);
        next /= k;
        row.push_back(std::move(next));
    }
    return row;
}

std::uint64_t bit_length(const BigCount& value) {
    if (value.is_zero()) return 0;
    return static_cast<std::uint64_t>(mp::msb(value)) + 1;
}

namespace {

// Leading 64 bits of value as (mantissa, shift) with value ~= mantissa * 2^shift.
std::pair<std::uint64_t, std::int64_t> leading_window(const BigCount& value) {
    const std::uint64_t bits = bit_length(value);
    if (bits <= 64) return {static_cast<std::uint64_t>(value), 0};
    const std::uint64_t shift = bits - 64;
    const BigCount top = value >> shift;
    return {static_cast<std::uint64_t>(top), static_cast<std::int64_t>(shift)};
}

}  // namespace

LogBits log2_count(const BigCount& value) {
    if (value.sign() <= 0) throw DomainError("log2 of a nonpositive count");
    const auto [mantissa, shift] = leading_window(value);
    return std::log2(static_cast<double>(mantissa)) + static_cast<double>(shift);
}

double ratio_to_double(const BigCount& numerator, const BigCount& denominator) {
    if (denominator.is_zero()) throw DomainError("ratio with zero denominator");
    if (numerator.is_zero()) return 0.0;
    const auto [nm, ns] = leading_window(numerator);
    const auto [dm, ds] = leading_window(denominator);
    const long double q = static_cast<long double>(nm) / static_cast<long double>(dm);
    return static_cast<double>(std::ldexp(q, static_cast<int>(ns - ds)));
}

HighPrecision log2_hp(std::uint64_t k) {
    if (k == 0) throw DomainError("log2 of zero");
    if (std::has_single_bit(k)) return HighPrecision(std::countr_zero(k));
    static const HighPrecision ln2 = mp::log(HighPrecision(2));
    return mp::log(HighPrecision(k)) / ln2;
}

HighPrecision log2_hp(const HighPrecision& x) {
    static const HighPrecision ln2 = mp::log(HighPrecision(2));
    return mp::log(x) / ln2;
}

BigCount parse_count(std::string_view decimal) {
    if (decimal.empty()) throw DomainError("empty count literal");
    for (char c : decimal) {
        if (c < '0' || c > '9') throw DomainError("count literal must be a nonnegative decimal integer: '" +
                                                  std::string(decimal) + "'");
    }
    return BigCount(std::string(decimal));
}

std::string format_count(const BigCount& value) { return value.str(); }

}  // namespace infowidth
