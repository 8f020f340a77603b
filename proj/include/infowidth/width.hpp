#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "infowidth/bigcount.hpp"
#include "infowidth/core_measures.hpp"

namespace infowidth {

enum class Backend {
    Exact,      ///< big-integer counts, HighPrecision arithmetic, one final rounding
    LogDomain,  ///< binomial masses in long-double log domain, compensated sums
    Auto,       ///< Exact up to kExactSpaceLimit target elements, LogDomain beyond
};

inline constexpr std::uint64_t kExactSpaceLimit = 2048;

std::string_view to_string(Backend backend);
Backend parse_backend(std::string_view name);

/// Width query at description complexity l over a target space of `space_size` elements.
/// The admissible range is log2(2^N / (2^N - 1)) <= l <= N, i.e. between one member and
/// all nonempty subsets. When l comes from an integral member count, `members` carries it
/// exactly.
struct WidthQuery {
    std::uint64_t space_size = 1;
    double l = 0.0;
    Backend backend = Backend::Auto;
    std::optional<BigCount> members;

    static WidthQuery from_bits(std::uint64_t space_size, double l, Backend backend = Backend::Auto);
    static WidthQuery from_members(std::uint64_t space_size, BigCount members, Backend backend = Backend::Auto);
};

struct WidthResult {
    double width_bits = 0.0;       ///< I*(l)
    std::uint64_t threshold = 0;   ///< r(l)
    Backend backend = Backend::Exact;
    double accuracy_bound = 0.0;   ///< absolute error bound on width_bits (heuristic for LogDomain)
};

/// Smallest a with sum_{i=1..a} C(N, i) >= |Z| 2^-l.
std::uint64_t threshold_r(const WidthQuery& query);

/// I*(l): the largest whole-space information of any property with description complexity l.
WidthResult info_width(const WidthQuery& query);

/// Maximally informative property with exactly `members` members: every subset of size
/// below r plus enough subsets of size r. Returned as a profile.
PropertyCollection optimal_property(std::uint64_t space_size, const BigCount& members);

/// kappa*(l) = l / I*(l).
double kappa_star(const WidthQuery& query);

/// eta(x) = I(x:Y) / I*(l(x)).
double efficiency(const PropertyCollection& x);

/// Exhaustive max of I(x:Y) over every property with `members` nonempty members.
/// Independent oracle for info_width; space_size <= 4.
double brute_force_width(std::uint64_t space_size, std::uint64_t members, unsigned threads = 1);

/// Provider width by enumeration: max over properties of min over informative target
/// sets y of I(x:y). space_size <= 3.
double provider_width_bruteforce(std::uint64_t space_size, std::uint64_t members);

}  // namespace infowidth
