#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "infowidth/asymptotics.hpp"
#include "infowidth/core_measures.hpp"
#include "infowidth/function_classes.hpp"

namespace infowidth {

enum class Method { Exact, MonteCarlo, Asymptotic };

std::string_view to_string(Method method);
Method parse_method(std::string_view name);

struct ReportOptions {
    std::uint64_t trials = 100'000;  ///< Monte Carlo draws per class cardinality
    std::uint64_t seed = 1;
    unsigned threads = 0;
    Precondition precondition = Precondition::Strict;
};

/// I, H, l, kappa and eta of an explicit or profiled property over its own target space.
InfoReport exact_report(const PropertyCollection& x);

/// Efficiency I / I*(l) over a space of 2^n targets; nullopt (with a note) when l lies
/// outside the width range or the width vanishes.
std::optional<double> efficiency_at(unsigned n, double information_bits, double description_bits,
                                    std::vector<std::string>* notes = nullptr);

/// Full report for a property of function classes on [n].
///   Exact       n <= 4, by enumeration
///   MonteCarlo  stratified sampling (see mc_info_report)
///   Asymptotic  closed forms; efficiency from the log-domain width
InfoReport property_report(unsigned n, const PropertySpec& spec, Method method, const ReportOptions& options = {});

}  // namespace infowidth
