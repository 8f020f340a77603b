#include "infowidth/report.hpp"

#include <cmath>
#include <string>

#include "infowidth/errors.hpp"
#include "infowidth/random_classes.hpp"
#include "infowidth/width.hpp"

namespace infowidth {

std::string_view to_string(Method method) {
    switch (method) {
        case Method::Exact: return "exact";
        case Method::MonteCarlo: return "monte-carlo";
        case Method::Asymptotic: return "asymptotic";
    }
    return "exact";
}

Method parse_method(std::string_view name) {
    if (name == "exact") return Method::Exact;
    if (name == "mc" || name == "montecarlo" || name == "monte-carlo") return Method::MonteCarlo;
    if (name == "asym" || name == "asymptotic") return Method::Asymptotic;
    throw UnsupportedError("unknown method '" + std::string(name) + "' (expected exact, mc or asym)");
}

InfoReport exact_report(const PropertyCollection& x) {
    InfoReport r;
    r.method = "exact";
    r.information_bits = information(x, WholeSpace{});
    r.conditional_entropy_bits = conditional_entropy(x);
    r.description_bits = description_complexity(x);
    if (r.information_bits > 0.0) {
        r.cost = r.description_bits / r.information_bits;
        r.efficiency = efficiency(x);
    }
    return r;
}

std::optional<double> efficiency_at(unsigned n, double information_bits, double description_bits,
                                    std::vector<std::string>* notes) {
    if (!(information_bits > 0.0)) return std::nullopt;
    if (n >= 41) {
        if (notes) notes->push_back("efficiency not evaluated: width supports n <= 40");
        return std::nullopt;
    }
    try {
        const auto q = WidthQuery::from_bits(std::uint64_t{1} << n, description_bits, Backend::Auto);
        const double w = info_width(q).width_bits;
        if (!(w > 0.0)) return std::nullopt;
        return information_bits / w;
    } catch (const RangeError& e) {
        if (notes) notes->push_back(std::string("efficiency not evaluated: ") + e.what());
        return std::nullopt;
    }
}

namespace {

InfoReport asymptotic_report(unsigned n, const PropertySpec& spec, const ReportOptions& opt) {
    const double nn = static_cast<double>(n);
    InfoReport r;
    r.method = "asymptotic";
    auto flag = [&](bool met, const char* premise) {
        if (!met) r.notes.push_back(std::string("premise ") + premise + " does not hold");
    };
    if (const auto* s = std::get_if<Ld>(&spec)) {
        r.information_bits = ld_info(nn, s->d, opt.precondition);
        const IntervalBits l = ld_complexity(nn, s->d, opt.precondition);
        r.description_bits = l.midpoint();
        r.notes.push_back("description bits are the midpoint of [" + std::to_string(l.low) + ", " +
                          std::to_string(l.high) + "]");
        flag(s->d >= 1.0 && s->d < nn, "1 <= d < n");
    } else if (const auto* s = std::get_if<VdC>(&spec)) {
        r.information_bits = vdc_info(nn, s->d, opt.precondition);
        const FlaggedBits l = vdc_complexity(nn, s->d);
        r.description_bits = l.value;
        flag(l.precondition_met, "d > log2 n");
    } else if (const auto* s = std::get_if<Vd>(&spec)) {
        r.information_bits = vd_info(nn, s->d, opt.precondition);
        const FlaggedBits l = vd_complexity(nn, s->d);
        r.description_bits = l.value;
        flag(l.precondition_met, "d > log2 n");
        flag(nn < s->d * std::exp2(s->d), "n < d 2^d");
    } else if (const auto* s = std::get_if<VdSample>(&spec)) {
        s->sample.check_domain(n);
        const double m = static_cast<double>(s->sample.size());
        r.information_bits = vdsm_info(nn, s->d, m, opt.precondition);
        r.description_bits = vdsm_complexity(nn, s->d, m, opt.precondition);
        flag(nn < s->d * std::exp2(s->d), "n < d 2^d");
    } else if (const auto* s = std::get_if<Identity>(&spec)) {
        if (s->g.n() != n) throw DomainError("identity class defined on a different domain");
        return identity_report(n, static_cast<double>(s->g.size()));
    } else {
        throw UnsupportedError("expdecay has no closed-form description complexity; use expdecay_info");
    }
    r.conditional_entropy_bits = nn - r.information_bits;
    if (r.information_bits > 0.0) r.cost = r.description_bits / r.information_bits;
    r.efficiency = efficiency_at(n, r.information_bits, r.description_bits, &r.notes);
    return r;
}

}  // namespace

InfoReport property_report(unsigned n, const PropertySpec& spec, Method method, const ReportOptions& options) {
    check_spec(spec);
    switch (method) {
        case Method::Exact: {
            if (std::holds_alternative<ExpDecay>(spec))
                throw UnsupportedError("expdecay is distributional and has no exact enumeration");
            if (n > kMaxEnumerationDomain) throw UnsupportedError("exact reports need n <= 4");
            return exact_report(enumerate_property(n, spec, options.threads));
        }
        case Method::MonteCarlo:
            return mc_info_report(n, spec, options.trials, options.seed, options.threads).report;
        case Method::Asymptotic:
            return asymptotic_report(n, spec, options);
    }
    throw UnsupportedError("unknown method");
}

}  // namespace infowidth
