#include "infowidth/function_classes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "infowidth/errors.hpp"
#include "infowidth/parallel.hpp"

namespace infowidth {

namespace {

void check_domain_size(unsigned n) {
    if (n < 1 || n > kMaxDomain)
        throw DomainError("domain size n must lie in [1, " + std::to_string(kMaxDomain) + "], got " + std::to_string(n));
}

unsigned floor_d(double d) { return static_cast<unsigned>(std::floor(d)); }

std::uint32_t domain_mask(unsigned n) { return (1u << n) - 1u; }

// Next subset of the same popcount (Gosper's hack).
std::uint32_t next_combination(std::uint32_t v) {
    const std::uint32_t t = v | (v - 1);
    return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

// Restriction of f to the points listed in `points` (0-based bit positions).
std::uint32_t restrict_to(BinaryFunc f, const std::vector<unsigned>& points) {
    std::uint32_t out = 0;
    for (std::size_t j = 0; j < points.size(); ++j) out |= ((f >> points[j]) & 1u) << j;
    return out;
}

std::vector<unsigned> points_of(PointSet e) {
    std::vector<unsigned> pts;
    while (e) {
        pts.push_back(static_cast<unsigned>(std::countr_zero(e)));
        e &= e - 1;
    }
    return pts;
}

bool consistent_with(const FunctionClass& g, const LabeledSample& sample) {
    for (BinaryFunc f : g.members()) {
        for (const auto& [pt, label] : sample.pairs()) {
            if (((f >> (pt - 1)) & 1u) != static_cast<unsigned>(label)) return false;
        }
    }
    return true;
}

}  // namespace

FunctionClass::FunctionClass(unsigned n, std::vector<BinaryFunc> members) : n_(n), members_(std::move(members)) {
    check_domain_size(n_);
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw DomainError("function class lists a function twice");
    if (!members_.empty() && members_.back() > domain_mask(n_))
        throw DomainError("function encoding " + std::to_string(members_.back()) + " outside [0, 2^n)");
}

FunctionClass FunctionClass::from_mask(unsigned n, std::uint64_t mask) {
    if (n < 1 || n > 6) throw DomainError("class masks support 1 <= n <= 6");
    if (n < 6 && (mask >> (1u << n)) != 0) throw DomainError("class mask has bits beyond 2^n functions");
    std::vector<BinaryFunc> members;
    while (mask) {
        members.push_back(static_cast<BinaryFunc>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return FunctionClass(n, std::move(members));
}

FunctionClass FunctionClass::full(unsigned n) {
    check_domain_size(n);
    if (n > 20) throw DomainError("the full class is only materialized for n <= 20");
    std::vector<BinaryFunc> members(std::size_t{1} << n);
    for (std::size_t i = 0; i < members.size(); ++i) members[i] = static_cast<BinaryFunc>(i);
    return FunctionClass(n, std::move(members));
}

LabeledSample::LabeledSample(std::vector<std::pair<unsigned, bool>> pairs) : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].first == 0) throw DomainError("sample points are 1-based");
        if (i > 0 && pairs_[i].first == pairs_[i - 1].first)
            throw DomainError("sample point " + std::to_string(pairs_[i].first) + " carries conflicting labels");
    }
}

void LabeledSample::check_domain(unsigned n) const {
    for (const auto& [pt, label] : pairs_) {
        if (pt < 1 || pt > n)
            throw DomainError("sample point " + std::to_string(pt) + " outside [1, " + std::to_string(n) + "]");
    }
}

const char* spec_name(const PropertySpec& spec) {
    struct Visitor {
        const char* operator()(const Ld&) const { return "ld"; }
        const char* operator()(const Vd&) const { return "vd"; }
        const char* operator()(const VdC&) const { return "vdc"; }
        const char* operator()(const VdSample&) const { return "vdsm"; }
        const char* operator()(const Identity&) const { return "identity"; }
        const char* operator()(const ExpDecay&) const { return "expdecay"; }
    };
    return std::visit(Visitor{}, spec);
}

void check_spec(const PropertySpec& spec) {
    auto check_d = [](double d) {
        if (!(d >= 1.0) || !std::isfinite(d)) throw DomainError("property parameter d must be >= 1");
    };
    if (const auto* s = std::get_if<Ld>(&spec)) check_d(s->d);
    if (const auto* s = std::get_if<Vd>(&spec)) check_d(s->d);
    if (const auto* s = std::get_if<VdC>(&spec)) check_d(s->d);
    if (const auto* s = std::get_if<VdSample>(&spec)) check_d(s->d);
    if (const auto* s = std::get_if<Identity>(&spec)) {
        if (s->g.empty()) throw DomainError("identity property needs a nonempty class");
    }
    if (const auto* s = std::get_if<ExpDecay>(&spec)) {
        if (!(s->alpha > 0.0 && s->alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
        if (!(s->c > 0.0)) throw DomainError("c must be positive");
    }
}

std::vector<std::uint32_t> trace(const FunctionClass& g, PointSet e) {
    if ((e & ~domain_mask(g.n())) != 0) throw DomainError("trace set is not a subset of [n]");
    const auto pts = points_of(e);
    std::vector<std::uint32_t> out;
    out.reserve(g.size());
    for (BinaryFunc f : g.members()) out.push_back(restrict_to(f, pts));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (g.empty()) out.push_back(0);
    return out;
}

bool shatters_some(const FunctionClass& g, unsigned d) {
    if (g.empty()) throw DomainError("VC dimension of an empty class");
    if (d == 0) return true;
    if (d > g.n()) return false;
    const std::size_t patterns = std::size_t{1} << d;
    if (g.size() < patterns) return false;

    std::vector<std::uint32_t> seen(patterns, 0);
    std::uint32_t epoch = 0;
    const std::uint32_t limit = 1u << g.n();
    for (std::uint32_t e = (1u << d) - 1; e < limit; e = next_combination(e)) {
        ++epoch;
        const auto pts = points_of(e);
        std::size_t distinct = 0;
        for (BinaryFunc f : g.members()) {
            const std::uint32_t r = restrict_to(f, pts);
            if (seen[r] != epoch) {
                seen[r] = epoch;
                if (++distinct == patterns) return true;
            }
        }
    }
    return false;
}

unsigned vc_dimension(const FunctionClass& g) {
    if (g.empty()) throw DomainError("VC dimension of an empty class");
    const unsigned cap = std::min<unsigned>(g.n(), static_cast<unsigned>(std::bit_width(g.size()) - 1));
    for (unsigned d = cap; d >= 1; --d) {
        if (shatters_some(g, d)) return d;
    }
    return 0;
}

unsigned l_dimension(const FunctionClass& g) {
    if (g.empty()) throw DomainError("L dimension of an empty class");
    const BinaryFunc f0 = g.members().front();
    std::uint32_t differ = 0;
    for (BinaryFunc f : g.members()) differ |= f ^ f0;
    return static_cast<unsigned>(std::popcount(~differ & domain_mask(g.n())));
}

bool satisfies(const FunctionClass& g, const PropertySpec& spec) {
    if (g.empty()) throw DomainError("property predicates need a nonempty class");
    check_spec(spec);
    if (const auto* s = std::get_if<Ld>(&spec)) return l_dimension(g) >= floor_d(s->d);
    if (const auto* s = std::get_if<Vd>(&spec)) return !shatters_some(g, floor_d(s->d));
    if (const auto* s = std::get_if<VdC>(&spec)) return shatters_some(g, floor_d(s->d));
    if (const auto* s = std::get_if<VdSample>(&spec)) {
        s->sample.check_domain(g.n());
        return consistent_with(g, s->sample) && !shatters_some(g, floor_d(s->d));
    }
    if (const auto* s = std::get_if<Identity>(&spec)) {
        if (s->g.n() != g.n()) throw DomainError("identity property defined on a different domain");
        return g == s->g;
    }
    throw UnsupportedError("expdecay is a distributional property, not a predicate");
}

bool satisfies_mask(unsigned n, std::uint64_t class_mask, const PropertySpec& spec) {
    return satisfies(FunctionClass::from_mask(n, class_mask), spec);
}

namespace {

std::vector<std::uint64_t> matching_masks(unsigned n, const PropertySpec& spec, unsigned threads) {
    check_domain_size(n);
    if (n > kMaxEnumerationDomain) throw RangeError("exhaustive enumeration supports n <= 4");
    check_spec(spec);
    if (std::holds_alternative<ExpDecay>(spec))
        throw UnsupportedError("expdecay is a distributional property and cannot be enumerated");
    if (const auto* s = std::get_if<VdSample>(&spec)) s->sample.check_domain(n);

    const std::uint64_t total = std::uint64_t{1} << (1u << n);
    constexpr std::size_t kShards = 64;
    std::vector<std::vector<std::uint64_t>> parts(kShards);
    for_each_shard(kShards, resolve_threads(threads), [&](std::size_t s) {
        const std::uint64_t begin = std::max<std::uint64_t>(1, total * s / kShards);
        const std::uint64_t end = total * (s + 1) / kShards;
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            if (satisfies_mask(n, mask, spec)) parts[s].push_back(mask);
        }
    });
    std::vector<std::uint64_t> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace

PropertyCollection enumerate_property(unsigned n, const PropertySpec& spec, unsigned threads) {
    const auto masks = matching_masks(n, spec, threads);
    if (masks.empty()) throw UndefinedValueError(std::string("no class on [n] satisfies ") + spec_name(spec));
    const TargetSpace space(std::uint64_t{1} << n);
    std::vector<TargetSubset> subsets;
    subsets.reserve(masks.size());
    for (std::uint64_t mask : masks) {
        std::vector<std::uint64_t> elems;
        for (std::uint64_t m = mask; m; m &= m - 1) elems.push_back(static_cast<std::uint64_t>(std::countr_zero(m)));
        subsets.emplace_back(std::move(elems), space);
    }
    return PropertyCollection::from_subsets(space, std::move(subsets));
}

DensityCounts enumerate_counts(unsigned n, const PropertySpec& spec, unsigned threads) {
    DensityCounts counts;
    for (std::uint64_t mask : matching_masks(n, spec, threads)) counts[static_cast<std::uint64_t>(std::popcount(mask))] += 1;
    return counts;
}

}  // namespace infowidth
