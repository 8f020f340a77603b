#include "infowidth/core_measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "infowidth/errors.hpp"

namespace infowidth {

TargetSpace::TargetSpace(std::uint64_t size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {
    if (size_ == 0) throw DomainError("target space must contain at least one element");
    if (!labels_.empty() && labels_.size() != size_)
        throw DomainError("label count does not match target space size");
}

TargetSubset::TargetSubset(std::vector<std::uint64_t> members, const TargetSpace& space)
    : members_(std::move(members)) {
    if (members_.empty()) throw DomainError("target subsets must be nonempty");
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw DomainError("target subset contains a repeated element");
    if (members_.back() >= space.size())
        throw DomainError("target subset element " + std::to_string(members_.back()) +
                          " outside space of size " + std::to_string(space.size()));
}

PropertyCollection PropertyCollection::from_subsets(TargetSpace space, std::vector<TargetSubset> subsets) {
    if (subsets.empty()) throw DomainError("property must contain at least one subset");
    for (const auto& s : subsets) {
        if (s.members().back() >= space.size()) throw DomainError("subset element outside target space");
    }
    // Duplicate check on an index permutation; the caller's member order is kept because
    // the entropy sums run in that order.
    std::vector<std::size_t> order(subsets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return subsets[a] < subsets[b]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (subsets[order[i]] == subsets[order[i - 1]]) throw DomainError("property lists the same subset twice");
    }

    PropertyCollection out(std::move(space), true);
    for (const auto& s : subsets) out.counts_[s.size()] += 1;
    out.total_ = subsets.size();
    out.subsets_ = std::move(subsets);
    return out;
}

PropertyCollection PropertyCollection::from_counts(TargetSpace space, DensityCounts counts) {
    PropertyCollection out(std::move(space), false);
    const std::uint64_t n = out.space_.size();
    for (auto& [k, c] : counts) {
        if (k < 1 || k > n)
            throw DomainError("cardinality " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
        if (c.sign() < 0) throw DomainError("negative member count");
        if (c.is_zero()) continue;
        if (c > binomial(n, k))
            throw DomainError("more members of cardinality " + std::to_string(k) + " than C(N_Y, k)");
        out.total_ += c;
        out.counts_.emplace(k, std::move(c));
    }
    if (out.total_.is_zero()) throw DomainError("property must contain at least one subset");
    if (out.total_ >= out.space_.ambient()) throw DomainError("profiled property has more than 2^N_Y - 1 members");
    return out;
}

const std::vector<TargetSubset>& PropertyCollection::subsets() const {
    if (!explicit_) throw UnsupportedError("operation needs the explicit member list of the property");
    return subsets_;
}

LogBits entropy(const TargetSpace& space) { return std::log2(static_cast<double>(space.size())); }

double info_between_sets(const TargetSubset& a, const TargetSubset& b) {
    std::vector<std::uint64_t> merged;
    merged.reserve(a.size() + b.size());
    std::set_union(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                   std::back_inserter(merged));
    const double u = static_cast<double>(merged.size());
    return 2.0 * std::log2(u) - std::log2(static_cast<double>(a.size())) - std::log2(static_cast<double>(b.size()));
}

namespace {

bool intersects(const TargetSubset& a, const TargetSubset& b) {
    auto i = a.members().begin();
    auto j = b.members().begin();
    while (i != a.members().end() && j != b.members().end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i;
        else ++j;
    }
    return false;
}

std::vector<detail::WeightedSize> weighted_profile(const DensityCounts& counts) {
    std::vector<detail::WeightedSize> terms;
    terms.reserve(counts.size());
    for (const auto& [k, c] : counts) terms.emplace_back(k, HighPrecision(c));
    return terms;
}

std::pair<double, double> whole_space_measures(const PropertyCollection& x) {
    const auto terms = weighted_profile(x.counts());
    return detail::profile_entropy_information(x.space().size(), terms, HighPrecision(x.member_count()));
}

}  // namespace

namespace detail {

std::pair<double, double> profile_entropy_information(std::uint64_t space_size, std::span<const WeightedSize> terms,
                                                      const HighPrecision& total) {
    HighPrecision sum = 0;
    for (const auto& [k, w] : terms) {
        if (k >= 2) sum += w * log2_hp(k);
    }
    const HighPrecision h = sum / total;
    const HighPrecision i = log2_hp(space_size) - h;
    return {static_cast<double>(h), static_cast<double>(i)};
}

double log_ratio_bits(const BigCount& count, std::uint64_t space_size) {
    if (count.sign() <= 0) throw DomainError("description complexity of an empty collection");
    const BigCount ambient = pow2(space_size);
    if (count > ambient) throw DomainError("collection larger than the ambient power set");
    if (bit_length(count) < space_size) {
        return static_cast<double>(space_size) - log2_count(count);
    }
    // count in (2^(N-1), 2^N]: write it as 2^N (1 - f) with f small.
    const double f = ratio_to_double(ambient - count, ambient);
    return -std::log1p(-f) / std::numbers::ln2;
}

}  // namespace detail

bool is_informative(const PropertyCollection& x, const TargetSubset& target) {
    for (const auto& z : x.subsets()) {
        if (intersects(z, target)) return true;
    }
    return false;
}

std::map<std::uint64_t, double> density(const PropertyCollection& x) {
    std::map<std::uint64_t, double> omega;
    for (const auto& [k, c] : x.counts()) omega[k] = ratio_to_double(c, x.member_count());
    return omega;
}

double conditional_entropy(const PropertyCollection& x) { return whole_space_measures(x).first; }

double information(const PropertyCollection& x, const Target& target) {
    if (std::holds_alternative<WholeSpace>(target)) return whole_space_measures(x).second;

    const auto& y = std::get<TargetSubset>(target);
    const auto& zs = x.subsets();
    if (y.members().back() >= x.space().size()) throw DomainError("target set outside the property's space");
    if (!is_informative(x, y)) return 0.0;
    double sum = 0.0;
    for (const auto& z : zs) sum += info_between_sets(y, z);
    return sum / static_cast<double>(zs.size());
}

double description_complexity(const PropertyCollection& x) {
    return detail::log_ratio_bits(x.member_count(), x.space().size());
}

double complement_complexity(double l) {
    if (!(l > 0.0)) throw DomainError("complement complexity needs l > 0");
    // -log2(1 - 2^-l): log1p keeps the tiny result for large l, expm1 keeps 1 - 2^-l for small l.
    if (l > 1.0) return -std::log1p(-std::exp2(-l)) / std::numbers::ln2;
    return -std::log(-std::expm1(-l * std::numbers::ln2)) / std::numbers::ln2;
}

double cost(const PropertyCollection& x, const Target& target) {
    const double info = information(x, target);
    if (!(info > 0.0)) throw UndefinedValueError("cost is undefined when the information is zero");
    return description_complexity(x) / info;
}

}  // namespace infowidth
