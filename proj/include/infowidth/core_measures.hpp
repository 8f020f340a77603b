#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "infowidth/bigcount.hpp"

namespace infowidth {

/// Finite target space Y, identified by its cardinality. Elements are the indices 0..size-1.
class TargetSpace {
public:
    explicit TargetSpace(std::uint64_t size, std::vector<std::string> labels = {});

    std::uint64_t size() const noexcept { return size_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// |Z| = |P(Y)| = 2^size.
    BigCount ambient() const { return pow2(size_); }

    friend bool operator==(const TargetSpace& a, const TargetSpace& b) { return a.size_ == b.size_; }

private:
    std::uint64_t size_;
    std::vector<std::string> labels_;
};

/// Nonempty subset of a target space, kept as sorted distinct element indices.
class TargetSubset {
public:
    TargetSubset(std::vector<std::uint64_t> members, const TargetSpace& space);

    std::span<const std::uint64_t> members() const noexcept { return members_; }
    std::uint64_t size() const noexcept { return members_.size(); }

    friend bool operator==(const TargetSubset&, const TargetSubset&) = default;
    friend auto operator<=>(const TargetSubset&, const TargetSubset&) = default;

private:
    std::vector<std::uint64_t> members_;
};

/// Number of members per subset cardinality k (1..N_Y).
using DensityCounts = std::map<std::uint64_t, BigCount>;

/// A property x: the collection Z_x of target subsets sharing some feature. Either the
/// explicit list, or only its cardinality profile when the list is astronomically long.
class PropertyCollection {
public:
    static PropertyCollection from_subsets(TargetSpace space, std::vector<TargetSubset> subsets);
    static PropertyCollection from_counts(TargetSpace space, DensityCounts counts);

    bool is_explicit() const noexcept { return explicit_; }
    const TargetSpace& space() const noexcept { return space_; }

    /// Throws UnsupportedError for profiled collections.
    const std::vector<TargetSubset>& subsets() const;

    /// Available for both representations.
    const DensityCounts& counts() const noexcept { return counts_; }

    /// |Z_x|.
    const BigCount& member_count() const noexcept { return total_; }

private:
    PropertyCollection(TargetSpace space, bool is_explicit)
        : space_(std::move(space)), explicit_(is_explicit) {}

    TargetSpace space_;
    bool explicit_;
    std::vector<TargetSubset> subsets_;
    DensityCounts counts_;
    BigCount total_ = 0;
};

/// Marker for the acquirer's perspective: the target set is the whole space Y.
struct WholeSpace {};

using Target = std::variant<WholeSpace, TargetSubset>;

/// Bundled measures for one property. cost and efficiency are absent when undefined
/// (zero information).
struct InfoReport {
    double information_bits = 0.0;
    double conditional_entropy_bits = 0.0;
    double description_bits = 0.0;
    std::optional<double> cost;
    std::optional<double> efficiency;
    std::string method;
    std::vector<std::string> notes;  ///< e.g. a premise of an asymptotic estimate that does not hold
};

/// H(Y) = log2 |Y|.
LogBits entropy(const TargetSpace& space);

/// Information between two sets: 2 log2|a u b| - log2|a| - log2|b|.
double info_between_sets(const TargetSubset& a, const TargetSubset& b);

/// x |- y: some member of Z_x intersects the target set.
bool is_informative(const PropertyCollection& x, const TargetSubset& target);

/// omega_x(k) = |{z : |Y_z| = k}| / |Z_x|.
std::map<std::uint64_t, double> density(const PropertyCollection& x);

/// H(Y|x) = average log2 |Y_z| over the members.
double conditional_entropy(const PropertyCollection& x);

/// I(x:Y) for WholeSpace, else the provider's I(x:y) averaged over all members
/// (0 when x is not informative for y).
double information(const PropertyCollection& x, const Target& target);

/// l(x) = log2(|Z| / |Z_x|) = N_Y - log2 |Z_x|.
double description_complexity(const PropertyCollection& x);

/// Description complexity of the complementary collection: -log2(1 - 2^-l).
double complement_complexity(double l);

/// kappa = l(x) / I(x:target).
double cost(const PropertyCollection& x, const Target& target);

namespace detail {

/// One (cardinality, weight) term of a size profile.
using WeightedSize = std::pair<std::uint64_t, HighPrecision>;

/// Whole-space (H, I) of a size profile with the given total weight, evaluated at
/// HighPrecision and rounded once. Shared by the profiled measures and the exact width
/// backend so that a width witness reproduces the width bit for bit.
std::pair<double, double> profile_entropy_information(std::uint64_t space_size,
                                                      std::span<const WeightedSize> terms,
                                                      const HighPrecision& total);

/// -log2(count / 2^space_size), accurate when count is close to 2^space_size.
double log_ratio_bits(const BigCount& count, std::uint64_t space_size);

}  // namespace detail

}  // namespace infowidth
