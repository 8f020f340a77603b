#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "infowidth/core_measures.hpp"

namespace infowidth {

inline constexpr unsigned kMaxDomain = 24;
inline constexpr unsigned kMaxEnumerationDomain = 4;

/// Binary function on [n] encoded as an integer: bit (i-1) holds f(i).
using BinaryFunc = std::uint32_t;

/// A set G of binary functions on [n], kept sorted and distinct.
class FunctionClass {
public:
    FunctionClass(unsigned n, std::vector<BinaryFunc> members);

    /// Class whose members are the set bits of `mask` (n <= 5).
    static FunctionClass from_mask(unsigned n, std::uint64_t mask);
    static FunctionClass full(unsigned n);

    unsigned n() const noexcept { return n_; }
    const std::vector<BinaryFunc>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    friend bool operator==(const FunctionClass&, const FunctionClass&) = default;

private:
    unsigned n_;
    std::vector<BinaryFunc> members_;
};

/// Labeled sample {(xi_i, zeta_i)} with distinct 1-based points. Repeating a point with
/// the same label is merged; conflicting labels are rejected.
class LabeledSample {
public:
    LabeledSample() = default;
    explicit LabeledSample(std::vector<std::pair<unsigned, bool>> pairs);

    const std::vector<std::pair<unsigned, bool>>& pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }

    /// Throws DomainError when a point lies outside [1, n].
    void check_domain(unsigned n) const;

    friend bool operator==(const LabeledSample&, const LabeledSample&) = default;

private:
    std::vector<std::pair<unsigned, bool>> pairs_;
};

// Property specifications. d is real so that asymptotic curves can use d = sqrt(n);
// the predicates floor it.
struct Ld { double d = 1; };
struct Vd { double d = 1; };
struct VdC { double d = 1; };
struct VdSample { double d = 1; LabeledSample sample; };
struct Identity { FunctionClass g; };
struct ExpDecay { double alpha = 0.5; double c = 1.0; };

using PropertySpec = std::variant<Ld, Vd, VdC, VdSample, Identity, ExpDecay>;

/// Short name used in reports and the CLI: ld, vd, vdc, vdsm, identity, expdecay.
const char* spec_name(const PropertySpec& spec);

/// Validates the parameters of a spec (d >= 1, 0 < alpha < 1, c > 0).
void check_spec(const PropertySpec& spec);

/// Points of [n] as a bitmask over bit positions (point i -> bit i-1).
using PointSet = std::uint32_t;

/// tr_G(E): distinct restrictions of the members to E, each packed so that bit j holds
/// the value at the j-th smallest point of E. The empty E gives the single value 0.
std::vector<std::uint32_t> trace(const FunctionClass& g, PointSet e);

/// True when some d-subset of [n] is shattered, i.e. VC(G) >= d.
bool shatters_some(const FunctionClass& g, unsigned d);

/// Largest shattered |E| (0 when only the empty set qualifies).
unsigned vc_dimension(const FunctionClass& g);

/// Largest |E| on which all members agree; n for a singleton class.
unsigned l_dimension(const FunctionClass& g);

/// Evaluates a predicate spec. ExpDecay is not a predicate and throws UnsupportedError.
bool satisfies(const FunctionClass& g, const PropertySpec& spec);

/// Every nonempty class on [n] satisfying spec, in ascending class-mask order, embedded
/// in the target space F (function encoding e -> element e). n <= 4.
PropertyCollection enumerate_property(unsigned n, const PropertySpec& spec, unsigned threads = 0);

/// Cardinality profile of enumerate_property without materializing the subsets.
DensityCounts enumerate_counts(unsigned n, const PropertySpec& spec, unsigned threads = 0);

/// Predicate on a class given as a bitmask of functions (n <= 5). Same semantics as
/// satisfies(); used by enumeration and the Monte Carlo loops.
bool satisfies_mask(unsigned n, std::uint64_t class_mask, const PropertySpec& spec);

}  // namespace infowidth
