#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "infowidth/core_measures.hpp"
#include "infowidth/function_classes.hpp"

namespace infowidth {

/// Seedable, splittable generator: mt19937_64 keyed by splitmix64(seed, stream).
/// Bounded integers and unit reals are derived with fixed algorithms so identical
/// (seed, stream) pairs give identical draws on every platform.
class RngHandle {
public:
    static constexpr const char* kAlgorithm = "mt19937_64/splitmix64";

    explicit RngHandle(std::uint64_t seed = 0, std::uint64_t stream = 0);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

    /// Independent substream of the same seed.
    RngHandle split(std::uint64_t stream) const { return RngHandle(seed_, stream); }

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform integer in [0, bound), bound >= 1 (bitmask rejection).
    std::uint64_t below(std::uint64_t bound);
    /// Uniform real in [0, 1) with 53 random bits.
    double uniform01();

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;  ///< sample standard deviation / sqrt(trials)
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

/// Mean and standard error of `successes` Bernoulli outcomes out of `trials`.
McEstimate bernoulli_estimate(std::uint64_t successes, std::uint64_t trials, std::uint64_t seed);

/// Each of the 2^n functions kept independently with probability p. May be empty.
FunctionClass sample_class_binomial(unsigned n, double p, RngHandle& rng);

/// Uniform k-subset of the 2^n functions by a sparse partial Fisher-Yates shuffle.
FunctionClass sample_class_uniform_k(unsigned n, std::uint64_t k, RngHandle& rng);

struct SimpleMatrixDraw {
    FunctionClass cls;
    std::uint64_t attempts = 0;
};

/// prod_{i<k} (1 - i/2^n): chance that k uniform columns of length n are distinct.
double simple_matrix_acceptance(unsigned n, std::uint64_t k);

/// Draws uniform n x k binary matrices until the columns are distinct and returns the
/// column set. Throws InfeasibleError when the acceptance rate is below 1e-9 or the
/// retry cap is exhausted.
SimpleMatrixDraw sample_simple_matrix(unsigned n, std::uint64_t k, RngHandle& rng,
                                      std::uint64_t retry_cap = 1'000'000);

/// Fraction of single matrix draws whose columns are distinct.
McEstimate estimate_simple_matrix_acceptance(unsigned n, std::uint64_t k, std::uint64_t trials,
                                             std::uint64_t seed, unsigned threads = 0);

/// P*_{n,k}(spec) estimated from uniform k-class draws. Work is split into a fixed number
/// of shards with their own substreams, so the result does not depend on `threads`.
McEstimate mc_property_prob(unsigned n, std::uint64_t k, const PropertySpec& spec, std::uint64_t trials,
                            std::uint64_t seed, unsigned threads = 0);

struct McInfoReport {
    InfoReport report;
    double information_stderr = 0.0;
    double description_stderr = 0.0;
    std::uint64_t trials_per_k = 0;
    std::uint64_t seed = 0;
    std::vector<double> acceptance;  ///< P^*_{n,k}(spec) estimate for k = 1..2^n
};

/// Stratified estimate of the whole-space measures of spec: `trials` uniform draws at
/// every cardinality k, combined with log-domain weights C(2^n, k) 2^-2^n. Standard
/// errors by the delta method. n <= 16.
McInfoReport mc_info_report(unsigned n, const PropertySpec& spec, std::uint64_t trials, std::uint64_t seed,
                            unsigned threads = 0);

struct ChiSquareResult {
    double statistic = 0.0;
    unsigned dof = 0;
    double p_value = 1.0;
};

/// Goodness of fit of observed counts against equal cell probabilities.
ChiSquareResult chi_square_uniform(const std::vector<std::uint64_t>& observed);

/// Homogeneity of two count vectors over the same cells (2 x K contingency table).
ChiSquareResult chi_square_two_sample(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);

}  // namespace infowidth
