#include "infowidth/random_classes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <unordered_map>

#include <boost/math/distributions/chi_squared.hpp>

#include "infowidth/asymptotics.hpp"
#include "infowidth/errors.hpp"
#include "infowidth/parallel.hpp"
#include "infowidth/width.hpp"

namespace infowidth {

namespace {

constexpr std::size_t kShards = 64;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t shard_trials(std::uint64_t trials, std::size_t shard) {
    return trials * (shard + 1) / kShards - trials * shard / kShards;
}

void check_sampler_domain(unsigned n) {
    if (n < 1 || n > kMaxDomain) throw DomainError("domain size n must lie in [1, 24]");
}

}  // namespace

RngHandle::RngHandle(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

std::uint64_t RngHandle::below(std::uint64_t bound) {
    if (bound == 0) throw DomainError("empty range");
    if (bound == 1) return 0;
    const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
    for (;;) {
        const std::uint64_t x = engine_() & mask;
        if (x < bound) return x;
    }
}

double RngHandle::uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

McEstimate bernoulli_estimate(std::uint64_t successes, std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) throw DomainError("an estimate needs at least one trial");
    McEstimate e;
    e.trials = trials;
    e.seed = seed;
    const double t = static_cast<double>(trials);
    e.estimate = static_cast<double>(successes) / t;
    if (trials > 1) {
        const double var = e.estimate * (1.0 - e.estimate) * t / (t - 1.0);
        e.std_error = std::sqrt(var / t);
    }
    return e;
}

FunctionClass sample_class_binomial(unsigned n, double p, RngHandle& rng) {
    if (n < 1 || n > 20) throw DomainError("binomial class sampling supports 1 <= n <= 20");
    if (!(p > 0.0 && p < 1.0)) throw DomainError("inclusion probability must lie in (0, 1)");
    std::vector<BinaryFunc> members;
    const std::uint32_t total = 1u << n;
    for (std::uint32_t f = 0; f < total; ++f) {
        if (rng.uniform01() < p) members.push_back(f);
    }
    return FunctionClass(n, std::move(members));
}

FunctionClass sample_class_uniform_k(unsigned n, std::uint64_t k, RngHandle& rng) {
    check_sampler_domain(n);
    const std::uint64_t total = std::uint64_t{1} << n;
    if (k < 1 || k > total) throw RangeError("class size k must lie in [1, 2^n]");
    std::vector<BinaryFunc> members(k);
    if (total <= (std::uint64_t{1} << 16) || 4 * k >= total) {
        std::vector<BinaryFunc> pool(total);
        std::iota(pool.begin(), pool.end(), BinaryFunc{0});
        for (std::uint64_t i = 0; i < k; ++i) {
            const std::uint64_t j = i + rng.below(total - i);
            std::swap(pool[i], pool[j]);
            members[i] = pool[i];
        }
    } else {
        // Only displaced positions are stored.
        std::unordered_map<std::uint64_t, std::uint64_t> moved;
        auto at = [&](std::uint64_t idx) {
            const auto it = moved.find(idx);
            return it == moved.end() ? idx : it->second;
        };
        for (std::uint64_t i = 0; i < k; ++i) {
            const std::uint64_t j = i + rng.below(total - i);
            const std::uint64_t vi = at(i);
            const std::uint64_t vj = at(j);
            moved[j] = vi;
            members[i] = static_cast<BinaryFunc>(vj);
        }
    }
    return FunctionClass(n, std::move(members));
}

double simple_matrix_acceptance(unsigned n, std::uint64_t k) {
    check_sampler_domain(n);
    const double total = std::exp2(static_cast<double>(n));
    if (k < 1 || static_cast<double>(k) > total) throw RangeError("class size k must lie in [1, 2^n]");
    double log_acc = 0.0;
    for (std::uint64_t i = 1; i < k; ++i) log_acc += std::log1p(-static_cast<double>(i) / total);
    return std::exp(log_acc);
}

namespace {

// One n x k matrix draw; returns true when its columns are distinct.
bool draw_matrix(unsigned n, std::uint64_t k, RngHandle& rng, std::vector<BinaryFunc>& columns) {
    const std::uint64_t total = std::uint64_t{1} << n;
    columns.resize(k);
    for (auto& c : columns) c = static_cast<BinaryFunc>(rng.below(total));
    std::vector<BinaryFunc> sorted = columns;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

SimpleMatrixDraw sample_simple_matrix(unsigned n, std::uint64_t k, RngHandle& rng, std::uint64_t retry_cap) {
    const double acc = simple_matrix_acceptance(n, k);
    if (acc < 1e-9)
        throw InfeasibleError("simple-matrix acceptance " + std::to_string(acc) + " below 1e-9 at n = " +
                              std::to_string(n) + ", k = " + std::to_string(k));
    std::vector<BinaryFunc> columns;
    for (std::uint64_t attempt = 1; attempt <= retry_cap; ++attempt) {
        if (draw_matrix(n, k, rng, columns)) return {FunctionClass(n, std::move(columns)), attempt};
    }
    throw InfeasibleError("simple-matrix sampler exhausted its retry cap of " + std::to_string(retry_cap));
}

McEstimate estimate_simple_matrix_acceptance(unsigned n, std::uint64_t k, std::uint64_t trials, std::uint64_t seed,
                                             unsigned threads) {
    simple_matrix_acceptance(n, k);
    std::vector<std::uint64_t> hits(kShards, 0);
    const RngHandle root(seed);
    for_each_shard(kShards, resolve_threads(threads), [&](std::size_t s) {
        RngHandle rng = root.split(s);
        std::vector<BinaryFunc> columns;
        for (std::uint64_t t = shard_trials(trials, s); t > 0; --t) hits[s] += draw_matrix(n, k, rng, columns) ? 1 : 0;
    });
    return bernoulli_estimate(std::accumulate(hits.begin(), hits.end(), std::uint64_t{0}), trials, seed);
}

namespace {

std::uint64_t count_satisfying(unsigned n, std::uint64_t k, const PropertySpec& spec, std::uint64_t trials,
                               std::uint64_t seed, std::uint64_t stream_base, unsigned threads) {
    std::vector<std::uint64_t> hits(kShards, 0);
    const RngHandle root(seed);
    for_each_shard(kShards, threads, [&](std::size_t s) {
        RngHandle rng = root.split(stream_base + s);
        for (std::uint64_t t = shard_trials(trials, s); t > 0; --t) {
            if (satisfies(sample_class_uniform_k(n, k, rng), spec)) ++hits[s];
        }
    });
    return std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
}

void check_predicate(unsigned n, const PropertySpec& spec) {
    check_spec(spec);
    if (std::holds_alternative<ExpDecay>(spec))
        throw UnsupportedError("expdecay is a distributional property; Monte Carlo needs a predicate");
    if (const auto* s = std::get_if<VdSample>(&spec)) s->sample.check_domain(n);
    if (const auto* s = std::get_if<Identity>(&spec)) {
        if (s->g.n() != n) throw DomainError("identity class defined on a different domain");
    }
}

}  // namespace

McEstimate mc_property_prob(unsigned n, std::uint64_t k, const PropertySpec& spec, std::uint64_t trials,
                            std::uint64_t seed, unsigned threads) {
    check_sampler_domain(n);
    check_predicate(n, spec);
    if (trials == 0) throw DomainError("an estimate needs at least one trial");
    if (k < 1 || k > (std::uint64_t{1} << n)) throw RangeError("class size k must lie in [1, 2^n]");
    const std::uint64_t hits = count_satisfying(n, k, spec, trials, seed, k * kShards, resolve_threads(threads));
    return bernoulli_estimate(hits, trials, seed);
}

McInfoReport mc_info_report(unsigned n, const PropertySpec& spec, std::uint64_t trials, std::uint64_t seed,
                            unsigned threads) {
    if (n < 1 || n > 16) throw DomainError("Monte Carlo reports support 1 <= n <= 16");
    check_predicate(n, spec);
    if (trials == 0) throw DomainError("an estimate needs at least one trial");

    McInfoReport out;
    out.trials_per_k = trials;
    out.seed = seed;

    // A single class is never hit by sampling at realistic budgets; its measures are
    // known in closed form.
    if (const auto* s = std::get_if<Identity>(&spec)) {
        out.report = identity_report(n, static_cast<double>(s->g.size()));
        out.report.method = "monte-carlo";
        const std::uint64_t g = s->g.size();
        out.acceptance.assign(std::size_t{1} << n, 0.0);
        out.acceptance[g - 1] = std::exp(-std::lgamma(std::exp2(n) + 1) + std::lgamma(g + 1.0) +
                                         std::lgamma(std::exp2(n) - g + 1.0));
        return out;
    }

    const std::uint64_t big_n = std::uint64_t{1} << n;
    const unsigned workers = resolve_threads(threads);
    std::vector<double> phat(big_n + 1, 0.0);
    for (std::uint64_t k = 1; k <= big_n; ++k) {
        phat[k] = static_cast<double>(count_satisfying(n, k, spec, trials, seed, k * kShards, workers)) /
                  static_cast<double>(trials);
    }
    out.acceptance.assign(phat.begin() + 1, phat.end());

    // log C(N, k), rescaled by the largest term with nonzero acceptance.
    const long double nn = static_cast<long double>(big_n);
    std::vector<long double> logc(big_n + 1);
    long double top = -std::numeric_limits<long double>::infinity();
    for (std::uint64_t k = 1; k <= big_n; ++k) {
        const long double kk = static_cast<long double>(k);
        logc[k] = std::lgamma(nn + 1.0L) - std::lgamma(kk + 1.0L) - std::lgamma(nn - kk + 1.0L);
        if (phat[k] > 0.0) top = std::max(top, logc[k]);
    }
    if (!std::isfinite(static_cast<double>(top)))
        throw InfeasibleError("no sampled class satisfied the property at any cardinality");

    std::vector<long double> w(big_n + 1, 0.0L);
    long double mass = 0.0L;
    long double weighted_log = 0.0L;
    for (std::uint64_t k = 1; k <= big_n; ++k) {
        w[k] = std::exp(logc[k] - top);
        mass += w[k] * phat[k];
        if (k >= 2) weighted_log += w[k] * phat[k] * std::log2(static_cast<long double>(k));
    }
    const long double h = weighted_log / mass;
    const long double ln2 = std::numbers::ln2_v<long double>;
    // l = -log2(sum_k C(N,k) 2^-N phat_k).
    const long double ell = nn - (top + std::log(mass)) / ln2;

    long double var_h = 0.0L;
    long double var_l = 0.0L;
    const long double t = static_cast<long double>(trials);
    for (std::uint64_t k = 1; k <= big_n; ++k) {
        if (trials < 2) break;
        const long double var_p = phat[k] * (1.0L - phat[k]) / (t - 1.0L);
        const long double lk = k >= 2 ? std::log2(static_cast<long double>(k)) : 0.0L;
        const long double dh = w[k] * (lk - h) / mass;
        const long double dl = w[k] / (mass * ln2);
        var_h += dh * dh * var_p;
        var_l += dl * dl * var_p;
    }

    InfoReport& r = out.report;
    r.method = "monte-carlo";
    r.conditional_entropy_bits = static_cast<double>(h);
    r.information_bits = static_cast<double>(static_cast<long double>(n) - h);
    r.description_bits = static_cast<double>(ell);
    if (r.information_bits > 0.0) {
        r.cost = r.description_bits / r.information_bits;
        const auto q = WidthQuery::from_bits(big_n, r.description_bits, Backend::Auto);
        const double width = info_width(q).width_bits;
        if (width > 0.0) r.efficiency = r.information_bits / width;
    }
    out.information_stderr = static_cast<double>(std::sqrt(var_h));
    out.description_stderr = static_cast<double>(std::sqrt(var_l));
    return out;
}

namespace {

ChiSquareResult finish_chi_square(double statistic, unsigned dof) {
    ChiSquareResult r;
    r.statistic = statistic;
    r.dof = dof;
    if (dof == 0) return r;
    const boost::math::chi_squared dist(static_cast<double>(dof));
    r.p_value = boost::math::cdf(boost::math::complement(dist, statistic));
    return r;
}

}  // namespace

ChiSquareResult chi_square_uniform(const std::vector<std::uint64_t>& observed) {
    if (observed.size() < 2) throw DomainError("chi-square test needs at least two cells");
    const double total = static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
    if (total == 0.0) throw DomainError("chi-square test needs observations");
    const double expected = total / static_cast<double>(observed.size());
    double stat = 0.0;
    for (auto o : observed) {
        const double diff = static_cast<double>(o) - expected;
        stat += diff * diff / expected;
    }
    return finish_chi_square(stat, static_cast<unsigned>(observed.size() - 1));
}

ChiSquareResult chi_square_two_sample(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    if (a.size() != b.size() || a.size() < 2) throw DomainError("two-sample chi-square needs matching cells");
    const double ta = static_cast<double>(std::accumulate(a.begin(), a.end(), std::uint64_t{0}));
    const double tb = static_cast<double>(std::accumulate(b.begin(), b.end(), std::uint64_t{0}));
    if (ta == 0.0 || tb == 0.0) throw DomainError("two-sample chi-square needs observations in both samples");
    double stat = 0.0;
    unsigned cells = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double col = static_cast<double>(a[i] + b[i]);
        if (col == 0.0) continue;
        ++cells;
        const double ea = col * ta / (ta + tb);
        const double eb = col * tb / (ta + tb);
        stat += (static_cast<double>(a[i]) - ea) * (static_cast<double>(a[i]) - ea) / ea;
        stat += (static_cast<double>(b[i]) - eb) * (static_cast<double>(b[i]) - eb) / eb;
    }
    return finish_chi_square(stat, cells > 0 ? cells - 1 : 0);
}

}  // namespace infowidth
