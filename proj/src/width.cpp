#include "infowidth/width.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "infowidth/errors.hpp"
#include "infowidth/parallel.hpp"

namespace infowidth {

namespace mp = boost::multiprecision;

std::string_view to_string(Backend backend) {
    switch (backend) {
        case Backend::Exact: return "exact";
        case Backend::LogDomain: return "log-domain";
        case Backend::Auto: return "auto";
    }
    return "auto";
}

Backend parse_backend(std::string_view name) {
    if (name == "exact") return Backend::Exact;
    if (name == "log-domain" || name == "logdomain" || name == "log") return Backend::LogDomain;
    if (name == "auto") return Backend::Auto;
    throw DomainError("unknown backend '" + std::string(name) + "'");
}

namespace {

constexpr std::uint64_t kLogDomainSpaceLimit = std::uint64_t{1} << 40;
constexpr long double kLn2 = 0.693147180559945309417232121458176568L;

// Smallest admissible l: one member short of the whole power set.
double min_bits(std::uint64_t n) {
    if (n >= 1075) return 0.0;
    return -std::log1p(-std::exp2(-static_cast<double>(n))) / std::numbers::ln2;
}

void check_space(std::uint64_t n) {
    if (n == 0) throw DomainError("target space must contain at least one element");
}

void check_members(std::uint64_t n, const BigCount& m) {
    check_space(n);
    if (m < 1) throw RangeError("a property needs at least one member");
    if (n > (std::uint64_t{1} << 24)) throw RangeError("member counts are only supported up to N = 2^24");
    if (m >= pow2(n)) throw RangeError("a property has at most 2^N - 1 members");
}

void check_bits(std::uint64_t n, double l) {
    check_space(n);
    if (!std::isfinite(l)) throw RangeError("description complexity must be finite");
    const double lo = min_bits(n);
    const double hi = static_cast<double>(n);
    if (l > hi * (1.0 + 1e-15) || l < lo * (1.0 - 1e-12) || !(l > 0.0))
        throw RangeError("description complexity " + std::to_string(l) + " outside [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "] for N = " + std::to_string(n));
}

Backend resolve(const WidthQuery& q) {
    if (q.backend != Backend::Auto) return q.backend;
    return q.space_size <= kExactSpaceLimit ? Backend::Exact : Backend::LogDomain;
}

// ---------------------------------------------------------------- exact backend

struct ExactProfile {
    std::uint64_t r = 0;
    std::vector<detail::WeightedSize> terms;
    HighPrecision total;
};

ExactProfile exact_profile(const WidthQuery& q) {
    const std::uint64_t n = q.space_size;
    ExactProfile out;
    BigCount c = 1;
    BigCount prefix = 0;
    if (q.members) {
        const BigCount& m = *q.members;
        out.total = HighPrecision(m);
        for (std::uint64_t k = 1; k <= n; ++k) {
            c *= n - k + 1;
            c /= k;
            if (prefix + c >= m) {
                out.r = k;
                out.terms.emplace_back(k, HighPrecision(BigCount(m - prefix)));
                return out;
            }
            prefix += c;
            out.terms.emplace_back(k, HighPrecision(c));
        }
    } else {
        const HighPrecision m = mp::pow(HighPrecision(2), HighPrecision(n) - HighPrecision(q.l));
        out.total = m;
        HighPrecision prefix_hp = 0;
        for (std::uint64_t k = 1; k <= n; ++k) {
            c *= n - k + 1;
            c /= k;
            const HighPrecision chp(c);
            if (prefix_hp + chp >= m || k == n) {
                out.r = k;
                out.terms.emplace_back(k, m - prefix_hp);
                return out;
            }
            prefix_hp += chp;
            out.terms.emplace_back(k, chp);
        }
    }
    out.r = n;
    return out;
}

// ---------------------------------------------------------------- log-domain backend

// Neumaier-compensated accumulator.
struct CompensatedSum {
    long double sum = 0.0L;
    long double comp = 0.0L;
    void add(long double x) {
        const long double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x)) comp += (sum - t) + x;
        else comp += (x - t) + sum;
        sum = t;
    }
    long double value() const { return sum + comp; }
};

// Bin(N, 1/2) masses in the log domain.
class HalfBinomial {
public:
    explicit HalfBinomial(std::uint64_t n) : n_(n), lognf_(std::lgamma(static_cast<long double>(n) + 1.0L)) {}

    std::uint64_t n() const { return n_; }

    long double log_pmf(std::uint64_t k) const {
        const long double kk = static_cast<long double>(k);
        const long double nn = static_cast<long double>(n_);
        return lognf_ - std::lgamma(kk + 1.0L) - std::lgamma(nn - kk + 1.0L) - nn * kLn2;
    }

    // log P(k) - log P(k + 1) = log((k + 1) / (N - k)).
    long double step_down(std::uint64_t k) const {
        return std::log(static_cast<long double>(k + 1) / static_cast<long double>(n_ - k));
    }

    // log sum_{i=1..a} P(i) for a <= N/2, summed downward with a relative cutoff.
    long double log_lower_small(std::uint64_t a) const {
        if (a == 0) return -std::numeric_limits<long double>::infinity();
        const long double top = log_pmf(a);
        CompensatedSum s;
        long double rel = 0.0L;
        s.add(1.0L);
        for (std::uint64_t i = a - 1; i >= 1; --i) {
            rel += step_down(i);
            const long double t = std::exp(rel);
            s.add(t);
            if (t < 1e-22L * s.value()) break;
        }
        return top + std::log(s.value());
    }

    // log sum_{i=1..a} P(i).
    long double log_lower(std::uint64_t a) const {
        if (2 * a <= n_) return log_lower_small(a);
        return std::log1p(-std::exp(log_upper_tail(a)));
    }

    // log(1 - sum_{i=1..a} P(i)) = log(P(0) + sum_{i>a} P(i)).
    long double log_upper_tail(std::uint64_t a) const {
        if (2 * a <= n_) return std::log1p(-std::exp(log_lower_small(a)));
        const long double p0 = -static_cast<long double>(n_) * kLn2;
        if (a >= n_) return p0;
        // sum_{i>a} P(i) = P(0) + sum_{j=1..N-a-1} P(j) by symmetry.
        const long double rest = log_lower_small(n_ - a - 1);
        const long double hi = std::max(p0 + kLn2, rest);
        return hi + std::log(std::exp(p0 + kLn2 - hi) + std::exp(rest - hi));
    }

private:
    std::uint64_t n_;
    long double lognf_;
};

struct LogQuery {
    long double log_u;   // log 2^-l
    long double log_v;   // log (1 - 2^-l)
    bool upper_regime;   // 2^-l > 1/2
};

LogQuery make_log_query(double l) {
    LogQuery q{};
    q.log_u = -static_cast<long double>(l) * kLn2;
    q.log_v = std::log(-std::expm1(q.log_u));
    q.upper_regime = l < 1.0;
    return q;
}

std::uint64_t log_threshold(const HalfBinomial& b, const LogQuery& q) {
    auto reached = [&](std::uint64_t a) {
        if (q.upper_regime) return b.log_upper_tail(a) <= q.log_v;
        return b.log_lower(a) >= q.log_u;
    };
    std::uint64_t lo = 1;
    std::uint64_t hi = b.n();
    if (!reached(hi)) return hi;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (reached(mid)) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

WidthResult log_domain_width(const WidthQuery& query) {
    const std::uint64_t n = query.space_size;
    if (n > kLogDomainSpaceLimit) throw RangeError("log-domain width supports N up to 2^40");
    const HalfBinomial b(n);
    const LogQuery q = make_log_query(query.l);
    const std::uint64_t r = log_threshold(b, q);

    long double h = 0.0L;
    if (!q.upper_regime) {
        // Weights P(k)/u for k < r, summed downward; masses shrink away from the mode.
        CompensatedSum hs;
        CompensatedSum ws;
        if (r >= 2) {
            long double lw = b.log_pmf(r - 1) - q.log_u;
            for (std::uint64_t k = r - 1; k >= 1; --k) {
                const long double w = std::exp(lw);
                ws.add(w);
                if (k >= 2) hs.add(w * std::log2(static_cast<long double>(k)));
                if (w < 1e-24L * std::max(ws.value(), 1e-300L) && 2 * k < n) break;
                if (k > 1) lw += b.step_down(k - 1);
            }
        }
        const long double rem = std::max(0.0L, 1.0L - ws.value());
        h = hs.value() + rem * std::log2(static_cast<long double>(r));
    } else {
        // u > 1/2: H* = [sum_{k=2..r-1} P(k) log2 k + (u - F(r-1)) log2 r] / u with
        // u - F(r-1) = (1 - F(r-1)) - v.
        const long double u = std::exp(q.log_u);
        CompensatedSum hs;
        std::uint64_t start = 2;
        if (n > 4096) {
            const auto half_window = static_cast<std::uint64_t>(std::ceil(20.0L * std::sqrt(static_cast<long double>(n))));
            if (n / 2 > half_window + 2) start = n / 2 - half_window;
        }
        if (r >= 3 && start <= r - 1) {
            long double lp = b.log_pmf(start);
            for (std::uint64_t k = start; k <= r - 1; ++k) {
                hs.add(std::exp(lp) * std::log2(static_cast<long double>(k)));
                if (k < n) lp -= b.step_down(k);
            }
        }
        const long double tail = (r >= 1) ? std::exp(b.log_upper_tail(r - 1)) : 1.0L;
        const long double rem = std::max(0.0L, tail - std::exp(q.log_v));
        h = (hs.value() + rem * std::log2(static_cast<long double>(r))) / u;
    }

    WidthResult out;
    out.threshold = r;
    out.backend = Backend::LogDomain;
    out.width_bits = static_cast<double>(std::log2(static_cast<long double>(n)) - h);
    out.accuracy_bound = 1e-12 * std::max(1.0, std::log2(static_cast<double>(n)));
    return out;
}

void validate(const WidthQuery& q) {
    if (q.members) check_members(q.space_size, *q.members);
    else check_bits(q.space_size, q.l);
}

}  // namespace

WidthQuery WidthQuery::from_bits(std::uint64_t space_size, double l, Backend backend) {
    check_bits(space_size, l);
    WidthQuery q;
    q.space_size = space_size;
    q.l = l;
    q.backend = backend;
    return q;
}

WidthQuery WidthQuery::from_members(std::uint64_t space_size, BigCount members, Backend backend) {
    check_members(space_size, members);
    WidthQuery q;
    q.space_size = space_size;
    q.l = detail::log_ratio_bits(members, space_size);
    q.backend = backend;
    q.members = std::move(members);
    return q;
}

std::uint64_t threshold_r(const WidthQuery& query) {
    validate(query);
    if (resolve(query) == Backend::Exact) return exact_profile(query).r;
    return log_threshold(HalfBinomial(query.space_size), make_log_query(query.l));
}

WidthResult info_width(const WidthQuery& query) {
    validate(query);
    if (resolve(query) == Backend::LogDomain) return log_domain_width(query);
    const ExactProfile p = exact_profile(query);
    WidthResult out;
    out.threshold = p.r;
    out.backend = Backend::Exact;
    out.width_bits = detail::profile_entropy_information(query.space_size, p.terms, p.total).second;
    out.accuracy_bound = std::ldexp(1.0, -52) * std::max(1.0, std::log2(static_cast<double>(query.space_size)));
    return out;
}

PropertyCollection optimal_property(std::uint64_t space_size, const BigCount& members) {
    check_members(space_size, members);
    WidthQuery q = WidthQuery::from_members(space_size, members, Backend::Exact);
    const ExactProfile p = exact_profile(q);
    DensityCounts counts;
    BigCount prefix = 0;
    BigCount c = 1;
    for (std::uint64_t k = 1; k < p.r; ++k) {
        c *= space_size - k + 1;
        c /= k;
        counts.emplace(k, c);
        prefix += c;
    }
    counts.emplace(p.r, BigCount(members - prefix));
    return PropertyCollection::from_counts(TargetSpace(space_size), std::move(counts));
}

double kappa_star(const WidthQuery& query) {
    const double w = info_width(query).width_bits;
    if (!(w > 0.0)) throw UndefinedValueError("kappa* is undefined when the width is zero");
    return query.l / w;
}

double efficiency(const PropertyCollection& x) {
    const double info = information(x, WholeSpace{});
    if (!(info > 0.0)) throw UndefinedValueError("efficiency is undefined for a property with zero information");
    const auto q = WidthQuery::from_members(x.space().size(), x.member_count(), Backend::Auto);
    const double w = info_width(q).width_bits;
    if (!(w > 0.0)) throw UndefinedValueError("efficiency is undefined when the width is zero");
    return info / w;
}

double brute_force_width(std::uint64_t space_size, std::uint64_t members, unsigned threads) {
    if (space_size == 0 || space_size > 4) throw RangeError("brute-force width supports 1 <= N <= 4");
    const std::uint64_t nonempty = (std::uint64_t{1} << space_size) - 1;
    if (members < 1 || members > nonempty) throw RangeError("member count outside [1, 2^N - 1]");

    // Choice masks over the nonempty subsets 1..2^N-1; subset j has size popcount(j).
    const std::uint64_t total = std::uint64_t{1} << nonempty;
    constexpr std::size_t kShards = 64;
    std::vector<double> best(kShards, -std::numeric_limits<double>::infinity());
    const double log_n = std::log2(static_cast<double>(space_size));
    for_each_shard(kShards, resolve_threads(threads), [&](std::size_t s) {
        const std::uint64_t begin = total * s / kShards;
        const std::uint64_t end = total * (s + 1) / kShards;
        for (std::uint64_t choice = begin; choice < end; ++choice) {
            if (static_cast<std::uint64_t>(std::popcount(choice)) != members) continue;
            double sum = 0.0;
            for (std::uint64_t j = 1; j <= nonempty; ++j) {
                if (choice >> (j - 1) & 1) sum += std::log2(static_cast<double>(std::popcount(j)));
            }
            best[s] = std::max(best[s], log_n - sum / static_cast<double>(members));
        }
    });
    double out = -std::numeric_limits<double>::infinity();
    for (double b : best) out = std::max(out, b);
    return out;
}

double provider_width_bruteforce(std::uint64_t space_size, std::uint64_t members) {
    if (space_size == 0 || space_size > 3) throw RangeError("brute-force provider width supports 1 <= N <= 3");
    const std::uint64_t nonempty = (std::uint64_t{1} << space_size) - 1;
    if (members < 1 || members > nonempty) throw RangeError("member count outside [1, 2^N - 1]");

    auto pair_info = [](std::uint64_t a, std::uint64_t b) {
        return 2.0 * std::log2(static_cast<double>(std::popcount(a | b))) -
               std::log2(static_cast<double>(std::popcount(a))) - std::log2(static_cast<double>(std::popcount(b)));
    };
    double best = -std::numeric_limits<double>::infinity();
    for (std::uint64_t choice = 1; choice < (std::uint64_t{1} << nonempty); ++choice) {
        if (static_cast<std::uint64_t>(std::popcount(choice)) != members) continue;
        double worst = std::numeric_limits<double>::infinity();
        for (std::uint64_t y = 1; y <= nonempty; ++y) {
            bool informative = false;
            double sum = 0.0;
            for (std::uint64_t z = 1; z <= nonempty; ++z) {
                if (!(choice >> (z - 1) & 1)) continue;
                if (z & y) informative = true;
                sum += pair_info(y, z);
            }
            if (informative) worst = std::min(worst, sum / static_cast<double>(members));
        }
        best = std::max(best, worst);
    }
    return best;
}

}  // namespace infowidth
