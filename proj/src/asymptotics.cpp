#include "infowidth/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "infowidth/errors.hpp"

namespace infowidth {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;

// Natural-log correction terms of the expansions, expressed in bits.
double nats_to_bits(double nats) { return nats / kLn2; }

void require(bool ok, Precondition mode, const std::string& what) {
    if (!ok && mode == Precondition::Strict) throw PreconditionError(what);
}

void check_finite_positive(double n, double d) {
    if (!std::isfinite(n) || !std::isfinite(d) || !(n > 0.0) || !(d > 0.0))
        throw DomainError("asymptotic evaluators need finite n > 0 and d > 0");
}

// (1 - x)^N for 0 <= x < 1 without cancellation.
double pow_one_minus(double x, double big_n) { return std::exp(big_n * std::log1p(-x)); }

// Mills ratio Phi(-t)/phi(t) for t >= 20 by its continued fraction.
double mills_ratio(double t) {
    double f = t;
    for (int k = 80; k >= 1; --k) f = t + k / f;
    return 1.0 / f;
}

struct SampleQuantities {
    double big_n, p, sigma, a, b, beta, r, s;
};

SampleQuantities sample_quantities(double n, double d, double m) {
    SampleQuantities q{};
    q.big_n = std::exp2(n);
    const double gamma = std::exp2(-m);
    q.p = gamma / (1.0 + gamma);
    const double mu = q.big_n * q.p;
    q.sigma = std::sqrt(q.big_n * q.p * (1.0 - q.p));
    const double two_d = std::exp2(d);
    q.a = (mu - two_d) / q.sigma;
    q.b = (mu - 2.0) / q.sigma;
    q.beta = std::exp2(-d * two_d);
    q.r = (n - m) / (d * two_d);
    q.s = std_normal_cdf(q.a) * mu + std_normal_pdf(q.a) * q.sigma;
    return q;
}

void check_sample_regime(double n, double d, double m, Precondition mode) {
    check_finite_positive(n, d);
    if (!std::isfinite(m) || m < 0.0 || m >= n) throw DomainError("sample size m must satisfy 0 <= m < n");
    // The sample fixes m points; the bounded-VC argument runs on the remaining n - m.
    require(n - m < d * std::exp2(d), mode,
            "bounded-VC estimates need n - m < d 2^d (n = " + std::to_string(n) + ", d = " + std::to_string(d) +
                ", m = " + std::to_string(m) + ")");
}

}  // namespace

double std_normal_pdf(double x) { return std::exp(std_normal_log_pdf(x)); }

double std_normal_log_pdf(double x) { return -0.5 * x * x - kLogSqrt2Pi; }

double std_normal_cdf(double x) {
    if (x < -37.5) return std::exp(std_normal_log_cdf(x));
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double std_normal_log_cdf(double x) {
    if (x < -20.0) return std_normal_log_pdf(x) + std::log(mills_ratio(-x));
    if (x > 5.0) return std::log1p(-0.5 * std::erfc(x / std::numbers::sqrt2));
    return std::log(0.5 * std::erfc(-x / std::numbers::sqrt2));
}

double ld_info(double n, double d, Precondition mode) {
    check_finite_positive(n, d);
    require(d >= 1.0 && d < n, mode, "ld estimates need 1 <= d < n");
    const double two_d = std::exp2(d);
    const double a = 2.0 * (1.0 + two_d) * std::exp2(-(n + d) / 2.0) - std::exp2((n - d) / 2.0);
    const double log_ratio = n - std::log2(1.0 + two_d);
    const double num = std_normal_cdf(-a) * log_ratio + nats_to_bits(std::exp2(-(n - d) / 2.0) * std_normal_pdf(a));
    const double den = -std::expm1(std::exp2(n) * std::log1p(-1.0 / (1.0 + two_d)));
    return n - num / den;
}

IntervalBits ld_complexity(double n, double d, Precondition mode) {
    check_finite_positive(n, d);
    require(d >= 1.0 && d < n, mode, "ld estimates need 1 <= d < n");
    const double two_d = std::exp2(d);
    const double base = std::exp2(n) * (two_d / (1.0 + two_d)) - d;
    const double log_n = std::log2(n);
    return {base - d * log_n, base - log_n};
}

double vdc_info(double n, double d, Precondition mode) {
    check_finite_positive(n, d);
    require(d < n && n > 1.0, mode, "vdc estimates need d < n");
    const double big_n = std::exp2(n);
    const double root_n = std::exp2(n / 2.0);
    const double a = (big_n - std::exp2(d + 1.0)) / root_n;
    const double cdf = std_normal_cdf(a);
    const double pdf = std_normal_pdf(a);
    const double den = big_n * cdf + root_n * pdf;
    const double num = (n - 1.0) * (big_n * cdf + root_n * pdf * (1.0 + a * a / ((n - 1.0) * big_n)));
    return n - num / den;
}

FlaggedBits vdc_complexity(double n, double d) {
    check_finite_positive(n, d);
    const double big_n = std::exp2(n);
    const double a = (big_n - std::exp2(d + 1.0)) * std::exp2(-n / 2.0);
    FlaggedBits out;
    out.value = d * (std::exp2(d) + 1.0) + std::log2(d) -
                std::log2(big_n * std_normal_cdf(a) + std::exp2(n / 2.0) * std_normal_pdf(a)) - std::log2(n) + 1.0;
    out.precondition_met = d > std::log2(n);
    return out;
}

FlaggedBits vd_complexity(double n, double d) {
    FlaggedBits c = vdc_complexity(n, d);
    if (!(c.value > 0.0))
        throw DomainError("complement complexity undefined: l(x_VdC) = " + std::to_string(c.value) + " <= 0");
    c.value = complement_complexity(c.value);
    return c;
}

double vdsm_info(double n, double d, double m, Precondition mode) {
    check_sample_regime(n, d, m, mode);
    const SampleQuantities q = sample_quantities(n, d, m);
    const double leftover = pow_one_minus(q.p, q.big_n);
    const double den = 1.0 - leftover - q.r * q.s * q.beta;
    const double corr = nats_to_bits(std_normal_pdf(q.b) / (std::sqrt(q.big_n) * den) * std::sqrt((1.0 - q.p) / q.p));
    // n - log2(N p) with log2 p = -m - log2(1 + 2^-m).
    const double minus_log2_p = m + std::log1p(std::exp2(-m)) / kLn2;
    return minus_log2_p - corr;
}

double vd_info(double n, double d, Precondition mode) { return vdsm_info(n, d, 0.0, mode); }

double vdsm_complexity(double n, double d, double m, Precondition mode) {
    check_sample_regime(n, d, m, mode);
    const SampleQuantities q = sample_quantities(n, d, m);
    const double two_d = std::exp2(d);
    const double lead = q.big_n * (1.0 + std::log1p(-q.p) / kLn2);
    const double weight = (n - m) / d * std::exp2(-d * (1.0 + two_d));
    const double mid = weight * (std_normal_cdf(q.a) * std::exp2(n - m) + std_normal_pdf(q.a) * std::exp2((n - m) / 2.0));
    return lead + mid + pow_one_minus(q.p, q.big_n);
}

double vdsm_complexity_estimate(double n, double d, double m) {
    check_finite_positive(n, d);
    const double gamma = std::exp2(-m);
    const double p = gamma / (1.0 + gamma);
    const double two_d = std::exp2(d);
    return std::exp2(n) * (1.0 + (n - m) / d * std::exp2(-(d * (1.0 + two_d) + m)) + std::log1p(-p) / kLn2);
}

ExpDecayInfo expdecay_info(double n, double alpha) {
    if (!std::isfinite(n) || !(n > 0.0)) throw DomainError("expdecay needs n > 0");
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
    const double big_n = std::exp2(n);
    const double p = alpha / (1.0 + alpha);
    const double a = (2.0 - big_n * p) / std::sqrt(big_n * p * (1.0 - p));
    const double log2_p = std::log2(p);
    const double num = std_normal_cdf(-a) * (n + log2_p) + nats_to_bits(std_normal_pdf(a) / std::sqrt(alpha * big_n));
    const double den = -std::expm1(-big_n * std::log1p(alpha));
    ExpDecayInfo out;
    out.information = n - num / den;
    out.limit = std::log2(1.0 + 1.0 / alpha);
    out.complement = 1.0;
    return out;
}

InfoReport identity_report(unsigned n, double g_size) {
    if (n < 1 || n > 1023) throw DomainError("identity report needs 1 <= n <= 1023");
    if (!(g_size >= 1.0) || !(g_size <= std::exp2(static_cast<double>(n))))
        throw RangeError("class size must lie in [1, 2^n]");
    InfoReport out;
    out.method = "closed-form";
    // Integral sizes go through the same high-precision path as the exact enumeration.
    if (g_size == std::floor(g_size) && g_size < 9007199254740992.0) {
        const HighPrecision h = g_size >= 2.0 ? log2_hp(static_cast<std::uint64_t>(g_size)) : HighPrecision(0);
        out.conditional_entropy_bits = static_cast<double>(h);
        out.information_bits = static_cast<double>(HighPrecision(n) - h);
    } else {
        out.conditional_entropy_bits = std::log2(g_size);
        out.information_bits = static_cast<double>(static_cast<long double>(n) - std::log2(static_cast<long double>(g_size)));
    }
    out.description_bits = std::exp2(static_cast<double>(n));
    if (out.information_bits > 0.0) {
        out.cost = out.description_bits / out.information_bits;
        out.efficiency = out.information_bits / static_cast<double>(n);
    }
    return out;
}

}  // namespace infowidth
