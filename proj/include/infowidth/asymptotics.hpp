#pragma once

#include "infowidth/core_measures.hpp"

namespace infowidth {

/// What an evaluator does when called outside the regime its formula assumes.
enum class Precondition {
    Strict,       ///< throw PreconditionError
    Extrapolate,  ///< evaluate anyway (figure curves reach into small n)
};

struct IntervalBits {
    double low = 0.0;
    double high = 0.0;
    double midpoint() const { return 0.5 * (low + high); }
};

/// Value plus a flag raised when a stated premise does not hold.
struct FlaggedBits {
    double value = 0.0;
    bool precondition_met = true;
};

double std_normal_pdf(double x);
double std_normal_cdf(double x);
/// log phi(x) and log Phi(x) in nats; finite far into the lower tail.
double std_normal_log_pdf(double x);
double std_normal_log_cdf(double x);

/// I(x_Ld : F) for 1 <= d < n, with the o-term of the expansion dropped.
double ld_info(double n, double d, Precondition mode = Precondition::Strict);

/// l(x_Ld) = 2^n 2^d/(1+2^d) - d - c log2 n over c in [1, d]; low end at c = d.
IntervalBits ld_complexity(double n, double d, Precondition mode = Precondition::Strict);

/// I(x_VdC : F) for d < n.
double vdc_info(double n, double d, Precondition mode = Precondition::Strict);

/// l(x_VdC); precondition_met is false when d <= log2 n (value still computed).
FlaggedBits vdc_complexity(double n, double d);

/// I(x_Vd : F) = 1 - correction, with a normal-approximation correction.
/// Requires n < d 2^d.
double vd_info(double n, double d, Precondition mode = Precondition::Strict);

/// l(x_Vd) = -log2(1 - 2^-l(x_VdC)).
FlaggedBits vd_complexity(double n, double d);

/// I(x_Vd(S_m) : F) = n - [log2(N p) + correction], p = 2^-m/(2^-m + 1).
/// Requires n < d 2^d and 0 <= m < n.
double vdsm_info(double n, double d, double m, Precondition mode = Precondition::Strict);

/// l(x_Vd(S_m)) from its full closed-form expression.
double vdsm_complexity(double n, double d, double m, Precondition mode = Precondition::Strict);

/// The short-form estimate 2^n (1 + (n-m)/(d 2^(d(1+2^d)+m)) + log2(1-p)).
double vdsm_complexity_estimate(double n, double d, double m);

struct ExpDecayInfo {
    double information = 0.0;  ///< finite-n formula
    double limit = 0.0;         ///< log2(1 + 1/alpha)
    double complement = 1.0;    ///< I(x_{Q^c} : F)
};

/// Property with P*_{n,k}(Q) = c alpha^k, 0 < alpha < 1.
ExpDecayInfo expdecay_info(double n, double alpha);

/// Exact closed forms for the property satisfied by one class of size g_size:
/// I = n - log2|G|, l = 2^n, kappa = 2^n / I, eta = I / n. g_size may be real.
InfoReport identity_report(unsigned n, double g_size);

}  // namespace infowidth
