// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only
// The exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "../oracle/naive_oracle.hpp"
#include "infowidth/asymptotics.hpp"
#include "infowidth/core_measures.hpp"
#include "infowidth/figures.hpp"
#include "infowidth/function_classes.hpp"
#include "infowidth/random_classes.hpp"
#include "infowidth/report.hpp"
#include "infowidth/width.hpp"

using namespace infowidth;

namespace {

namespace tol {
constexpr double kWidthOracle = 1e-9;
constexpr double kBackend = 1e-9;
constexpr double kClosedForm = 1e-12;
constexpr double kCostN2 = 1e-4;
constexpr double kEfficiency = 1e-12;
constexpr double kComplement = 1e-12;
constexpr double kSigmas = 3.0;
constexpr double kChiSquareLevel = 0.01;
constexpr double kLdInfo = 0.05;
constexpr double kVdcInfo = 0.1;
constexpr double kVdInfo = 1e-3;
constexpr double kVdsmInfo = 1e-2;
constexpr double kExpDecay = 0.01;
}  // namespace tol

constexpr std::uint64_t kSeed = 20240601;
constexpr std::uint64_t kTrials = 100'000;

// Collects the failures of one criterion.
struct Check {
    std::vector<std::string> failures;
    std::size_t count = 0;

    void expect(bool ok, const std::string& what) {
        ++count;
        if (!ok && failures.size() < 8) failures.push_back(what);
        else if (!ok) failures.back() = "...";
    }
    void near(double got, double want, double tolerance, const std::string& what) {
        std::ostringstream s;
        s.precision(17);
        s << what << ": got " << got << ", want " << want << " +- " << tolerance;
        expect(std::fabs(got - want) <= tolerance, s.str());
    }
};

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

void criterion1(Check& c) {
    for (std::uint64_t n = 2; n <= 4; ++n)
        for (std::uint64_t m = 1; m < (1ULL << n); ++m) {
            const double formula = info_width(WidthQuery::from_members(n, BigCount(m))).width_bits;
            c.near(formula, brute_force_width(n, m), tol::kWidthOracle,
                   "N=" + std::to_string(n) + " m=" + std::to_string(m));
        }
}

void criterion2(Check& c) {
    for (std::uint64_t n : {5, 6, 7}) {
        const std::uint64_t space = 1ULL << n;
        double prev_width = -1, prev_kappa = -1;
        for (double l = 0.25; l <= double(space); l += 0.25) {
            const auto e = info_width(WidthQuery::from_bits(space, l, Backend::Exact));
            const auto g = info_width(WidthQuery::from_bits(space, l, Backend::LogDomain));
            const std::string at = "n=" + std::to_string(n) + " l=" + fmt(l);
            c.expect(e.width_bits >= prev_width, at + ": I* decreased");
            const double kappa = l / e.width_bits;
            c.expect(kappa > prev_kappa, at + ": kappa* not strictly increasing");
            c.near(g.width_bits, e.width_bits, tol::kBackend, at + " backends");
            prev_width = e.width_bits;
            prev_kappa = kappa;
        }
        const double top = info_width(WidthQuery::from_bits(space, double(space), Backend::Exact)).width_bits;
        c.expect(top == double(n), "n=" + std::to_string(n) + ": I*(2^n) = " + fmt(top));
    }
}

void criterion3(Check& c) {
    for (double n : {4.0, 9.0, 16.0, 25.0}) {
        const double rn = std::sqrt(n);
        const auto ln = static_cast<unsigned>(n);
        c.near(*identity_report(ln, rn).efficiency, 1 - std::log2(n) / (2 * n), tol::kClosedForm, "|G|=sqrt n, n=" + fmt(n));
        c.near(*identity_report(ln, n).efficiency, 1 - std::log2(n) / n, tol::kClosedForm, "|G|=n, n=" + fmt(n));
        c.near(*identity_report(ln, std::exp2(n - rn)).efficiency, 1 / rn, tol::kClosedForm,
               "|G|=2^(n-sqrt n), n=" + fmt(n));
    }
}

void criterion4(Check& c) {
    const auto v1 = property_report(2, Vd{1}, Method::Exact);
    c.expect(v1.information_bits == 2 && v1.conditional_entropy_bits == 0 && v1.description_bits == 2 &&
                 v1.cost && *v1.cost == 1,
             "n=2 V_1 (I, H, l, kappa)");
    c.near(v1.efficiency.value_or(NAN), 1, tol::kEfficiency, "n=2 V_1 eta");
    const auto l1 = property_report(2, Ld{1}, Method::Exact);
    c.expect(l1.information_bits == 1.5 && l1.conditional_entropy_bits == 0.5 && l1.description_bits == 1,
             "n=2 L_1 (I, H, l)");
    c.near(l1.cost.value_or(NAN), 2.0 / 3.0, tol::kCostN2, "n=2 L_1 kappa");
    c.near(l1.efficiency.value_or(NAN), 1, tol::kEfficiency, "n=2 L_1 eta");

    // n = 3: the naive enumeration yields the member counts; they must match the library's
    // enumeration exactly, and the measures computed from them must be bit-identical.
    using naive::Kind;
    const std::pair<PropertySpec, naive::Spec> specs[] = {
        {Vd{1}, {Kind::V, 1, {}}},   {Vd{2}, {Kind::V, 2, {}}},   {Vd{3}, {Kind::V, 3, {}}},
        {VdC{1}, {Kind::VC, 1, {}}}, {VdC{2}, {Kind::VC, 2, {}}}, {VdC{3}, {Kind::VC, 3, {}}},
        {Ld{1}, {Kind::L, 1, {}}},   {Ld{2}, {Kind::L, 2, {}}},   {Ld{3}, {Kind::L, 3, {}}},
        {VdSample{2, LabeledSample({{1, false}})}, {Kind::VSample, 2, {{1, 0}}}},
    };
    for (const auto& [spec, oracle] : specs) {
        const std::string name = std::string(spec_name(spec)) + " d=" + std::to_string(oracle.d);
        const auto counts = naive::counts(3, oracle);
        const auto lib = property_report(3, spec, Method::Exact);
        const auto ref = exact_report(PropertyCollection::from_counts(TargetSpace(8), counts));
        c.expect(enumerate_counts(3, spec) == counts, name + ": member counts differ");
        c.expect(lib.information_bits == ref.information_bits, name + ": I not bit-identical");
        c.expect(lib.conditional_entropy_bits == ref.conditional_entropy_bits, name + ": H not bit-identical");
        c.expect(lib.description_bits == ref.description_bits, name + ": l not bit-identical");
        c.expect(lib.cost == ref.cost, name + ": kappa not bit-identical");
        c.expect(lib.efficiency == ref.efficiency, name + ": eta not bit-identical");
        // Plain long-double evaluation of the same counts.
        const auto plain = naive::measures(3, oracle);
        c.near(lib.information_bits, plain.information, 1e-13, name + ": I vs plain evaluation");
        c.near(lib.description_bits, plain.description, 1e-13, name + ": l vs plain evaluation");
    }
}

void criterion5(Check& c) {
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned d = 1; d <= n; ++d) {
            const double lv = property_report(n, Vd{double(d)}, Method::Exact).description_bits;
            const double lc = property_report(n, VdC{double(d)}, Method::Exact).description_bits;
            c.near(std::exp2(-lv) + std::exp2(-lc), 1.0, tol::kComplement,
                   "exact n=" + std::to_string(n) + " d=" + std::to_string(d));
        }
    for (double n : {8.0, 10.0, 16.0, 20.0, 24.0, 30.0})
        for (double d = std::floor(std::log2(n)) + 1; d <= n; ++d) {
            const double lv = vd_complexity(n, d).value, lc = vdc_complexity(n, d).value;
            c.near(std::exp2(-lv) + std::exp2(-lc), 1.0, tol::kComplement, "asymptotic n=" + fmt(n) + " d=" + fmt(d));
        }
}

void criterion6(Check& c) {
    for (const PropertySpec& spec : {PropertySpec{Vd{2}}, PropertySpec{Ld{1}}, PropertySpec{VdC{1}}}) {
        const auto exact = property_report(3, spec, Method::Exact);
        const auto mc = mc_info_report(3, spec, kTrials, kSeed);
        const std::string name = spec_name(spec);
        c.near(mc.report.information_bits, exact.information_bits, tol::kSigmas * mc.information_stderr, name + " I");
        c.near(mc.report.description_bits, exact.description_bits, tol::kSigmas * mc.description_stderr, name + " l");
    }
}

std::uint64_t class_key(const FunctionClass& g) {
    std::uint64_t key = 0;
    for (BinaryFunc f : g.members()) key |= std::uint64_t{1} << f;
    return key;
}

std::vector<std::uint64_t> histogram(unsigned n, std::uint64_t k, const std::vector<std::uint64_t>& keys) {
    std::map<std::uint64_t, std::size_t> index;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << (1u << n)); ++m)
        if (static_cast<std::uint64_t>(__builtin_popcountll(m)) == k) index.emplace(m, index.size());
    std::vector<std::uint64_t> h(index.size());
    for (auto key : keys) ++h.at(index.at(key));
    return h;
}

void criterion7(Check& c) {
    const auto a22 = estimate_simple_matrix_acceptance(2, 2, kTrials, kSeed);
    c.near(a22.estimate, 0.75, tol::kSigmas * a22.std_error, "acceptance (2,2)");
    const auto a24 = estimate_simple_matrix_acceptance(2, 4, kTrials, kSeed + 1);
    c.near(a24.estimate, 0.09375, tol::kSigmas * a24.std_error, "acceptance (2,4)");

    for (auto [n, k] : {std::pair{2u, 2ULL}, {2u, 3ULL}, {3u, 2ULL}}) {
        RngHandle matrix_rng(kSeed, 1000 + n * 100 + k), subset_rng(kSeed, 2000 + n * 100 + k);
        std::vector<std::uint64_t> from_matrix, from_subset;
        for (std::uint64_t t = 0; t < kTrials; ++t) {
            from_matrix.push_back(class_key(sample_simple_matrix(n, k, matrix_rng).cls));
            from_subset.push_back(class_key(sample_class_uniform_k(n, k, subset_rng)));
        }
        const std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
        const auto h = histogram(n, k, from_matrix);
        const auto u = chi_square_uniform(h);
        c.expect(u.p_value >= tol::kChiSquareLevel, "matrix sampler uniformity " + at + " p=" + fmt(u.p_value));
        const auto two = chi_square_two_sample(h, histogram(n, k, from_subset));
        c.expect(two.p_value >= tol::kChiSquareLevel, "matrix vs subset sampler " + at + " p=" + fmt(two.p_value));
    }
}

void criterion8(Check& c) {
    const auto l1 = mc_property_prob(10, 1, Ld{2}, kTrials, kSeed);
    c.expect(l1.estimate == 1.0, "P(L_2 | k=1) = " + fmt(l1.estimate));
    const auto l10 = mc_property_prob(10, 10, Ld{2}, kTrials, kSeed);
    c.expect(l10.estimate < 0.01, "P(L_2 | k=10) = " + fmt(l10.estimate));
    const auto v3 = mc_property_prob(10, 3, VdC{2}, kTrials, kSeed);
    c.expect(v3.estimate == 0.0, "P(V_2^c | k=3) = " + fmt(v3.estimate));
    const auto v64 = mc_property_prob(10, 64, VdC{2}, kTrials, kSeed);
    c.expect(v64.estimate >= 0.9, "P(V_2^c | k=64) = " + fmt(v64.estimate));
}

void criterion9(Check& c) {
    c.near(ld_info(30, 5), std::log2(33.0), tol::kLdInfo, "ld_info(30,5)");
    c.near(vdc_info(20, 4), 1.0, tol::kVdcInfo, "vdc_info(20,4)");
    c.near(vd_info(20, 4), 1.0, tol::kVdInfo, "vd_info(20,4)");
    c.near(vdsm_info(20, 4, 5), 5.0, tol::kVdsmInfo, "vdsm_info(20,4,5)");
    c.near(expdecay_info(60, 1 / std::exp(1.0)).limit, 1.8928, tol::kExpDecay, "expdecay limit at 1/e");
    for (double n : {10.0, 20.0, 30.0})
        for (double d : {4.0, 5.0, 6.0})
            c.expect(vdsm_info(n, d, 0) == vd_info(n, d), "vdsm_info(n,d,0) != vd_info at n=" + fmt(n) + " d=" + fmt(d));
}

void criterion10(Check& c) {
    const auto t = make_figure("4");
    auto row_of = [&](double b) {
        for (std::size_t i = 0; i < t.x.size(); ++i)
            if (std::fabs(t.x[i] - b) < 1e-9) return i;
        throw std::runtime_error("b grid lacks " + fmt(b));
    };
    const std::size_t series = t.series.size();
    c.expect(series == 4, "expected four a-series");
    for (std::size_t i = 0; i < t.x.size(); ++i)
        for (std::size_t j = 1; j < series; ++j)
            c.expect(t.rows[i][j].has_value() && t.rows[i][j - 1].has_value() && *t.rows[i][j] > *t.rows[i][j - 1],
                     "eta not increasing in a at b=" + fmt(t.x[i]) + " (" + t.series[j] + ")");
    const std::size_t b005 = row_of(0.05), b02 = row_of(0.2), b04 = row_of(0.4);
    for (std::size_t j = 0; j < series; ++j) {
        const double early = std::fabs(*t.rows[b02][j] - *t.rows[b005][j]);
        const double late = std::fabs(*t.rows[b04][j] - *t.rows[b02][j]);
        c.expect(late < early, t.series[j] + ": no saturation in b (" + fmt(late) + " >= " + fmt(early) + ")");
    }
}

struct Criterion {
    const char* title;
    std::function<void(Check&)> run;
};

const std::map<int, Criterion>& criteria() {
    static const std::map<int, Criterion> all = {
        {1, {"width formula equals brute force for N = 2, 3, 4", criterion1}},
        {2, {"I*(l) and kappa*(l) tables for n = 5, 6, 7", criterion2}},
        {3, {"identity property efficiency closed forms", criterion3}},
        {4, {"exact property reports against the naive oracle", criterion4}},
        {5, {"complement identity for V_d and V_d^c", criterion5}},
        {6, {"Monte Carlo reports within 3 sigma of exact at n = 3", criterion6}},
        {7, {"rejection sampler acceptance and uniformity", criterion7}},
        {8, {"zero-one thresholds at n = 10, d = 2", criterion8}},
        {9, {"asymptotic evaluators at reference points", criterion9}},
        {10, {"efficiency of V_d(S_m) increases in a and saturates in b", criterion10}},
    };
    return all;
}

bool run(int id) {
    const auto& cr = criteria().at(id);
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
        cr.run(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = c.failures.empty();
    std::printf("criterion %2d: %s  %s  (%zu checks, %.1fs)\n", id, pass ? "PASS" : "FAIL", cr.title, c.count, secs);
    for (const auto& f : c.failures) std::printf("    - %s\n", f.c_str());
    std::fflush(stdout);
    return pass;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            selected.push_back(std::atoi(argv[++i]));
        } else {
            std::fprintf(stderr, "usage: acceptance [--criterion N]...\n");
            return 2;
        }
    }
    if (selected.empty())
        for (const auto& [id, cr] : criteria()) selected.push_back(id);
    bool all = true;
    for (int id : selected) {
        if (!criteria().count(id)) {
            std::fprintf(stderr, "unknown criterion %d\n", id);
            return 2;
        }
        all = run(id) && all;
    }
    return all ? 0 : 1;
}
