#include <doctest.h>

#include <cmath>
#include <map>

#include "../oracle/naive_oracle.hpp"
#include "infowidth/errors.hpp"
#include "infowidth/random_classes.hpp"
#include "infowidth/report.hpp"

using namespace infowidth;

namespace {

std::uint64_t class_key(const FunctionClass& g) {
    std::uint64_t key = 0;
    for (BinaryFunc f : g.members()) key |= std::uint64_t{1} << f;
    return key;
}

// Histogram of class masks over all C(2^n, k) classes, indexed in ascending mask order.
std::vector<std::uint64_t> histogram(unsigned n, std::uint64_t k, const std::vector<std::uint64_t>& keys) {
    std::map<std::uint64_t, std::uint64_t> index;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << (1u << n)); ++m)
        if (static_cast<std::uint64_t>(__builtin_popcountll(m)) == k) index.emplace(m, index.size());
    std::vector<std::uint64_t> h(index.size());
    for (auto key : keys) ++h.at(index.at(key));
    return h;
}

}  // namespace

TEST_CASE("rng is deterministic and streams differ") {
    RngHandle a(42, 3), b(42, 3), c(42, 4);
    for (int i = 0; i < 10; ++i) CHECK(a.next_u64() == b.next_u64());
    CHECK(RngHandle(42, 3).next_u64() != c.next_u64());
    RngHandle r(1);
    for (int i = 0; i < 1000; ++i) {
        CHECK(r.below(7) < 7);
        const double u = r.uniform01();
        CHECK((u >= 0.0 && u < 1.0));
    }
}

TEST_CASE("bernoulli estimate") {
    const auto e = bernoulli_estimate(25, 100, 9);
    CHECK(e.estimate == 0.25);
    CHECK(e.std_error == doctest::Approx(std::sqrt(0.25 * 0.75 / 99)).epsilon(1e-12));
    CHECK(e.trials == 100);
    CHECK(e.seed == 9);
}

TEST_CASE("uniform k sampler returns k distinct functions") {
    RngHandle rng(5);
    for (unsigned n : {2u, 5u, 12u, 20u})
        for (std::uint64_t k : {1ULL, 3ULL, 4ULL}) {
            const auto g = sample_class_uniform_k(n, k, rng);
            CHECK(g.size() == k);
            CHECK(g.n() == n);
        }
    CHECK(sample_class_uniform_k(3, 8, rng) == FunctionClass::full(3));
    CHECK_THROWS_AS(sample_class_uniform_k(2, 5, rng), RangeError);
}

TEST_CASE("binomial sampler keeps about half the functions") {
    RngHandle rng(11);
    std::uint64_t total = 0;
    for (int i = 0; i < 200; ++i) total += sample_class_binomial(8, 0.5, rng).size();
    const double mean = double(total) / 200;
    CHECK(std::fabs(mean - 128) < 3);
}

TEST_CASE("uniform k sampler is uniform (chi-square)") {
    for (auto [n, k] : {std::pair{2u, 2ULL}, {2u, 3ULL}, {3u, 2ULL}}) {
        RngHandle rng(17, n * 100 + k);
        std::vector<std::uint64_t> keys;
        for (int t = 0; t < 20000; ++t) keys.push_back(class_key(sample_class_uniform_k(n, k, rng)));
        CHECK(chi_square_uniform(histogram(n, k, keys)).p_value > 0.01);
    }
}

TEST_CASE("matrix rejection sampler matches the uniform k sampler") {
    for (auto [n, k] : {std::pair{2u, 2ULL}, {2u, 3ULL}, {3u, 2ULL}}) {
        RngHandle ra(23, n * 100 + k), rb(29, n * 100 + k);
        std::vector<std::uint64_t> a, b;
        for (int t = 0; t < 20000; ++t) {
            a.push_back(class_key(sample_simple_matrix(n, k, ra).cls));
            b.push_back(class_key(sample_class_uniform_k(n, k, rb)));
        }
        CHECK(chi_square_two_sample(histogram(n, k, a), histogram(n, k, b)).p_value > 0.01);
    }
}

TEST_CASE("simple matrix acceptance") {
    CHECK(simple_matrix_acceptance(2, 2) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(simple_matrix_acceptance(2, 4) == doctest::Approx(0.09375).epsilon(1e-15));
    const auto e = estimate_simple_matrix_acceptance(2, 2, 100000, 3);
    CHECK(std::fabs(e.estimate - 0.75) <= 3 * e.std_error);
    RngHandle rng(1);
    CHECK_THROWS_AS(sample_simple_matrix(5, 32, rng), InfeasibleError);
}

TEST_CASE("property probabilities") {
    CHECK(mc_property_prob(2, 1, Vd{1}, 1000, 1).estimate == 1.0);
    const auto l = mc_property_prob(2, 2, Ld{1}, 100000, 2);
    CHECK(std::fabs(l.estimate - 4.0 / 6.0) <= 3 * l.std_error);
    CHECK(mc_property_prob(10, 1, Ld{2}, 2000, 3).estimate == 1.0);
    CHECK(mc_property_prob(10, 10, Ld{2}, 20000, 3).estimate < 0.01);
    CHECK(mc_property_prob(10, 3, VdC{2}, 2000, 3).estimate == 0.0);
    CHECK(mc_property_prob(10, 64, VdC{2}, 2000, 3).estimate >= 0.9);
}

TEST_CASE("estimates do not depend on the thread count") {
    const auto a = mc_property_prob(4, 5, Vd{2}, 30000, 77, 1);
    const auto b = mc_property_prob(4, 5, Vd{2}, 30000, 77, 4);
    CHECK(a.estimate == b.estimate);
    CHECK(a.std_error == b.std_error);
    const auto ra = mc_info_report(3, Ld{1}, 5000, 77, 1);
    const auto rb = mc_info_report(3, Ld{1}, 5000, 77, 3);
    CHECK(ra.report.information_bits == rb.report.information_bits);
    CHECK(ra.report.description_bits == rb.report.description_bits);
}

TEST_CASE("property probabilities agree with exhaustive counts at n <= 3") {
    using naive::Kind;
    for (unsigned n = 1; n <= 3; ++n) {
        const std::uint64_t nf = 1u << n;
        for (unsigned d = 1; d <= n; ++d) {
            const std::pair<PropertySpec, naive::Spec> specs[] = {
                {Vd{double(d)}, {Kind::V, d, {}}},
                {VdC{double(d)}, {Kind::VC, d, {}}},
                {Ld{double(d)}, {Kind::L, d, {}}},
            };
            for (const auto& [spec, oracle] : specs) {
                const auto counts = naive::counts(n, oracle);
                for (std::uint64_t k = 1; k <= nf; ++k) {
                    const double exact = (counts.count(k) ? static_cast<double>(counts.at(k)) : 0.0) /
                                         static_cast<double>(binomial(nf, k));
                    const auto e = mc_property_prob(n, k, spec, 4000, 1000 * n + 10 * d + k);
                    CHECK(std::fabs(e.estimate - exact) <= 3 * e.std_error + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("Monte Carlo report tracks the exact report") {
    for (const PropertySpec& spec : {PropertySpec{Vd{2}}, PropertySpec{Ld{1}}, PropertySpec{VdC{1}}}) {
        const auto exact = property_report(3, spec, Method::Exact);
        const auto mc = mc_info_report(3, spec, 20000, 4242);
        CHECK(mc.report.method == "monte-carlo");
        CHECK(std::fabs(mc.report.information_bits - exact.information_bits) <= 3 * mc.information_stderr + 1e-12);
        CHECK(std::fabs(mc.report.description_bits - exact.description_bits) <= 3 * mc.description_stderr + 1e-12);
    }
}

TEST_CASE("identity Monte Carlo is exact") {
    const FunctionClass g(2, {0, 3});
    const auto mc = mc_info_report(2, Identity{g}, 100, 1);
    const auto exact = property_report(2, Identity{g}, Method::Exact);
    CHECK(mc.report.information_bits == exact.information_bits);
    CHECK(mc.report.description_bits == exact.description_bits);
    CHECK(mc.information_stderr == 0.0);
}

TEST_CASE("chi-square helpers") {
    const auto flat = chi_square_uniform({100, 100, 100, 100});
    CHECK(flat.statistic == 0.0);
    CHECK(flat.dof == 3);
    CHECK(flat.p_value == doctest::Approx(1.0));
    CHECK(chi_square_uniform({400, 0, 0, 0}).p_value < 1e-6);
    CHECK(chi_square_two_sample({50, 50}, {50, 50}).p_value == doctest::Approx(1.0));
}
