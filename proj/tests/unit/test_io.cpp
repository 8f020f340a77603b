#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "infowidth/errors.hpp"
#include "infowidth/figures.hpp"
#include "infowidth/json_io.hpp"
#include "infowidth/report.hpp"
#include "infowidth/width.hpp"

using namespace infowidth;

TEST_CASE("property JSON round trip") {
    const auto x = parse_property_json(R"({"ny": 4, "subsets": [[0], [1], [2], [3]]})");
    const auto r = exact_report(x);
    CHECK(r.information_bits == 2.0);
    CHECK(r.conditional_entropy_bits == 0.0);
    CHECK(r.description_bits == 2.0);
    const auto again = parse_property_json(property_to_json(x).dump());
    CHECK(again.member_count() == x.member_count());

    const auto y = parse_property_json(R"({"ny": 8, "subsets": [[0, 1], [0, 1, 2, 3, 4, 5, 6, 7]]})");
    CHECK(exact_report(y).conditional_entropy_bits == 2.0);
    CHECK(exact_report(y).information_bits == 1.0);

    const auto p = parse_property_json(R"({"ny": 200, "counts": {"1": "200", "2": "19900"}})");
    CHECK_FALSE(p.is_explicit());
    CHECK(p.member_count() == 20100);
}

TEST_CASE("schema errors carry a line") {
    const std::string text = "{\n  \"ny\": 4,\n  \"subsets\": [[0],\n    [7]]\n}";
    try {
        parse_property_json(text);
        FAIL("expected an error");
    } catch (const JsonInputError& e) {
        CHECK(e.line() == 4);
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_property_json("{\"ny\": 4, \"subsets\": [[]]}"), JsonInputError);
    CHECK_THROWS_AS(parse_property_json("{\"ny\": 4,"), JsonInputError);
    CHECK_THROWS_AS(parse_property_json("{\"subsets\": [[0]]}"), JsonInputError);
}

TEST_CASE("target, class and sample documents") {
    const TargetSpace s(4);
    CHECK(parse_target_json(R"({"target": [1, 2]})", s).size() == 2);
    CHECK(parse_target_json("[3]", s).size() == 1);
    const auto g = parse_class_json(R"({"n": 2, "class": [0, 3]})");
    CHECK(g == FunctionClass(2, {0, 3}));
    CHECK(parse_class_json(class_to_json(g).dump()) == g);
    const auto smp = parse_sample_json(R"({"sample": [[1, 0], [3, 1]]})");
    CHECK(smp.size() == 2);
    CHECK(parse_sample_json(sample_to_json(smp).dump()) == smp);
    CHECK_THROWS_AS(parse_sample_json(R"({"sample": [[1, 2]]})"), JsonInputError);
}

TEST_CASE("report JSON uses null for undefined values") {
    InfoReport r;
    r.method = "exact";
    const auto j = report_to_json(r);
    CHECK(j.at("kappa").is_null());
    CHECK(j.at("eta").is_null());
    CHECK(j.at("method") == "exact");
    const auto e = estimate_to_json(McEstimate{0.5, 0.01, 100, 3});
    CHECK(e.at("stderr") == 0.01);
    CHECK(e.at("trials") == 100);
}

TEST_CASE("figure 1 tables") {
    const auto a = make_figure("1a");
    CHECK(a.series == std::vector<std::string>{"Istar_n5", "Istar_n6", "Istar_n7"});
    for (std::size_t i = 0; i < a.x.size(); ++i)
        if (a.x[i] == 32.0) CHECK(*a.rows[i][0] == 5.0);
    // kappa* = l / I*, and it rises strictly over the lower third of each range.
    const auto b = make_figure("1b");
    for (std::size_t j = 0; j < b.series.size(); ++j) {
        const double span = std::exp2(5.0 + double(j));
        double prev = -1;
        for (std::size_t i = 0; i < b.x.size(); ++i) {
            CHECK(a.rows[i][j].has_value() == b.rows[i][j].has_value());
            if (!b.rows[i][j]) continue;
            CHECK(*b.rows[i][j] == doctest::Approx(b.x[i] / *a.rows[i][j]).epsilon(1e-14));
            if (b.x[i] <= span / 3) CHECK(*b.rows[i][j] > prev);
            prev = *b.rows[i][j];
        }
    }
}

TEST_CASE("figure 2b equals the closed forms") {
    const auto t = make_figure("2b");
    for (std::size_t i = 0; i < t.x.size(); ++i) {
        const double n = t.x[i];
        CHECK(*t.rows[i][0] == doctest::Approx(1 - std::log2(n) / (2 * n)).epsilon(1e-12));
        CHECK(*t.rows[i][1] == doctest::Approx(1 - std::log2(n) / n).epsilon(1e-12));
        CHECK(*t.rows[i][2] == doctest::Approx(1 / std::sqrt(n)).epsilon(1e-12));
    }
}

TEST_CASE("figure CSV round trips") {
    const auto t = make_figure("3b");
    const std::string csv = to_csv(t);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind(t.x_label, 0) == 0);
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream cells(line);
        std::string cell;
        std::getline(cells, cell, ',');
        CHECK(std::stod(cell) == doctest::Approx(t.x[row]).epsilon(1e-9));
        for (std::size_t j = 0; j < t.series.size(); ++j) {
            std::getline(cells, cell, ',');
            if (t.rows[row][j]) CHECK(std::fabs(std::stod(cell) - *t.rows[row][j]) <= 5e-10);
            else CHECK(cell.empty());
        }
        ++row;
    }
    CHECK(row == t.x.size());
    CHECK(to_svg(t).find("<svg") != std::string::npos);
    CHECK_THROWS_AS(make_figure("9"), UnsupportedError);
}
