#include "infowidth/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "infowidth/asymptotics.hpp"
#include "infowidth/errors.hpp"
#include "infowidth/report.hpp"
#include "infowidth/width.hpp"

namespace infowidth {

namespace {

constexpr Precondition kFigureMode = Precondition::Extrapolate;

std::optional<double> guarded(auto&& fn) {
    try {
        const double v = fn();
        if (std::isfinite(v)) return v;
    } catch (const DomainError&) {
    } catch (const RangeError&) {
    }
    return std::nullopt;
}

std::string fixed(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

// Figure 1: I*(l) or kappa*(l) on the grid l = 0.25, 0.5, ..., 2^7 for spaces of 2^5, 2^6, 2^7 targets.
FigureTable width_figure(bool cost) {
    FigureTable t;
    t.id = cost ? "1b" : "1a";
    t.title = cost ? "kappa*(l)" : "I*(l)";
    t.x_label = "l";
    t.y_label = cost ? "kappa*" : "I*";
    const unsigned ns[] = {5, 6, 7};
    for (unsigned n : ns) t.series.push_back(std::string(cost ? "kappastar_n" : "Istar_n") + std::to_string(n));
    const int steps = 4 * 128;
    for (int i = 1; i <= steps; ++i) {
        const double l = 0.25 * i;
        t.x.push_back(l);
        std::vector<std::optional<double>> row;
        for (unsigned n : ns) {
            const std::uint64_t space = std::uint64_t{1} << n;
            if (l > static_cast<double>(space)) {
                row.emplace_back();
                continue;
            }
            const auto q = WidthQuery::from_bits(space, l, Backend::Exact);
            row.emplace_back(cost ? kappa_star(q) : info_width(q).width_bits);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

// Figure 2: identity property for |G| = sqrt(n), n, 2^(n - sqrt n).
FigureTable identity_figure(bool eff) {
    FigureTable t;
    t.id = eff ? "2b" : "2a";
    t.title = eff ? "Efficiency of the identity property" : "Information of the identity property";
    t.x_label = "n";
    t.y_label = eff ? "eta" : "I";
    t.series = {"G_sqrt_n", "G_n", "G_2_pow_n_minus_sqrt_n"};
    for (unsigned n = 2; n <= 40; ++n) {
        const double nn = static_cast<double>(n);
        const double sizes[] = {std::sqrt(nn), nn, std::exp2(nn - std::sqrt(nn))};
        t.x.push_back(nn);
        std::vector<std::optional<double>> row;
        for (double g : sizes) {
            const InfoReport r = identity_report(n, g);
            row.emplace_back(eff ? r.efficiency : std::optional<double>(r.information_bits));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::optional<double> eta(unsigned n, std::optional<double> info, std::optional<double> ell) {
    if (!info || !ell) return std::nullopt;
    return efficiency_at(n, *info, *ell);
}

// Figure 3a: eta of L_d, V_d^c and V_d with d = sqrt(n).
FigureTable bounded_vc_figure() {
    FigureTable t;
    t.id = "3a";
    t.title = "Efficiency with d = sqrt(n)";
    t.x_label = "n";
    t.y_label = "eta";
    t.series = {"eta_Ld", "eta_VdC", "eta_Vd"};
    for (unsigned n = 4; n <= 30; ++n) {
        const double nn = static_cast<double>(n);
        const double d = std::sqrt(nn);
        t.x.push_back(nn);
        std::vector<std::optional<double>> row;
        row.push_back(eta(n, guarded([&] { return ld_info(nn, d, kFigureMode); }),
                          guarded([&] { return ld_complexity(nn, d, kFigureMode).midpoint(); })));
        row.push_back(eta(n, guarded([&] { return vdc_info(nn, d, kFigureMode); }),
                          guarded([&] { return vdc_complexity(nn, d).value; })));
        row.push_back(eta(n, guarded([&] { return vd_info(nn, d, kFigureMode); }),
                          guarded([&] { return vd_complexity(nn, d).value; })));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::optional<double> sample_eta(unsigned n, double d, double m) {
    const double nn = static_cast<double>(n);
    return eta(n, guarded([&] { return vdsm_info(nn, d, m, kFigureMode); }),
               guarded([&] { return vdsm_complexity(nn, d, m, kFigureMode); }));
}

// Figure 3b: eta of V_d(S_m) with m = n^a, d = sqrt(n).
FigureTable sample_figure() {
    FigureTable t;
    t.id = "3b";
    t.title = "Efficiency of V_d(S_m), m = n^a, d = sqrt(n)";
    t.x_label = "n";
    t.y_label = "eta";
    const double as[] = {0.01, 0.1, 0.5, 0.95};
    t.series = {"a_0.01", "a_0.1", "a_0.5", "a_0.95"};
    for (unsigned n = 4; n <= 30; ++n) {
        const double nn = static_cast<double>(n);
        t.x.push_back(nn);
        std::vector<std::optional<double>> row;
        for (double a : as) row.push_back(sample_eta(n, std::sqrt(nn), std::pow(nn, a)));
        t.rows.push_back(std::move(row));
    }
    return t;
}

// Figure 4: eta of V_d(S_m) at n = 10 against b, with m = n^a and d = n^b.
FigureTable sample_grid_figure() {
    FigureTable t;
    t.id = "4";
    t.title = "Efficiency of V_d(S_m), n = 10, m = n^a, d = n^b";
    t.x_label = "b";
    t.y_label = "eta";
    const double as[] = {0.1, 0.2, 0.3, 0.4};
    t.series = {"a_0.1", "a_0.2", "a_0.3", "a_0.4"};
    constexpr unsigned n = 10;
    for (int i = 1; i <= 20; ++i) {
        const double b = 0.05 * i;
        t.x.push_back(b);
        std::vector<std::optional<double>> row;
        for (double a : as) row.push_back(sample_eta(n, std::pow(10.0, b), std::pow(10.0, a)));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::vector<std::string> figure_ids() { return {"1a", "1b", "2a", "2b", "3a", "3b", "4"}; }

FigureTable make_figure(std::string_view id) {
    if (id == "1a") return width_figure(false);
    if (id == "1b") return width_figure(true);
    if (id == "2a") return identity_figure(false);
    if (id == "2b") return identity_figure(true);
    if (id == "3a") return bounded_vc_figure();
    if (id == "3b") return sample_figure();
    if (id == "4" || id == "5") return sample_grid_figure();
    throw UnsupportedError("unknown figure id '" + std::string(id) + "' (expected 1a, 1b, 2a, 2b, 3a, 3b or 4)");
}

std::string to_csv(const FigureTable& table, int precision) {
    std::ostringstream out;
    out << csv_field(table.x_label);
    for (const auto& s : table.series) out << ',' << csv_field(s);
    out << "\r\n";
    for (std::size_t i = 0; i < table.x.size(); ++i) {
        out << fixed(table.x[i], precision);
        for (const auto& cell : table.rows[i]) {
            out << ',';
            if (cell) out << fixed(*cell, precision);
        }
        out << "\r\n";
    }
    return out.str();
}

std::string to_svg(const FigureTable& table) {
    constexpr double kW = 640, kH = 420, kLeft = 70, kRight = 170, kTop = 40, kBottom = 50;
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (std::size_t i = 0; i < table.x.size(); ++i) {
        for (const auto& cell : table.rows[i]) {
            if (!cell) continue;
            xmin = std::min(xmin, table.x[i]);
            xmax = std::max(xmax, table.x[i]);
            ymin = std::min(ymin, *cell);
            ymax = std::max(ymax, *cell);
        }
    }
    if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;
    const double pw = kW - kLeft - kRight;
    const double ph = kH - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double y) { return kTop + (1.0 - (y - ymin) / (ymax - ymin)) * ph; };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW
      << ' ' << kH << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "<text x=\"" << kW / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << xml_escape(table.title)
      << "</text>\n";
    s << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 4.0;
        const double yv = ymin + (ymax - ymin) * i / 4.0;
        s << "<text x=\"" << sx(xv) << "\" y=\"" << kTop + ph + 18 << "\" text-anchor=\"middle\">" << fixed(xv, 2)
          << "</text>\n";
        s << "<text x=\"" << kLeft - 6 << "\" y=\"" << sy(yv) + 4 << "\" text-anchor=\"end\">" << fixed(yv, 3)
          << "</text>\n";
    }
    s << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kH - 10 << "\" text-anchor=\"middle\">"
      << xml_escape(table.x_label) << "</text>\n";
    s << "<text x=\"16\" y=\"" << kTop + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << kTop + ph / 2 << ")\">" << xml_escape(table.y_label) << "</text>\n";

    for (std::size_t j = 0; j < table.series.size(); ++j) {
        const char* color = colors[j % std::size(colors)];
        std::string points;
        auto flush = [&] {
            if (!points.empty())
                s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"" << points
                  << "\"/>\n";
            points.clear();
        };
        for (std::size_t i = 0; i < table.x.size(); ++i) {
            const auto& cell = table.rows[i][j];
            if (!cell) {
                flush();
                continue;
            }
            points += fixed(sx(table.x[i]), 2) + "," + fixed(sy(*cell), 2) + " ";
        }
        flush();
        const double ly = kTop + 12 + 18.0 * j;
        s << "<line x1=\"" << kW - kRight + 12 << "\" y1=\"" << ly << "\" x2=\"" << kW - kRight + 32 << "\" y2=\"" << ly
          << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        s << "<text x=\"" << kW - kRight + 38 << "\" y=\"" << ly + 4 << "\">" << xml_escape(table.series[j])
          << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace infowidth
