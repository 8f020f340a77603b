#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "infowidth/asymptotics.hpp"
#include "infowidth/errors.hpp"
#include "infowidth/figures.hpp"
#include "infowidth/function_classes.hpp"
#include "infowidth/json_io.hpp"
#include "infowidth/random_classes.hpp"
#include "infowidth/report.hpp"
#include "infowidth/width.hpp"

namespace py = pybind11;
using namespace infowidth;

namespace {

py::object optional_float(const std::optional<double>& v) {
    return v ? py::object(py::float_(*v)) : py::object(py::none());
}

py::dict report_dict(const InfoReport& r) {
    py::dict d;
    d["I"] = r.information_bits;
    d["H"] = r.conditional_entropy_bits;
    d["l"] = r.description_bits;
    d["kappa"] = optional_float(r.cost);
    d["eta"] = optional_float(r.efficiency);
    d["method"] = r.method;
    d["notes"] = r.notes;
    return d;
}

PropertySpec make_spec(unsigned n, const std::string& prop, double d,
                       const std::optional<std::vector<BinaryFunc>>& cls,
                       const std::optional<std::vector<std::pair<unsigned, bool>>>& sample, double alpha) {
    if (prop == "ld") return Ld{d};
    if (prop == "vd") return Vd{d};
    if (prop == "vdc") return VdC{d};
    if (prop == "vdsm") return VdSample{d, LabeledSample(sample.value_or(std::vector<std::pair<unsigned, bool>>{}))};
    if (prop == "identity") {
        if (!cls) throw DomainError("identity needs the class members");
        return Identity{FunctionClass(n, *cls)};
    }
    if (prop == "expdecay") return ExpDecay{alpha, 1.0};
    throw UnsupportedError("unknown property '" + prop + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Combinatorial information, description complexity and information width";

    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
    py::register_exception<UndefinedValueError>(m, "UndefinedValueError", PyExc_ArithmeticError);
    py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def(
        "info_width",
        [](std::uint64_t ny, std::optional<double> l, std::optional<std::string> members, const std::string& backend) {
            if (l.has_value() == members.has_value()) throw UnsupportedError("give exactly one of l or members");
            const Backend b = parse_backend(backend);
            const WidthQuery q =
                l ? WidthQuery::from_bits(ny, *l, b) : WidthQuery::from_members(ny, parse_count(*members), b);
            const WidthResult r = info_width(q);
            py::dict d;
            d["l"] = q.l;
            d["r"] = r.threshold;
            d["Istar"] = r.width_bits;
            d["kappastar"] = r.width_bits > 0 ? py::object(py::float_(q.l / r.width_bits)) : py::object(py::none());
            d["backend"] = std::string(to_string(r.backend));
            d["accuracy_bound"] = r.accuracy_bound;
            return d;
        },
        py::arg("ny"), py::kw_only(), py::arg("l") = py::none(), py::arg("members") = py::none(),
        py::arg("backend") = "auto",
        "I*(l), r(l) and kappa*(l). members is a decimal string so that counts beyond 2^64 work.");
    m.def("brute_force_width", &brute_force_width, py::arg("ny"), py::arg("members"), py::arg("threads") = 1);

    m.def("vc_dimension", [](unsigned n, std::vector<BinaryFunc> g) { return vc_dimension(FunctionClass(n, std::move(g))); });
    m.def("l_dimension", [](unsigned n, std::vector<BinaryFunc> g) { return l_dimension(FunctionClass(n, std::move(g))); });

    m.def(
        "property_report",
        [](unsigned n, const std::string& prop, double d, std::optional<std::vector<BinaryFunc>> cls,
           std::optional<std::vector<std::pair<unsigned, bool>>> sample, double alpha, const std::string& method,
           std::uint64_t trials, std::uint64_t seed, unsigned threads, bool extrapolate) {
            const PropertySpec spec = make_spec(n, prop, d, cls, sample, alpha);
            ReportOptions opt;
            opt.trials = trials;
            opt.seed = seed;
            opt.threads = threads;
            opt.precondition = extrapolate ? Precondition::Extrapolate : Precondition::Strict;
            InfoReport r;
            {
                py::gil_scoped_release release;
                r = property_report(n, spec, parse_method(method), opt);
            }
            return report_dict(r);
        },
        py::arg("n"), py::arg("prop"), py::kw_only(), py::arg("d") = 1.0, py::arg("cls") = py::none(),
        py::arg("sample") = py::none(), py::arg("alpha") = 0.5, py::arg("method") = "exact",
        py::arg("trials") = 100000, py::arg("seed") = 1, py::arg("threads") = 0, py::arg("extrapolate") = false);

    m.def(
        "measure",
        [](const std::string& property_json, std::optional<std::vector<std::uint64_t>> target) {
            const PropertyCollection x = parse_property_json(property_json);
            if (!target) return report_dict(exact_report(x));
            py::dict d;
            const TargetSubset y(*target, x.space());
            d["I"] = information(x, y);
            d["l"] = description_complexity(x);
            d["informative"] = is_informative(x, y);
            return d;
        },
        py::arg("property_json"), py::arg("target") = py::none());

    m.def(
        "mc_property_prob",
        [](unsigned n, std::uint64_t k, const std::string& prop, double d, std::uint64_t trials, std::uint64_t seed,
           unsigned threads) {
            const PropertySpec spec = make_spec(n, prop, d, std::nullopt, std::nullopt, 0.5);
            McEstimate e;
            {
                py::gil_scoped_release release;
                e = mc_property_prob(n, k, spec, trials, seed, threads);
            }
            py::dict out;
            out["estimate"] = e.estimate;
            out["stderr"] = e.std_error;
            out["trials"] = e.trials;
            out["seed"] = e.seed;
            return out;
        },
        py::arg("n"), py::arg("k"), py::arg("prop"), py::kw_only(), py::arg("d") = 1.0, py::arg("trials") = 100000,
        py::arg("seed") = 1, py::arg("threads") = 0);

    auto mode = [](bool extrapolate) { return extrapolate ? Precondition::Extrapolate : Precondition::Strict; };
    m.def("ld_info", [mode](double n, double d, bool e) { return ld_info(n, d, mode(e)); }, py::arg("n"), py::arg("d"),
          py::arg("extrapolate") = false);
    m.def("vdc_info", [mode](double n, double d, bool e) { return vdc_info(n, d, mode(e)); }, py::arg("n"), py::arg("d"),
          py::arg("extrapolate") = false);
    m.def("vd_info", [mode](double n, double d, bool e) { return vd_info(n, d, mode(e)); }, py::arg("n"), py::arg("d"),
          py::arg("extrapolate") = false);
    m.def("vdsm_info", [mode](double n, double d, double s, bool e) { return vdsm_info(n, d, s, mode(e)); },
          py::arg("n"), py::arg("d"), py::arg("m"), py::arg("extrapolate") = false);
    m.def("vdc_complexity", [](double n, double d) { return vdc_complexity(n, d).value; });
    m.def("vd_complexity", [](double n, double d) { return vd_complexity(n, d).value; });
    m.def("expdecay_info", [](double n, double alpha) {
        const ExpDecayInfo e = expdecay_info(n, alpha);
        py::dict d;
        d["I"] = e.information;
        d["I_limit"] = e.limit;
        d["I_complement"] = e.complement;
        return d;
    });
    m.def("identity_report", [](unsigned n, double g) { return report_dict(identity_report(n, g)); });
    m.def("complement_complexity", &complement_complexity);

    m.def("figure_ids", &figure_ids);
    m.def("figure", [](const std::string& id) {
        const FigureTable t = make_figure(id);
        py::dict d;
        d["id"] = t.id;
        d["x_label"] = t.x_label;
        d["series"] = t.series;
        d["x"] = t.x;
        py::list rows;
        for (const auto& row : t.rows) {
            py::list cells;
            for (const auto& c : row) cells.append(optional_float(c));
            rows.append(cells);
        }
        d["rows"] = rows;
        return d;
    });
    m.def("figure_csv", [](const std::string& id) { return to_csv(make_figure(id)); });
}
