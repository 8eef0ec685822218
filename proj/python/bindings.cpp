#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "sumkit/accel.hpp"
#include "sumkit/bernoulli.hpp"
#include "sumkit/cli.hpp"
#include "sumkit/errors.hpp"
#include "sumkit/fourier.hpp"
#include "sumkit/pade.hpp"
#include "sumkit/physics.hpp"
#include "sumkit/resum.hpp"
#include "sumkit/sequence.hpp"

namespace py = pybind11;
using namespace sumkit;

namespace {

// Exact values travel as "p/q" strings across the boundary; reals as
// decimal strings at the requested digit budget.
std::string out(const Scalar& v, int digits) { return v.str(digits); }

Scalar in(const std::string& s) { return Scalar(Rational::from_string(s)); }

std::vector<Scalar> in_list(const std::vector<std::string>& v) {
    std::vector<Scalar> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(in(s));
    return out;
}

std::vector<std::string> out_list(const std::vector<Scalar>& v, int digits) {
    std::vector<std::string> o;
    o.reserve(v.size());
    for (const auto& s : v) o.push_back(out(s, digits));
    return o;
}

CoefficientSequence seq_from(const std::vector<std::string>& coeffs, const std::string& sign,
                             const std::string& catalog) {
    if (!catalog.empty()) return cli::full_catalog(catalog);
    SignConvention sc = sign == "alternating-implied" ? SignConvention::AlternatingImplied
                                                      : SignConvention::AsIs;
    return CoefficientSequence(in_list(coeffs), sc, "python");
}

} // namespace

PYBIND11_MODULE(_sumkit, m) {
    m.doc() = "series acceleration and divergent-series summation toolbox";

    py::register_exception<ConvergenceFailure>(m, "ConvergenceFailure");
    py::register_exception<InconsistentSummation>(m, "InconsistentSummation");

    m.def(
        "partial_sums",
        [](const std::vector<std::string>& coeffs, const std::string& sign,
           const std::string& catalog, const std::string& point, long N, int digits) {
            auto sums = partial_sums(seq_from(coeffs, sign, catalog), in(point), N);
            return out_list(sums.values(), digits);
        },
        py::arg("coefficients") = std::vector<std::string>{}, py::arg("sign") = "as-is",
        py::arg("catalog") = "", py::arg("point") = "1", py::arg("N") = 10,
        py::arg("digits") = 30);

    m.def(
        "shanks",
        [](const std::vector<std::string>& sums, int iterations, int digits) {
            PartialSums ps{in_list(sums)};
            auto table = accel::shanks(ps, iterations);
            std::vector<std::vector<std::string>> rows;
            for (const auto& row : table.rows) {
                std::vector<std::string> cells;
                for (const auto& v : row.values) cells.push_back(v ? out(*v, digits) : "");
                rows.push_back(std::move(cells));
            }
            return rows;
        },
        py::arg("sums"), py::arg("iterations") = 1, py::arg("digits") = 30);

    m.def(
        "richardson",
        [](const std::vector<std::string>& sums, int order, long n_start, int digits) {
            PartialSums ps{in_list(sums)};
            return out(accel::richardson(ps, order, n_start), digits);
        },
        py::arg("sums"), py::arg("order") = 1, py::arg("n_start") = 1, py::arg("digits") = 30);

    m.def(
        "euler_sum",
        [](const std::vector<std::string>& pattern, const std::string& catalog, int digits) {
            CoefficientSequence seq =
                catalog.empty() ? periodic_series(in_list(pattern)) : cli::full_catalog(catalog);
            auto r = resum::euler_sum(seq, digits);
            return py::make_tuple(out(r.value, digits), r.diagnostics);
        },
        py::arg("pattern") = std::vector<std::string>{}, py::arg("catalog") = "",
        py::arg("digits") = 30);

    m.def("euler_alternating_power",
          [](long p) { return resum::euler_alternating_power(p).str(); });
    m.def("borel_sum_closed", [](long p) { return resum::borel_sum_closed(p).str(); });
    m.def(
        "generic_sum_periodic",
        [](const std::vector<std::string>& pattern) {
            return resum::generic_sum_periodic(in_list(pattern)).str();
        },
        py::arg("pattern"));
    m.def(
        "geometric_sum",
        [](const std::string& first, const std::string& ratio) {
            return resum::geometric_sum(in(first), in(ratio)).str();
        },
        py::arg("first"), py::arg("ratio"));
    m.def("zeta_negative", [](long k) { return resum::zeta_negative(k).str(); });
    m.def(
        "bernoulli_numbers",
        [](long K) { return out_list(bernoulli_numbers(K), 30); }, py::arg("K"));

    m.def(
        "moments_to_contfrac",
        [](const std::vector<std::string>& a) {
            pade::MomentSequence m(in_list(a));
            auto cf = pade::moments_to_contfrac(m);
            return py::make_tuple(out_list(cf.b, 30), cf.terminated);
        },
        py::arg("moments"));
    m.def(
        "contfrac_to_moments",
        [](const std::vector<std::string>& b, long K) {
            pade::ContFracCoeffs cf{in_list(b), false};
            auto m = pade::contfrac_to_moments(cf, K);
            std::vector<Scalar> scaled;
            for (const auto& v : m.a()) scaled.push_back(v * m.scale());
            return out_list(scaled, 30);
        },
        py::arg("b"), py::arg("K"));
    m.def(
        "pade_approximant",
        [](const std::vector<std::string>& coeffs, const std::string& sign, long n, long m,
           int digits) {
            auto p = pade::pade_approximant(seq_from(coeffs, sign, ""), n, m);
            return py::make_tuple(out_list(p.num, digits), out_list(p.den, digits));
        },
        py::arg("coefficients"), py::arg("sign") = "as-is", py::arg("n") = 1, py::arg("m") = 1,
        py::arg("digits") = 30);
    m.def(
        "staircase_evaluate",
        [](const std::vector<std::string>& coeffs, const std::string& sign,
           const std::string& catalog, const std::string& z, long depth, int digits) {
            auto stairs =
                pade::staircase_evaluate(seq_from(coeffs, sign, catalog), in(z), depth);
            std::vector<std::pair<std::string, std::string>> o;
            for (const auto& [label, v] : stairs) o.emplace_back(label, out(v, digits));
            return o;
        },
        py::arg("coefficients") = std::vector<std::string>{}, py::arg("sign") = "as-is",
        py::arg("catalog") = "", py::arg("z") = "1", py::arg("depth") = 4,
        py::arg("digits") = 30);
    m.def(
        "continued_exponential",
        [](const std::vector<std::string>& a, long K) {
            return out_list(pade::continued_exponential(in_list(a), K), 30);
        },
        py::arg("a"), py::arg("K"));

    m.def(
        "gibbs_overshoot",
        [](double alpha, int digits) {
            return fourier::gibbs_overshoot(Scalar(Real(alpha, digits)), digits).real().to_double();
        },
        py::arg("alpha"), py::arg("digits") = 16);

    m.def(
        "anharmonic_coefficients",
        [](long K) {
            auto e = physics::anharmonic_coefficients(K);
            return out_list(e.coeffs, 30);
        },
        py::arg("K"));
    m.def(
        "anharmonic_pade_table",
        [](long depth) {
            auto t = physics::anharmonic_pade_table(depth);
            std::vector<std::pair<std::string, double>> o;
            for (const auto& [label, v] : t) o.emplace_back(label, v.real().to_double());
            return o;
        },
        py::arg("depth") = 4);
    m.def("diagram_count", [](long n) { return physics::diagram_count(n).str(); });
    m.def(
        "casimir_force",
        [](double L, int digits) {
            auto [e, f] = physics::casimir_force(Scalar(Real(L, digits)), digits);
            return py::make_tuple(e.real().to_double(), f.real().to_double());
        },
        py::arg("L") = 1.0, py::arg("digits") = 20);
    m.def(
        "two_level_spectrum",
        [](double a, double b, double c, double eps_re, double eps_im, int digits) {
            physics::TwoLevelSystem sys{Scalar(Real(a, digits)), Scalar(Real(b, digits)),
                                        Scalar(Real(c, digits))};
            auto s = physics::two_level_spectrum(sys, {Real(eps_re, digits), Real(eps_im, digits)});
            auto c2p = [](const ComplexReal& z) {
                return std::make_pair(z.re.to_double(), z.im.to_double());
            };
            return py::make_tuple(c2p(s.e_plus), c2p(s.e_minus), c2p(s.branch_point_plus),
                                  c2p(s.branch_point_minus));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("eps_re") = 0.0,
        py::arg("eps_im") = 0.0, py::arg("digits") = 20);
    m.def(
        "quintic_partial_sum",
        [](const std::string& variant, long K, const std::string& eps, int digits) {
            auto v = variant == "singular" ? physics::QuinticVariant::Singular
                                           : physics::QuinticVariant::Regular;
            auto r = physics::quintic_root_study(v, K, in(eps), digits);
            return py::make_tuple(out(r.partial_sum, digits), out(r.reference_root, digits));
        },
        py::arg("variant") = "regular", py::arg("K") = 20, py::arg("eps") = "1",
        py::arg("digits") = 20);

    m.def(
        "run_cli",
        [](const std::string& command, const std::map<std::string, std::string>& params,
           const std::string& format, int digits) {
            cli::RunConfig config;
            config.command = cli::parse_command(command);
            config.params = params;
            config.format = cli::parse_format(format);
            config.digits = digits;
            auto r = cli::run(config);
            return py::make_tuple(r.exit_code, r.output, r.error);
        },
        py::arg("command"), py::arg("params") = std::map<std::string, std::string>{},
        py::arg("format") = "table", py::arg("digits") = 0);

    m.attr("__version__") = "0.1.0";
}
