#include "sumkit/cli.hpp"

#include <cstdlib>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sumkit/accel.hpp"
#include "sumkit/errors.hpp"
#include "sumkit/fourier.hpp"
#include "sumkit/pade.hpp"
#include "sumkit/physics.hpp"
#include "sumkit/resum.hpp"
#include "sumkit/series_io.hpp"

namespace sumkit {
namespace cli {

namespace {

// Rows of labelled cells rendered as table/csv/json.
struct Report {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string render(Format f) const {
        std::ostringstream os;
        if (f == Format::Csv) {
            auto emit = [&](const std::vector<std::string>& cells) {
                for (std::size_t i = 0; i < cells.size(); ++i)
                    os << (i ? "," : "") << cells[i];
                os << "\n";
            };
            emit(header);
            for (const auto& r : rows) emit(r);
        } else if (f == Format::Json) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : rows) {
                nlohmann::ordered_json obj;
                for (std::size_t i = 0; i < header.size() && i < r.size(); ++i)
                    obj[header[i]] = r[i];
                arr.push_back(obj);
            }
            os << arr.dump(2) << "\n";
        } else {
            std::vector<std::size_t> width(header.size(), 0);
            auto measure = [&](const std::vector<std::string>& cells) {
                for (std::size_t i = 0; i < cells.size(); ++i)
                    if (i < width.size()) width[i] = std::max(width[i], cells[i].size());
            };
            measure(header);
            for (const auto& r : rows) measure(r);
            auto emit = [&](const std::vector<std::string>& cells) {
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    if (i) os << "  ";
                    os << cells[i];
                    if (i + 1 < cells.size())
                        os << std::string(width[i] - cells[i].size(), ' ');
                }
                os << "\n";
            };
            emit(header);
            for (const auto& r : rows) emit(r);
        }
        return os.str();
    }
};

std::string fmt_scalar(const Scalar& v, int digits) {
    return v.is_exact() ? v.rational().str() : v.real().str(digits);
}

class Params {
public:
    Params(const std::map<std::string, std::string>& p, std::set<std::string> allowed)
        : p_(p) {
        for (const auto& [key, value] : p_) {
            (void)value;
            if (!allowed.count(key)) throw ParseError("unknown parameter: " + key);
        }
    }
    bool has(const std::string& k) const { return p_.count(k) > 0; }
    std::string get(const std::string& k, const std::string& fallback = "") const {
        auto it = p_.find(k);
        return it == p_.end() ? fallback : it->second;
    }
    std::string require(const std::string& k) const {
        auto it = p_.find(k);
        if (it == p_.end()) throw ParseError("missing required parameter: " + k);
        return it->second;
    }
    long get_long(const std::string& k, long fallback) const {
        auto it = p_.find(k);
        if (it == p_.end()) return fallback;
        try {
            return std::stol(it->second);
        } catch (...) {
            throw ParseError("parameter " + k + " must be an integer");
        }
    }
    Scalar get_rational(const std::string& k, const Scalar& fallback) const {
        auto it = p_.find(k);
        if (it == p_.end()) return fallback;
        return Scalar(Rational::from_string(it->second));
    }

private:
    const std::map<std::string, std::string>& p_;
};

CoefficientSequence input_series(const Params& p) {
    if (p.has("catalog")) return full_catalog(p.get("catalog"));
    if (p.has("input")) return load_series_file(p.get("input"));
    if (p.has("coefficients")) {
        std::vector<Scalar> terms = parse_rational_list(p.get("coefficients"));
        SignConvention sc = p.get("sign", "as-is") == "alternating-implied"
                                ? SignConvention::AlternatingImplied
                                : SignConvention::AsIs;
        return CoefficientSequence(std::move(terms), sc, "cli");
    }
    throw ParseError("need --catalog, --input or --coefficients");
}

Report run_catalog(const Params&) {
    Report rep;
    rep.header = {"name", "description"};
    for (const auto& [name, desc] : full_catalog_listing()) rep.rows.push_back({name, desc});
    return rep;
}

Report run_accel(const Params& p, int digits) {
    CoefficientSequence seq = input_series(p);
    Scalar point = p.get_rational("point", Scalar(1));
    long terms = p.get_long("terms", 10);
    PartialSums sums = partial_sums(seq, point, terms - 1);
    std::string method = p.get("method", "shanks");
    Report rep;
    if (method == "shanks") {
        auto table = accel::shanks(sums, static_cast<int>(p.get_long("iterations", 1)));
        rep.header = {"row", "values"};
        for (const auto& row : table.rows) {
            std::ostringstream os;
            for (std::size_t i = 0; i < row.values.size(); ++i) {
                if (i) os << " ";
                os << (row.values[i] ? fmt_scalar(*row.values[i], digits) : "absent");
            }
            rep.rows.push_back({row.label, os.str()});
        }
    } else if (method == "richardson") {
        long order = p.get_long("order", 1);
        if (p.has("n-start")) {
            Scalar v = accel::richardson(sums, static_cast<int>(order),
                                         p.get_long("n-start", 1));
            rep.header = {"value"};
            rep.rows.push_back({fmt_scalar(v, digits)});
        } else {
            auto table = accel::richardson_table(sums, static_cast<int>(order));
            rep.header = {"row", "values"};
            for (const auto& row : table.rows) {
                std::ostringstream os;
                for (std::size_t i = 0; i < row.values.size(); ++i) {
                    if (i) os << " ";
                    os << (row.values[i] ? fmt_scalar(*row.values[i], digits) : "absent");
                }
                rep.rows.push_back({row.label, os.str()});
            }
        }
    } else {
        throw ParseError("unknown accel method: " + method);
    }
    return rep;
}

Report run_resum(const Params& p, int digits) {
    Report rep;
    rep.header = {"value"};
    std::string method = p.get("method", p.has("pattern") ? "generic" : "euler");
    if (method == "generic") {
        std::vector<Scalar> pattern = parse_rational_list(p.require("pattern"));
        Scalar v = p.has("prefix")
                       ? resum::generic_sum_periodic(parse_rational_list(p.get("prefix")),
                                                     pattern)
                       : resum::generic_sum_periodic(pattern);
        rep.rows.push_back({fmt_scalar(v, digits)});
    } else if (method == "euler") {
        CoefficientSequence seq = p.has("pattern")
                                      ? periodic_series(parse_rational_list(p.get("pattern")))
                                      : input_series(p);
        auto r = resum::euler_sum(seq, digits);
        rep.rows.push_back({fmt_scalar(r.value, digits)});
        for (const auto& d : r.diagnostics) rep.rows.push_back({"# " + d});
    } else if (method == "borel") {
        CoefficientSequence seq = p.has("pattern")
                                      ? periodic_series(parse_rational_list(p.get("pattern")))
                                      : input_series(p);
        auto r = resum::borel_sum_numeric(seq, p.get_rational("point", Scalar(1)), digits);
        rep.rows.push_back({fmt_scalar(r.value, digits)});
        for (const auto& d : r.diagnostics) rep.rows.push_back({"# " + d});
    } else if (method == "borel-closed") {
        rep.rows.push_back({fmt_scalar(resum::borel_sum_closed(p.get_long("power", 1)), digits)});
    } else if (method == "euler-power") {
        rep.rows.push_back(
            {fmt_scalar(resum::euler_alternating_power(p.get_long("power", 1)), digits)});
    } else if (method == "zeta") {
        rep.rows.push_back({fmt_scalar(resum::zeta_negative(p.get_long("power", 1)), digits)});
    } else if (method == "geometric") {
        Scalar v = resum::geometric_sum(p.get_rational("first", Scalar(1)),
                                        p.get_rational("ratio", Scalar(2)));
        rep.rows.push_back({fmt_scalar(v, digits)});
    } else if (method == "rearrange") {
        Scalar target = p.get_rational("target", Scalar(12));
        long terms = p.get_long("terms", 100);
        auto idx = resum::riemann_rearrange(target, terms);
        rep.header = {"indices", "partial_sum"};
        std::ostringstream os;
        for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? " " : "") << idx[i];
        std::ostringstream ps;
        ps.precision(12);
        ps << resum::rearrangement_partial_sum(idx);
        rep.rows.push_back({os.str(), ps.str()});
    } else {
        throw ParseError("unknown resum method: " + method);
    }
    return rep;
}

Report run_pade(const Params& p, int digits) {
    Report rep;
    if (p.has("moments-to-b")) {
        pade::MomentSequence m(parse_rational_list(p.get("moments-to-b")));
        auto cf = pade::moments_to_contfrac(m);
        rep.header = {"n", "b_n"};
        for (std::size_t i = 0; i < cf.b.size(); ++i)
            rep.rows.push_back({std::to_string(i + 1), fmt_scalar(cf.b[i], digits)});
        if (cf.terminated) rep.rows.push_back({"#", "terminated"});
        return rep;
    }
    if (p.has("b-to-moments")) {
        pade::ContFracCoeffs cf{parse_rational_list(p.get("b-to-moments")), false};
        long K = p.get_long("count", static_cast<long>(cf.b.size()));
        auto m = pade::contfrac_to_moments(cf, K);
        rep.header = {"n", "a_n"};
        for (long n = 0; n <= K; ++n)
            rep.rows.push_back({std::to_string(n),
                                fmt_scalar(m.a()[static_cast<std::size_t>(n)] * m.scale(),
                                           digits)});
        return rep;
    }
    CoefficientSequence seq = input_series(p);
    if (p.has("staircase")) {
        long depth = p.get_long("staircase", 4);
        Scalar z = p.get_rational("at", Scalar(1));
        auto stairs = pade::staircase_evaluate(seq, z, depth);
        rep.header = {"label", "value", "decimal"};
        for (const auto& [label, v] : stairs)
            rep.rows.push_back({label, fmt_scalar(v, digits), v.real(digits).str(digits)});
        return rep;
    }
    if (p.has("orders")) {
        std::string orders = p.get("orders");
        auto comma = orders.find(',');
        if (comma == std::string::npos) throw ParseError("--orders needs n,m");
        long n = std::stol(orders.substr(0, comma));
        long m = std::stol(orders.substr(comma + 1));
        auto pr = pade::pade_approximant(seq, n, m);
        rep.header = {"part", "coefficients"};
        auto join = [&](const std::vector<Scalar>& v) {
            std::ostringstream os;
            for (std::size_t i = 0; i < v.size(); ++i)
                os << (i ? " " : "") << fmt_scalar(v[i], digits);
            return os.str();
        };
        rep.rows.push_back({"numerator", join(pr.num)});
        rep.rows.push_back({"denominator", join(pr.den)});
        if (p.has("at")) {
            Scalar z = p.get_rational("at", Scalar(1));
            rep.rows.push_back({"value", fmt_scalar(pr.eval(z), digits)});
        }
        return rep;
    }
    if (p.has("hankel")) {
        long count = p.get_long("hankel", 8);
        auto m = pade::MomentSequence::from_series(seq, count);
        auto h = pade::stieltjes_hankel_check(m);
        rep.header = {"order", "det", "shifted_det"};
        for (std::size_t i = 0; i < h.dets_plain.size(); ++i)
            rep.rows.push_back({std::to_string(i + 1), fmt_scalar(h.dets_plain[i], digits),
                                i < h.dets_shifted.size()
                                    ? fmt_scalar(h.dets_shifted[i], digits)
                                    : ""});
        rep.rows.push_back({"verdict", h.all_positive ? "positive" : "not positive",
                            h.boundary_degenerate ? "degenerate" : ""});
        return rep;
    }
    if (p.has("carleman")) {
        long count = p.get_long("carleman", 12);
        auto m = pade::MomentSequence::from_series(seq, count);
        auto c = pade::carleman_check(m);
        rep.header = {"verdict"};
        rep.rows.push_back({c.summary});
        return rep;
    }
    throw ParseError("pade needs --orders, --staircase, --hankel, --carleman, "
                     "--moments-to-b or --b-to-moments");
}

Report run_heat(const Params& p, int digits) {
    fourier::HeatProblem problem;
    problem.f = fourier::FuncSpec::parse(p.get("initial", "zero"));
    problem.g = fourier::FuncSpec::parse(p.get("left", "zero"));
    problem.h = fourier::FuncSpec::parse(p.get("right", "zero"));
    problem.modes = p.get_long("modes", 32);
    for (const Scalar& t : parse_rational_list(p.get("times", "1/2,1")))
        problem.time_grid.push_back(t);
    bool accelerate = p.get("accelerate", "") == "true" || p.has("accelerate");
    int work = std::min(digits, 24); // heat columns are double-scale output
    fourier::HeatSolution sol = fourier::heat_solve(problem, accelerate, work);

    long grid = p.get_long("eval-grid", 9);
    Report rep;
    rep.header = {"x"};
    for (const Scalar& t : sol.times) rep.header.push_back("u(t=" + t.str() + ")");
    Real pi = Real::pi(work);
    for (long i = 1; i <= grid; ++i) {
        Real x = pi * Real(i, work) / Real(grid + 1, work);
        std::vector<std::string> row{x.str(10)};
        for (std::size_t k = 0; k < sol.times.size(); ++k)
            row.push_back(sol.evaluate(x, k).str(10));
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

Report run_anharmonic(const Params& p, int digits) {
    Report rep;
    if (p.has("table")) {
        long depth = p.get_long("depth", 4);
        auto table = physics::anharmonic_pade_table(depth);
        // Two-column layout: subdiagonal and diagonal entries side by side.
        rep.header = {"label_sub", "value_sub", "label_diag", "value_diag"};
        for (std::size_t i = 0; i + 1 < table.size(); i += 2)
            rep.rows.push_back({table[i].first, table[i].second.real().str_fixed(5),
                                table[i + 1].first, table[i + 1].second.real().str_fixed(5)});
        return rep;
    }
    if (p.has("asymptotic")) {
        long n = p.get_long("asymptotic", 5);
        auto e = physics::anharmonic_coefficients(n);
        Scalar formula = physics::anharmonic_asymptotic(n, digits);
        Scalar ratio = e.coeffs[static_cast<std::size_t>(n)].abs() / formula.abs();
        rep.header = {"n", "coefficient", "formula", "ratio"};
        rep.rows.push_back({std::to_string(n),
                            fmt_scalar(e.coeffs[static_cast<std::size_t>(n)], digits),
                            fmt_scalar(formula, 10), fmt_scalar(ratio, 6)});
        return rep;
    }
    long K = p.get_long("coeffs", 6);
    auto e = physics::anharmonic_coefficients(K);
    rep.header = {"order", "coefficient"};
    for (std::size_t k = 0; k < e.coeffs.size(); ++k)
        rep.rows.push_back({std::to_string(k), fmt_scalar(e.coeffs[k], digits)});
    return rep;
}

Report run_casimir(const Params& p, int digits) {
    Scalar L = p.get_rational("length", Scalar(1));
    auto [energy, force] = physics::casimir_force(L, digits);
    Report rep;
    rep.header = {"quantity", "value"};
    rep.rows.push_back({"energy_per_area", fmt_scalar(energy, digits)});
    rep.rows.push_back({"force_per_area", fmt_scalar(force, digits)});
    return rep;
}

Report run_quintic(const Params& p, int digits) {
    std::string variant = p.get("variant", "regular");
    long K = p.get_long("order", 20);
    Scalar eps = p.get_rational("eps", Scalar(1));
    auto v = variant == "singular" ? physics::QuinticVariant::Singular
                                   : physics::QuinticVariant::Regular;
    if (variant != "regular" && variant != "singular")
        throw ParseError("quintic variant must be regular or singular");
    auto rep_data = physics::quintic_root_study(v, K, eps, digits);
    Report rep;
    rep.header = {"quantity", "value"};
    rep.rows.push_back({"radius", fmt_scalar(rep_data.radius, digits)});
    rep.rows.push_back({"partial_sum", fmt_scalar(rep_data.partial_sum, digits)});
    rep.rows.push_back({"reference_root", fmt_scalar(rep_data.reference_root, digits)});
    std::ostringstream cs;
    for (std::size_t i = 0; i < std::min<std::size_t>(rep_data.coeffs.size(), 8); ++i)
        cs << (i ? " " : "") << fmt_scalar(rep_data.coeffs[i], digits);
    rep.rows.push_back({"coefficients", cs.str()});
    if (v == physics::QuinticVariant::Singular) {
        if (!rep_data.staircase.empty())
            rep.rows.push_back({"staircase_last",
                                fmt_scalar(rep_data.staircase.back().second, digits)});
        std::ostringstream ds;
        for (std::size_t i = 0; i < std::min<std::size_t>(rep_data.delta_series.size(), 10); ++i)
            ds << (i ? " " : "") << fmt_scalar(rep_data.delta_series[i], digits);
        rep.rows.push_back({"delta_series", ds.str()});
        std::ostringstream sc;
        sc.precision(6);
        sc << rep_data.runaway_scaling;
        rep.rows.push_back({"runaway_scaling", sc.str()});
    }
    return rep;
}

Report run_two_level(const Params& p, int digits) {
    physics::TwoLevelSystem sys{p.get_rational("a", Scalar(1)), p.get_rational("b", Scalar(0)),
                                p.get_rational("c", Scalar(1))};
    Real re = p.get_rational("eps-re", Scalar(0)).real(digits);
    Real im = p.get_rational("eps-im", Scalar(0)).real(digits);
    auto spec = physics::two_level_spectrum(sys, ComplexReal{re, im});
    auto fmt_c = [&](const ComplexReal& z) {
        return z.re.str(digits) + (z.im.sign() < 0 ? " - " : " + ") + z.im.abs().str(digits) +
               "i";
    };
    Report rep;
    rep.header = {"quantity", "value"};
    rep.rows.push_back({"E_plus", fmt_c(spec.e_plus)});
    rep.rows.push_back({"E_minus", fmt_c(spec.e_minus)});
    rep.rows.push_back({"branch_point_plus", fmt_c(spec.branch_point_plus)});
    rep.rows.push_back({"branch_point_minus", fmt_c(spec.branch_point_minus)});
    return rep;
}

const std::set<std::string> kAccelKeys = {"catalog", "input", "coefficients", "sign",
                                          "point",   "terms", "method",       "iterations",
                                          "order",   "n-start"};
const std::set<std::string> kResumKeys = {"method", "pattern", "prefix", "catalog",
                                          "input",  "coefficients", "sign", "point",
                                          "power",  "first",   "ratio",  "target", "terms"};
const std::set<std::string> kPadeKeys = {"catalog",      "input",    "coefficients", "sign",
                                         "orders",       "at",       "staircase",
                                         "moments-to-b", "b-to-moments", "count",
                                         "hankel",       "carleman"};
const std::set<std::string> kHeatKeys = {"initial", "left",      "right", "modes",
                                         "times",   "accelerate", "eval-grid"};
const std::set<std::string> kAnharmonicKeys = {"table", "depth", "coeffs", "asymptotic"};
const std::set<std::string> kCasimirKeys = {"length"};
const std::set<std::string> kQuinticKeys = {"variant", "order", "eps"};
const std::set<std::string> kTwoLevelKeys = {"a", "b", "c", "eps-re", "eps-im"};

} // namespace

Command parse_command(const std::string& name) {
    if (name == "accel") return Command::Accel;
    if (name == "resum") return Command::Resum;
    if (name == "pade") return Command::Pade;
    if (name == "heat") return Command::Heat;
    if (name == "anharmonic") return Command::Anharmonic;
    if (name == "casimir") return Command::Casimir;
    if (name == "quintic") return Command::Quintic;
    if (name == "two-level") return Command::TwoLevel;
    if (name == "catalog") return Command::Catalog;
    throw ParseError("unknown command: " + name);
}

Format parse_format(const std::string& name) {
    if (name == "table") return Format::Table;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw ParseError("unknown format: " + name);
}

CoefficientSequence full_catalog(const std::string& name) {
    if (name == "anharmonic-F") {
        auto f = physics::anharmonic_f_series(24);
        return CoefficientSequence(f.coeffs, SignConvention::AsIs, "anharmonic-F");
    }
    if (name == "euler-numbers") {
        pade::ContFracCoeffs cf;
        for (long n = 1; n <= 24; ++n) cf.b.emplace_back(n * n);
        auto m = pade::contfrac_to_moments(cf, 24);
        return CoefficientSequence(m.a(), SignConvention::AlternatingImplied, "euler-numbers");
    }
    if (name == "quintic-singular") {
        auto q = physics::quintic_root_study(physics::QuinticVariant::Singular, 40, Scalar(1),
                                             20);
        return CoefficientSequence(q.coeffs, SignConvention::AsIs, "quintic-singular");
    }
    return catalog_series(name);
}

std::vector<std::pair<std::string, std::string>> full_catalog_listing() {
    auto listing = catalog_listing();
    listing.emplace_back("anharmonic-F", "subtracted anharmonic ground-state series F(eps)");
    listing.emplace_back("euler-numbers", "1, 1, 5, 61, 1385, ... as alternating moments");
    listing.emplace_back("quintic-singular", "series for the root of eps x^5 + x - 1 = 0");
    return listing;
}

int default_digits() {
    if (const char* env = std::getenv("RESUM_DIGITS")) {
        try {
            int d = std::stoi(env);
            if (d >= 10) return d;
        } catch (...) {
        }
    }
    return kDefaultDigits;
}

RunResult run(const RunConfig& config) {
    RunResult result;
    try {
        int digits = config.digits > 0 ? config.digits : default_digits();
        if (digits < 10) throw ParseError("digits must be >= 10");
        Report rep;
        switch (config.command) {
            case Command::Catalog:
                rep = run_catalog(Params(config.params, {}));
                break;
            case Command::Accel:
                rep = run_accel(Params(config.params, kAccelKeys), digits);
                break;
            case Command::Resum:
                rep = run_resum(Params(config.params, kResumKeys), digits);
                break;
            case Command::Pade:
                rep = run_pade(Params(config.params, kPadeKeys), digits);
                break;
            case Command::Heat:
                rep = run_heat(Params(config.params, kHeatKeys), digits);
                break;
            case Command::Anharmonic:
                rep = run_anharmonic(Params(config.params, kAnharmonicKeys), digits);
                break;
            case Command::Casimir:
                rep = run_casimir(Params(config.params, kCasimirKeys), digits);
                break;
            case Command::Quintic:
                rep = run_quintic(Params(config.params, kQuinticKeys), digits);
                break;
            case Command::TwoLevel:
                rep = run_two_level(Params(config.params, kTwoLevelKeys), digits);
                break;
        }
        // Single-value reports print bare values, larger ones full tables.
        if (rep.header == std::vector<std::string>{"value"}) {
            std::ostringstream os;
            for (const auto& row : rep.rows)
                if (!row.empty() && row[0].rfind("# ", 0) != 0) os << row[0] << "\n";
            result.output = os.str();
        } else {
            result.output = rep.render(config.format);
        }
        result.exit_code = 0;
    } catch (const ParseError& e) {
        result.exit_code = 2;
        result.error = e.what();
    } catch (const GeneratorExhausted& e) {
        result.exit_code = 2;
        result.error = e.what();
    } catch (const DomainError& e) {
        result.exit_code = 2;
        result.error = e.what();
    } catch (const InsufficientTerms& e) {
        result.exit_code = 2;
        result.error = e.what();
    } catch (const Error& e) {
        // ConvergenceFailure, InconsistentSummation and friends.
        result.exit_code = 3;
        result.error = e.what();
    }
    return result;
}

} // namespace cli
} // namespace sumkit
