#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sumkit/cli.hpp"
#include "sumkit/errors.hpp"

namespace {

// Flags whose values land in the RunConfig params map, per subcommand.
struct SubSpec {
    const char* name;
    const char* description;
    std::vector<std::pair<const char*, const char*>> options;
    std::vector<std::pair<const char*, const char*>> flags;
};

const std::vector<SubSpec> kSubs = {
    {"accel",
     "Shanks / Richardson acceleration of partial sums",
     {{"catalog", "built-in series name"},
      {"input", "series definition JSON file"},
      {"coefficients", "comma list of p/q coefficients"},
      {"sign", "as-is | alternating-implied"},
      {"point", "evaluation point (rational)"},
      {"terms", "number of partial sums"},
      {"method", "shanks | richardson"},
      {"iterations", "Shanks iterations"},
      {"order", "Richardson order"},
      {"n-start", "first partial-sum index N"}},
     {}},
    {"resum",
     "Euler / Borel / generic / zeta summation of divergent series",
     {{"method", "euler | borel | borel-closed | euler-power | generic | zeta | geometric | "
                 "rearrange"},
      {"pattern", "periodic pattern, comma list of p/q"},
      {"prefix", "explicit prefix before the pattern"},
      {"catalog", "built-in series name"},
      {"input", "series definition JSON file"},
      {"coefficients", "comma list of p/q coefficients"},
      {"sign", "as-is | alternating-implied"},
      {"point", "evaluation point"},
      {"power", "p for alternating powers / zeta"},
      {"first", "geometric first term"},
      {"ratio", "geometric ratio"},
      {"target", "rearrangement target"},
      {"terms", "rearrangement prefix length"}},
     {}},
    {"pade",
     "Pade approximants, staircase, moment/fraction conversion, diagnostics",
     {{"catalog", "built-in series name"},
      {"input", "series definition JSON file"},
      {"coefficients", "comma list of p/q coefficients"},
      {"sign", "as-is | alternating-implied"},
      {"orders", "n,m approximant orders"},
      {"at", "evaluation point"},
      {"staircase", "staircase depth"},
      {"moments-to-b", "moment list to convert"},
      {"b-to-moments", "b list to convert"},
      {"count", "number of moments to rebuild"},
      {"hankel", "moment count for the Hankel check"},
      {"carleman", "moment count for the Carleman check"}},
     {}},
    {"heat",
     "heat equation on [0, pi] with time-dependent boundaries",
     {{"initial", "f: zero|one|sin|parabola|const:p/q|file:csv"},
      {"left", "g(t) spec"},
      {"right", "h(t) spec"},
      {"modes", "mode budget"},
      {"times", "comma list of rational times"},
      {"eval-grid", "number of interior evaluation points"}},
     {{"accelerate", "subtract the 1/n boundary tail mode-wise"}}},
    {"anharmonic",
     "anharmonic-oscillator series, asymptotics and Pade table",
     {{"depth", "table depth"},
      {"coeffs", "print E0 coefficients through this order"},
      {"asymptotic", "compare coefficient n against the growth formula"}},
     {{"table", "emit the ground-state Pade table"}}},
    {"casimir", "Casimir energy and force per unit area", {{"length", "plate separation L"}}, {}},
    {"quintic",
     "perturbative quintic-root study",
     {{"variant", "regular | singular"}, {"order", "series order"}, {"eps", "epsilon"}},
     {}},
    {"two-level",
     "two-level Hamiltonian spectrum and branch points",
     {{"a", "H_11"},
      {"b", "H_22"},
      {"c", "coupling"},
      {"eps-re", "Re eps"},
      {"eps-im", "Im eps"}},
     {}},
    {"catalog", "list built-in series", {}, {}},
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sumkit: series acceleration and divergent-series summation toolbox"};
    app.require_subcommand(1);

    std::string format = "table";
    int digits = 0;
    app.add_option("--format", format, "table | csv | json")->capture_default_str();
    app.add_option("--digits", digits, "working precision in decimal digits (>= 10)");

    struct SubState {
        CLI::App* sub = nullptr;
        std::map<std::string, std::string> values;
        std::map<std::string, bool> flags;
    };
    std::vector<SubState> states(kSubs.size());
    for (std::size_t i = 0; i < kSubs.size(); ++i) {
        const auto& spec = kSubs[i];
        SubState& st = states[i];
        st.sub = app.add_subcommand(spec.name, spec.description);
        st.sub->fallthrough();
        for (const auto& [opt, help] : spec.options) st.values[opt] = "";
        for (const auto& [flag, help] : spec.flags) st.flags[flag] = false;
        for (const auto& [opt, help] : spec.options)
            st.sub->add_option("--" + std::string(opt), st.values[opt], help);
        for (const auto& [flag, help] : spec.flags)
            st.sub->add_flag("--" + std::string(flag), st.flags[flag], help);
    }

    CLI11_PARSE(app, argc, argv);

    sumkit::cli::RunConfig config;
    try {
        config.format = sumkit::cli::parse_format(format);
        config.digits = digits;
        for (std::size_t i = 0; i < states.size(); ++i) {
            if (!states[i].sub->parsed()) continue;
            config.command = sumkit::cli::parse_command(kSubs[i].name);
            for (const auto& [key, value] : states[i].values)
                if (states[i].sub->count("--" + key) > 0) config.params[key] = value;
            for (const auto& [key, on] : states[i].flags)
                if (on) config.params[key] = "true";
        }
    } catch (const sumkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    sumkit::cli::RunResult result = sumkit::cli::run(config);
    if (!result.output.empty()) std::cout << result.output;
    if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
    return result.exit_code;
}
