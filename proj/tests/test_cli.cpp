#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "sumkit/cli.hpp"

using namespace sumkit;
using cli::Command;
using cli::Format;
using cli::RunConfig;

namespace {

RunConfig make(Command cmd, std::map<std::string, std::string> params,
               Format fmt = Format::Table, int digits = 20) {
    RunConfig c;
    c.command = cmd;
    c.params = std::move(params);
    c.format = fmt;
    c.digits = digits;
    return c;
}

} // namespace

TEST_CASE("resum pattern prints the exact rational") {
    auto r = cli::run(make(Command::Resum, {{"pattern", "1,-1,0"}}));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1/3\n");
}

TEST_CASE("catalog lists the built-in series") {
    auto r = cli::run(make(Command::Catalog, {}));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("log2") != std::string::npos);
    CHECK(r.output.find("basel") != std::string::npos);
    CHECK(r.output.find("euler-factorial") != std::string::npos);
    CHECK(r.output.find("anharmonic-F") != std::string::npos);
}

TEST_CASE("anharmonic table CSV mirrors the two-column layout") {
    auto r = cli::run(make(Command::Anharmonic, {{"table", "true"}, {"depth", "4"}},
                           Format::Csv));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("P^0_1,0.66667,P^1_1,0.95600") != std::string::npos);
    CHECK(r.output.find("P^3_4,0.78102,P^4_4,0.82529") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
    for (auto cmd : {make(Command::Anharmonic, {{"table", "true"}, {"depth", "3"}}, Format::Csv),
                     make(Command::Quintic, {{"variant", "singular"}, {"order", "21"}}),
                     make(Command::Resum, {{"method", "euler"}, {"catalog", "log2"}})}) {
        auto a = cli::run(cmd);
        auto b = cli::run(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("exactness propagation: exact paths print rationals") {
    auto r = cli::run(make(Command::Resum, {{"method", "borel-closed"}, {"power", "3"}}));
    CHECK(r.output == "-1/8\n");
    auto r2 = cli::run(make(Command::Resum, {{"method", "zeta"}, {"power", "3"}}));
    CHECK(r2.output == "1/120\n");
    auto r3 = cli::run(
        make(Command::Pade, {{"b-to-moments", "1,4,9,16"}, {"count", "4"}}, Format::Csv));
    CHECK(r3.output.find("4,1385") != std::string::npos);
}

TEST_CASE("invalid input exits 2") {
    CHECK(cli::run(make(Command::Resum, {{"pattern", "abc"}})).exit_code == 2);
    CHECK(cli::run(make(Command::Resum, {{"unknown-key", "1"}})).exit_code == 2);
    CHECK(cli::run(make(Command::Accel, {{"catalog", "no-such-series"}})).exit_code == 2);
    CHECK(cli::run(make(Command::Resum, {{"pattern", "1,-1"}}, Format::Table, 5)).exit_code ==
          2); // digits below 10
}

TEST_CASE("module failures exit 3") {
    // 1 + 1 + 1 + ... has no axiom-consistent value
    CHECK(cli::run(make(Command::Resum, {{"pattern", "1"}})).exit_code == 3);
    CHECK(cli::run(make(Command::Resum, {{"method", "euler"}, {"catalog", "ones"}})).exit_code ==
          3);
    CHECK(cli::run(make(Command::Resum, {{"method", "geometric"}, {"first", "1"},
                                         {"ratio", "1"}}))
              .exit_code == 3);
}

TEST_CASE("accel subcommand reproduces the shanks table") {
    auto r = cli::run(make(Command::Accel,
                           {{"catalog", "log2"}, {"terms", "3"}, {"method", "shanks"},
                            {"iterations", "1"}},
                           Format::Csv));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("7/10") != std::string::npos);
}

TEST_CASE("series JSON file input") {
    std::string path = "cli_test_series.json";
    {
        std::ofstream out(path);
        out << R"({"name":"F","kind":"explicit","sign_convention":"alternating-implied",
                   "coefficients":["3/4","21/8","333/16"]})";
    }
    auto r = cli::run(make(Command::Pade, {{"input", path}, {"orders", "1,1"}, {"at", "1"}},
                           Format::Csv));
    std::remove(path.c_str());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("57/125") != std::string::npos);

    auto missing = cli::run(make(Command::Pade, {{"input", "no-such.json"}, {"orders", "1,1"}}));
    CHECK(missing.exit_code == 2);
}

TEST_CASE("heat subcommand emits a CSV profile") {
    auto r = cli::run(make(Command::Heat,
                           {{"modes", "24"},
                            {"left", "one"},
                            {"accelerate", "true"},
                            {"times", "1/2,5"},
                            {"eval-grid", "4"}},
                           Format::Csv));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("x,u(t=1/2),u(t=5)") != std::string::npos);
    // four interior rows + header
    int lines = 0;
    for (char c : r.output)
        if (c == '\n') ++lines;
    CHECK(lines == 5);
}

TEST_CASE("RESUM_DIGITS environment override feeds the default") {
    setenv("RESUM_DIGITS", "22", 1);
    CHECK(cli::default_digits() == 22);
    setenv("RESUM_DIGITS", "3", 1); // below the floor: ignored
    CHECK(cli::default_digits() == kDefaultDigits);
    unsetenv("RESUM_DIGITS");
    CHECK(cli::default_digits() == kDefaultDigits);
}

TEST_CASE("heat accepts sampled boundary data from a two-column CSV") {
    std::string path = "cli_test_boundary.csv";
    {
        std::ofstream out(path);
        out << "# t, g(t)\n";
        for (int i = 0; i <= 100; ++i) out << i * 0.1 << "," << 1.0 << "\n";
    }
    auto r = cli::run(make(Command::Heat,
                           {{"modes", "16"}, {"left", "file:" + path}, {"times", "1"},
                            {"eval-grid", "3"}},
                           Format::Csv));
    std::remove(path.c_str());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("u(t=1)") != std::string::npos);
}

TEST_CASE("pade diagnostics through the CLI") {
    auto h = cli::run(make(Command::Pade, {{"catalog", "euler-factorial"}, {"hankel", "7"}},
                           Format::Csv));
    CHECK(h.exit_code == 0);
    CHECK(h.output.find("positive") != std::string::npos);
    auto c = cli::run(make(Command::Pade, {{"catalog", "euler-factorial"}, {"carleman", "12"}}));
    CHECK(c.exit_code == 0);
    CHECK(c.output.find("satisfied") != std::string::npos);
}

TEST_CASE("JSON output format") {
    auto r = cli::run(make(Command::Casimir, {{"length", "1"}}, Format::Json, 15));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"quantity\": \"energy_per_area\"") != std::string::npos);
    CHECK(r.output.find("-0.0137077838904") != std::string::npos);
}

TEST_CASE("rearrangement through the CLI") {
    auto r = cli::run(make(Command::Resum,
                           {{"method", "rearrange"}, {"target", "0"}, {"terms", "3"}},
                           Format::Csv));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1 -2 -4") != std::string::npos);
}

TEST_CASE("richardson table through the CLI") {
    auto r = cli::run(make(Command::Accel,
                           {{"catalog", "basel"}, {"terms", "8"}, {"method", "richardson"},
                            {"order", "2"}},
                           Format::Csv));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("R^2") != std::string::npos);
}
