#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pdem/cli.hpp"
#include "pdem/text.hpp"

using namespace pdem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "pdem");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) parts.push_back(item);
    return parts;
}

// Column `name` of a CSV document, as numbers.
std::vector<double> column(const std::string& csv, const std::string& name) {
    const auto lines = split(csv, '\n');
    const auto header = split(lines.at(0), ',');
    std::size_t index = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) index = i;
    }
    REQUIRE(index < header.size());
    std::vector<double> values;
    for (std::size_t row = 1; row < lines.size(); ++row) {
        values.push_back(parse_number(split(lines[row], ',').at(index)));
    }
    return values;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("pdem_cli_test_" + name);
}

}  // namespace

TEST_CASE("number formatting is fixed at 12 significant digits") {
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1e-20) == "1e-20");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(parse_number(" 2.5e3 ") == 2500.0);
    CHECK(parse_number("+1") == 1.0);
}

TEST_CASE("orderings subcommand") {
    const Outcome table = run_cli({"orderings", "--mode", "paper_table1"});
    CHECK(table.code == 0);
    CHECK(table.out.find("2 solutions") != std::string::npos);
    CHECK(table.out.find("gamma = -0.103553390593") != std::string::npos);
    CHECK(table.out.find("gamma = 0.603553390593") != std::string::npos);
    CHECK(table.out.find("0.0214466094067") != std::string::npos);

    const Outcome direct = run_cli({"orderings", "--mode", "direct"});
    CHECK(direct.code == 0);
    CHECK(direct.out.find("1 solution)") != std::string::npos);
    CHECK(direct.out.find("alpha = -0.25  beta = -0.5  gamma = -0.25") != std::string::npos);
    CHECK(direct.out.find("ordering term removed: yes") != std::string::npos);

    const Outcome check = run_cli({"orderings", "--check", "0,-1,0"});
    CHECK(check.code == 0);
    CHECK(check.out.find("-0.4375") != std::string::npos);
}

TEST_CASE("transmission CSV") {
    const Outcome unit = run_cli({"transmission", "--m1", "1.5", "--m2", "1.5", "--v0", "1",
                                  "--emin", "1.01", "--emax", "10", "--count", "50"});
    REQUIRE(unit.code == 0);
    CHECK(split(unit.out, '\n').at(0) ==
          "E,k1_re,k1_im,k2_re,k2_im,r_re,r_im,t_re,t_im,R,T,R_plus_T,status");
    const auto sums = column(unit.out, "R_plus_T");
    CHECK(sums.size() == 50);
    for (double s : sums) CHECK(std::abs(s - 1.0) <= 1e-12);

    const Outcome high = run_cli({"transmission", "--m1", "1", "--m2", "2", "--v0", "1", "--emin",
                                  "1e4", "--emax", "1e4", "--count", "1"});
    REQUIRE(high.code == 0);
    const auto t = column(high.out, "T");
    REQUIRE(t.size() == 1);
    CHECK(std::abs(t[0] - 2.0) <= 2e-8);

    const Outcome flat = run_cli({"transmission", "--m1", "2", "--m2", "3", "--v0", "0", "--emin",
                                  "0.5", "--emax", "4", "--count", "8"});
    for (double v : column(flat.out, "T")) CHECK(v == doctest::Approx(1.5).epsilon(1e-12));

    const Outcome degenerate = run_cli({"transmission", "--v0", "2", "--emin", "2", "--emax", "2",
                                        "--count", "1"});
    CHECK(degenerate.code == 0);
    CHECK(degenerate.out.find("nan,degenerate_energy") != std::string::npos);
}

TEST_CASE("transmission output is byte-identical across runs") {
    const auto a = scratch("a.csv"), b = scratch("b.csv");
    const std::vector<std::string> args = {"transmission", "--m1", "1", "--m2", "2.5", "--v0",
                                           "0.8", "--emin", "0.1", "--emax", "20", "--count", "300",
                                           "--tmode", "literal_eq25"};
    auto with_out = [&](const std::filesystem::path& p) {
        auto full = args;
        full.push_back("--out");
        full.push_back(p.string());
        return run_cli(full);
    };
    REQUIRE(with_out(a).code == 0);
    REQUIRE(with_out(b).code == 0);
    const std::string first = read_file(a);
    CHECK(first.size() > 1000);
    CHECK(first == read_file(b));
    CHECK(first.find('\r') == std::string::npos);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST_CASE("isospectral subcommand") {
    const Outcome direct = run_cli({"isospectral", "--ordering", "symmetric-quarter"});
    CHECK(direct.code == 0);
    CHECK(direct.out.find("\nPASS") != std::string::npos);

    const Outcome bdd = run_cli({"isospectral", "--ordering", "bendaniel-duke"});
    CHECK(bdd.code == 0);
    CHECK(bdd.out.find("\nFAIL") != std::string::npos);

    for (const char* ordering : {"bendaniel-duke", "table1-set1", "zhu-kroemer", "1,-3,1"}) {
        const Outcome flat = run_cli({"isospectral", "--ordering", ordering, "--mass-expr", "2.5",
                                      "--tol", "1e-10", "--nodes", "801"});
        CHECK(flat.out.find("\nPASS") != std::string::npos);
    }
}

TEST_CASE("effective-potential subcommand") {
    const Outcome direct = run_cli({"effective-potential", "--ordering", "symmetric-quarter",
                                    "--mass-expr", "sech2", "--nodes", "1001"});
    REQUIRE(direct.code == 0);
    CHECK(split(direct.out, '\n').at(0) == "x,m,m_prime,m_double_prime,bracket_term,status");
    const auto term = column(direct.out, "bracket_term");
    CHECK(term.size() == 1001);
    for (double v : term) CHECK(std::abs(v) <= 1e-12);

    const Outcome bdd = run_cli({"effective-potential", "--ordering", "0,-1,0", "--mass-expr",
                                 "exp(2*x)", "--domain", "-1,1", "--nodes", "41"});
    REQUIRE(bdd.code == 0);
    const auto xs = column(bdd.out, "x");
    const auto bterm = column(bdd.out, "bracket_term");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        CHECK(bterm[i] == doctest::Approx(-0.75 * std::exp(-2.0 * xs[i])).epsilon(1e-11));
    }

    const Outcome flat = run_cli({"effective-potential", "--mass-expr", "3", "--nodes", "32"});
    for (const char* name : {"m_prime", "m_double_prime", "bracket_term"}) {
        for (double v : column(flat.out, name)) CHECK(v == 0.0);
    }

    const Outcome step = run_cli({"effective-potential", "--mass-expr", "step", "--m2", "2",
                                  "--domain", "-1,1", "--nodes", "21"});
    CHECK(step.code == 0);
    CHECK(step.out.find("\n0,2,nan,nan,nan,discontinuity\n") != std::string::npos);
}

TEST_CASE("config file with flag overrides") {
    const auto cfg = scratch("run.toml");
    {
        std::ofstream f(cfg);
        f << "# junction\nm1 = 1\nm2 = 2\nv0 = 1\nemin = 2\nemax = 2\ncount = 1\n";
    }
    const Outcome from_file = run_cli({"transmission", "--config", cfg.string()});
    REQUIRE(from_file.code == 0);
    CHECK(column(from_file.out, "T").at(0) == doctest::Approx(1.941126).epsilon(1e-6));

    const Outcome overridden = run_cli({"transmission", "--config", cfg.string(), "--m2", "1"});
    REQUIRE(overridden.code == 0);
    CHECK(column(overridden.out, "T").at(0) == doctest::Approx(0.970563).epsilon(1e-6));
    std::filesystem::remove(cfg);
}

TEST_CASE("errors are single-line and prefixed") {
    const std::vector<std::vector<std::string>> bad = {
        {"isospectral", "--ordering", "weyl"},
        {"isospectral", "--mass-expr", "1 + y"},
        {"isospectral", "--mass-expr", "x", "--domain", "-1,1", "--nodes", "64"},
        {"orderings", "--mode", "sideways"},
        {"transmission", "--tmode", "flux"},
        {"transmission", "--emin", "3", "--emax", "1"},
        {"transmission", "--out", "/nonexistent-dir/out.csv"},
        {"effective-potential", "--nodes", "4"},
        {"transmission", "--m1", "abc"},
        {},
    };
    for (const auto& args : bad) {
        const Outcome o = run_cli(args);
        CAPTURE(o.err);
        CHECK(o.code != 0);
        CHECK(o.err.rfind("error:", 0) == 0);
        CHECK(o.err.find('\n') == o.err.size() - 1);
        CHECK(o.out.empty());
    }
}

TEST_CASE("help lists units and catalogs") {
    const Outcome help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("hbar^2 = 2") != std::string::npos);
    CHECK(help.out.find("lorentzian") != std::string::npos);
    CHECK(help.out.find("table1-set2") != std::string::npos);
}
