#include "pdem/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "pdem/errors.hpp"
#include "pdem/profiles.hpp"
#include "pdem/solver.hpp"
#include "pdem/text.hpp"
#include "pdem/transform.hpp"

namespace pdem::cli {

namespace {

std::string fmt_num(double v) { return format_number(v); }

std::string flag_mark(bool ok) { return ok ? "yes" : "no"; }

void print_report_rows(std::ostream& os, const Ordering& o, const ConstraintReport& rep) {
    const EtaPair etas = compute_etas(o);
    const ConstraintFlags f = rep.flags();
    fmt::print(os, "  alpha = {}  beta = {}  gamma = {}\n", fmt_num(o.alpha), fmt_num(o.beta),
               fmt_num(o.gamma));
    fmt::print(os, "  eta1 = {}  eta2 = {}\n", fmt_num(etas.eta1), fmt_num(etas.eta2));
    fmt::print(os, "  {:<28}{:>22}  within tol\n", "residual", "value");
    fmt::print(os, "  {:<28}{:>22}  {}\n", "von_roos (a+b+g+1)", fmt_num(rep.von_roos_residual),
               flag_mark(f.von_roos));
    fmt::print(os, "  {:<28}{:>22}  {}\n", "symmetry (a-g)", fmt_num(rep.symmetry_residual),
               flag_mark(f.symmetry));
    fmt::print(os, "  {:<28}{:>22}  {}\n", "eta1 (eta1-7/16)", fmt_num(rep.eta1_residual),
               flag_mark(f.eta1));
    fmt::print(os, "  {:<28}{:>22}  {}\n", "eta2 (eta2+1/4)", fmt_num(rep.eta2_residual),
               flag_mark(f.eta2));
    fmt::print(os, "  ordering term removed: {}  (tol {})\n", flag_mark(f.isospectral()),
               fmt_num(rep.tolerance));
}

MassProfile make_mass(const RunConfig& c) {
    if (trim(c.mass_expr) == "step") return MassProfile::step(c.m1, c.m2, c.domain_lo, c.domain_hi);
    return MassProfile::from_expression(resolve_mass_expression(c.mass_expr), c.domain_lo,
                                        c.domain_hi);
}

PotentialProfile make_potential(const RunConfig& c) {
    if (trim(c.pot_expr) == "step") return PotentialProfile::step(c.v0, c.domain_lo, c.domain_hi);
    return PotentialProfile::from_expression(resolve_potential_expression(c.pot_expr), c.domain_lo,
                                             c.domain_hi);
}

std::string help_footer() {
    std::string text =
        "\nUnits: hbar^2 = 2, so the Schroedinger factor 2m/hbar^2 is m; masses are in units of a\n"
        "reference mass and energies are dimensionless.\n\n"
        "Expressions (--mass-expr, --pot-expr): + - * / ^, parentheses, numbers, x, pi,\n"
        "exp log sqrt sech tanh cosh sinh sin cos.  'step' selects the abrupt junction built\n"
        "from --m1/--m2 (mass) or --v0 (potential).\n\nBuilt-in mass profiles:\n";
    for (const auto& p : named_mass_profiles()) text += "  " + p.name + " = " + p.expression + "\n";
    text += "Built-in potentials:\n";
    for (const auto& p : named_potentials()) text += "  " + p.name + " = " + p.expression + "\n";
    text += "Named orderings (--ordering, or an explicit alpha,beta,gamma):\n";
    for (const auto& o : named_orderings()) {
        text += "  " + o.name + " = (" + fmt_num(o.ordering.alpha) + ", " + fmt_num(o.ordering.beta) +
                ", " + fmt_num(o.ordering.gamma) + ")\n";
    }
    text += "\nConfig files (--config) hold key = value lines; command-line flags win.\n"
            "PDEM_SEED is reserved and ignored: every algorithm is deterministic.\n";
    return text;
}

}  // namespace

void RunConfig::validate() const {
    for (double v : {m1, m2, v0, e_min, e_max, domain_lo, domain_hi, tolerance}) {
        if (!std::isfinite(v)) throw DomainError("configuration values must be finite");
    }
    if (count < 1) throw DomainError("count must be at least 1");
    if (nodes < Grid::kMinNodes) {
        throw DomainError("nodes must be at least " + std::to_string(Grid::kMinNodes));
    }
    if (!(domain_lo < domain_hi)) throw DomainError("domain needs lo < hi");
    if (!(tolerance >= 0.0)) throw DomainError("tolerance must be non-negative");
}

void cmd_orderings(const RunConfig& config, std::ostream& os) {
    if (config.check) {
        const Ordering o = parse_ordering(*config.check);
        fmt::print(os, "constraint check\n");
        print_report_rows(os, o, check_constraints(o));
        return;
    }
    const auto solutions = solve_isospectral_orderings(config.mode);
    fmt::print(os, "isospectral orderings, mode {} ({} solution{})\n", to_string(config.mode),
               solutions.size(), solutions.size() == 1 ? "" : "s");
    for (std::size_t i = 0; i < solutions.size(); ++i) {
        const auto& s = solutions[i];
        fmt::print(os, "[{}] {}\n", i + 1, s.exact_form);
        print_report_rows(os, s.ordering, s.report);
    }
}

void cmd_transmission(const RunConfig& config, std::ostream& os) {
    config.validate();
    const StepJunction junction(config.m1, config.m2, config.v0);
    const auto rows =
        transmission_spectrum(junction, config.e_min, config.e_max, config.count, config.tmode);
    os << "E,k1_re,k1_im,k2_re,k2_im,r_re,r_im,t_re,t_im,R,T,R_plus_T,status\n";
    for (const auto& row : rows) {
        const ScatteringResult& r = row.result;
        os << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", fmt_num(r.energy),
                          fmt_num(r.k1.real()), fmt_num(r.k1.imag()), fmt_num(r.k2.real()),
                          fmt_num(r.k2.imag()), fmt_num(r.r.real()), fmt_num(r.r.imag()),
                          fmt_num(r.t.real()), fmt_num(r.t.imag()), fmt_num(r.reflectivity),
                          fmt_num(r.transmittivity), fmt_num(r.r_plus_t_flux), to_string(row.status));
    }
}

bool cmd_isospectral(const RunConfig& config, std::ostream& os) {
    config.validate();
    const Ordering o = parse_ordering(config.ordering);
    const MassProfile m = make_mass(config);
    const PotentialProfile v = make_potential(config);
    const Grid grid = Grid::uniform(config.domain_lo, config.domain_hi, config.nodes);
    const EigenReport rep = isospectral_report(o, m, v, grid, config.levels);

    fmt::print(os, "ordering  alpha = {}  beta = {}  gamma = {}\n", fmt_num(o.alpha),
               fmt_num(o.beta), fmt_num(o.gamma));
    fmt::print(os, "mass      {}\npotential {}\n", config.mass_expr, config.pot_expr);
    fmt::print(os, "x domain  [{}, {}], {} nodes; y extent {}, y spacing {}\n", fmt_num(rep.x_lo),
               fmt_num(rep.x_hi), rep.nodes, fmt_num(rep.y_extent), fmt_num(rep.y_spacing));
    fmt::print(os, "max |ordering term| on grid: {}\n", fmt_num(rep.max_abs_bracket));
    fmt::print(os, "{:>5}  {:>20}  {:>20}  {:>20}  {:>20}\n", "level", "E_x", "E_y", "abs_diff",
               "rel_diff");
    for (std::size_t k = 0; k < rep.x_space_eigenvalues.size(); ++k) {
        fmt::print(os, "{:>5}  {:>20}  {:>20}  {:>20}  {:>20}\n", k,
                   fmt_num(rep.x_space_eigenvalues[k]), fmt_num(rep.y_space_eigenvalues[k]),
                   fmt_num(rep.abs_diffs[k]), fmt_num(rep.rel_diffs[k]));
    }
    const bool pass = rep.max_rel_diff() <= config.tolerance;
    fmt::print(os, "{} max rel diff {} {} tol {}\n", pass ? "PASS" : "FAIL",
               fmt_num(rep.max_rel_diff()), pass ? "<=" : ">", fmt_num(config.tolerance));
    return pass;
}

void cmd_effective_potential(const RunConfig& config, std::ostream& os) {
    config.validate();
    const Ordering o = parse_ordering(config.ordering);
    const MassProfile m = make_mass(config);
    const Grid grid = Grid::uniform(config.domain_lo, config.domain_hi, config.nodes);
    os << "x,m,m_prime,m_double_prime,bracket_term,status\n";
    for (double x : grid.nodes()) {
        const double mass = m.value(x);
        try {
            const double term = effective_potential_term(o, m, x);
            os << fmt::format("{},{},{},{},{},ok\n", fmt_num(x), fmt_num(mass),
                              fmt_num(m.first_derivative(x)), fmt_num(m.second_derivative(x)),
                              fmt_num(term));
        } catch (const DiscontinuityError&) {
            os << fmt::format("{},{},nan,nan,nan,discontinuity\n", fmt_num(x), fmt_num(mass));
        }
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    std::string mode = "direct";
    std::string tmode = "physical";
    std::string domain;
    std::string check;

    CLI::App app{"Position-dependent effective mass toolkit: von Roos orderings, the constant-mass\n"
                 "transformation, and abrupt-heterojunction scattering.",
                 "pdem"};
    app.footer(help_footer());
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "Read key = value settings from a file");

    app.add_option("--ordering", config.ordering, "Ordering name or alpha,beta,gamma")
        ->capture_default_str();
    app.add_option("--mode", mode, "Ordering solver mode: direct | paper_table1")
        ->capture_default_str();
    app.add_option("--check", check, "orderings: report constraint residuals of alpha,beta,gamma");
    app.add_option("--m1", config.m1, "Mass for x < 0")->capture_default_str();
    app.add_option("--m2", config.m2, "Mass for x > 0")->capture_default_str();
    app.add_option("--v0", config.v0, "Potential step height")->capture_default_str();
    app.add_option("--emin", config.e_min, "Lowest sweep energy")->capture_default_str();
    app.add_option("--emax", config.e_max, "Highest sweep energy")->capture_default_str();
    app.add_option("--count", config.count, "Number of sweep energies")->capture_default_str();
    app.add_option("--tmode", tmode, "Transmittivity mode: physical | literal_eq25")
        ->capture_default_str();
    app.add_option("--mass-expr", config.mass_expr, "Mass profile name or expression in x")
        ->capture_default_str();
    app.add_option("--pot-expr", config.pot_expr, "Potential name or expression in x")
        ->capture_default_str();
    app.add_option("--domain", domain, "x interval lo,hi (default -10,10)");
    app.add_option("--nodes", config.nodes, "Grid nodes")->capture_default_str();
    app.add_option("--levels", config.levels, "isospectral: number of eigenvalues")
        ->capture_default_str();
    app.add_option("--tol", config.tolerance, "isospectral: relative PASS tolerance")
        ->capture_default_str();
    app.add_option("--out", config.out, "Output path (default: standard output)");

    app.add_subcommand("orderings", "Solve or check the ordering constraints");
    app.add_subcommand("transmission", "Reflection/transmission sweep at a step junction (CSV)");
    app.add_subcommand("isospectral", "Compare PDEM and constant-mass spectra");
    app.add_subcommand("effective-potential", "Ordering term of the mapped equation (CSV)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        config.subcommand = app.get_subcommands().front()->get_name();
        config.mode = parse_solve_mode(mode);
        config.tmode = parse_transmission_mode(tmode);
        if (!check.empty()) config.check = check;
        if (!domain.empty()) {
            const auto bounds = parse_number_list(domain);
            if (bounds.size() != 2) throw ParseError("--domain expects lo,hi", 0);
            config.domain_lo = bounds[0];
            config.domain_hi = bounds[1];
        }

        std::ostringstream buffer;
        bool pass = true;
        if (config.subcommand == "orderings") cmd_orderings(config, buffer);
        else if (config.subcommand == "transmission") cmd_transmission(config, buffer);
        else if (config.subcommand == "isospectral") pass = cmd_isospectral(config, buffer);
        else cmd_effective_potential(config, buffer);

        if (config.out.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(config.out, std::ios::binary | std::ios::trunc);
            if (!file) throw Error("cannot open '" + config.out + "' for writing");
            file << buffer.str();
            file.close();
            if (!file) throw Error("failed writing '" + config.out + "'");
            if (config.subcommand == "isospectral") out << (pass ? "PASS\n" : "FAIL\n");
        }
        return 0;
    } catch (const std::exception& e) {
        std::string message = e.what();
        for (char& ch : message) {
            if (ch == '\n') ch = ' ';
        }
        err << "error: " << message << "\n";
        return 1;
    }
}

}  // namespace pdem::cli
