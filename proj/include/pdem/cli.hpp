#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "pdem/orderings.hpp"
#include "pdem/scattering.hpp"

namespace pdem::cli {

/// Everything one CLI invocation needs.  Masses are in units of a reference
/// mass, energies and potentials in hbar^2 = 2 units.
struct RunConfig {
    std::string subcommand;

    std::string ordering = "symmetric-quarter";  // catalog name or "a,b,g"
    SolveMode mode = SolveMode::direct;
    std::optional<std::string> check;            // orderings --check a,b,g

    double m1 = 1.0;
    double m2 = 1.0;
    double v0 = 1.0;
    double e_min = 0.1;
    double e_max = 10.0;
    std::size_t count = 100;
    TransmissionMode tmode = TransmissionMode::physical;

    std::string mass_expr = "lorentzian";  // built-in name, "step", or expression in x
    std::string pot_expr = "harmonic";
    double domain_lo = -10.0;
    double domain_hi = 10.0;
    std::size_t nodes = 4001;
    std::size_t levels = 3;
    double tolerance = 1e-4;

    std::string out;  // empty: standard output

    /// Throws DomainError for non-finite numbers, count < 1, nodes < 16 or
    /// an empty domain.
    void validate() const;
};

void cmd_orderings(const RunConfig& config, std::ostream& os);

/// CSV: E,k1_re,k1_im,k2_re,k2_im,r_re,r_im,t_re,t_im,R,T,R_plus_T,status
void cmd_transmission(const RunConfig& config, std::ostream& os);

/// Prints the eigenvalue table and a PASS/FAIL line; returns true on PASS.
bool cmd_isospectral(const RunConfig& config, std::ostream& os);

/// CSV: x,m,m_prime,m_double_prime,bracket_term,status
void cmd_effective_potential(const RunConfig& config, std::ostream& os);

/// Full command line front end.  Errors are reported on `err` as a single
/// line starting with "error:" and a nonzero return value.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pdem::cli
