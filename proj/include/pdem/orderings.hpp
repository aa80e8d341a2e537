#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pdem {

/// Von Roos ambiguity parameters of the kinetic-energy operator
///
///     T = 1/4 (m^alpha p m^beta p m^gamma + m^gamma p m^beta p m^alpha).
///
/// Any triple can be constructed; validity is queried with
/// check_constraints().
struct Ordering {
    double alpha = 0.0;
    double beta = -1.0;
    double gamma = 0.0;

    friend bool operator==(const Ordering&, const Ordering&) = default;
};

/// Coefficients of m'^2/m^2 and m''/m in the x-space PDEM equation.
struct EtaPair {
    double eta1 = 0.0;
    double eta2 = 0.0;
};

struct ConstraintFlags {
    bool von_roos = false;
    bool symmetry = false;
    bool eta1 = false;
    bool eta2 = false;

    /// Both conditions that remove the ordering term from the mapped equation.
    bool isospectral() const noexcept { return eta1 && eta2; }
};

struct ConstraintReport {
    double von_roos_residual = 0.0;  // alpha + beta + gamma + 1
    double symmetry_residual = 0.0;  // alpha - gamma
    double eta1_residual = 0.0;      // eta1 - 7/16
    double eta2_residual = 0.0;      // eta2 + 1/4
    double tolerance = 0.0;

    ConstraintFlags flags() const noexcept;
};

inline constexpr double kDefaultConstraintTolerance = 1e-12;

EtaPair compute_etas(const Ordering& o) noexcept;

/// Throws DomainError for a negative tolerance.
ConstraintReport check_constraints(const Ordering& o,
                                   double tol = kDefaultConstraintTolerance);

enum class SolveMode {
    direct,        // Solve the constraint system exactly as the eta formulas read.
    paper_table1,  // Roots of 16 gamma^2 - 8 gamma - 1 = 0 as tabulated.
};

std::string_view to_string(SolveMode mode) noexcept;
SolveMode parse_solve_mode(std::string_view text);

struct OrderingSolution {
    Ordering ordering;
    ConstraintReport report;
    std::string exact_form;
    SolveMode mode;
};

/// Orderings whose mapped constant-mass equation carries no ordering term.
///
/// Both modes fix beta = -1/2 from the von Roos constraint and the eta2
/// condition.  `paper_table1` then takes gamma = (1 +- sqrt 2)/4 and
/// alpha = -1/2 - gamma.  `direct` substitutes the eta definitions into
/// the remaining condition, which gives 16 z^2 + 8 z + 1 = 0 for z in
/// {alpha, gamma}: a double root at -1/4, hence one ordering.
///
/// The two modes disagree.  The tabulated orderings leave
/// eta1 - 7/16 = (3 - 2 sqrt 2)/8 != 0; every returned ordering carries its
/// ConstraintReport so the disagreement is visible to callers.
std::vector<OrderingSolution> solve_isospectral_orderings(SolveMode mode);

struct NamedOrdering {
    std::string name;
    Ordering ordering;
    std::string description;
};

/// Fixed catalog, in display order.
const std::vector<NamedOrdering>& named_orderings();

/// Throws NotFound listing the available names.
const NamedOrdering& find_ordering(std::string_view name);

/// Accepts a catalog name or an explicit "alpha,beta,gamma" triple.
Ordering parse_ordering(std::string_view text);

}  // namespace pdem
