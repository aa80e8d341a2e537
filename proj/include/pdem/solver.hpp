#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pdem/orderings.hpp"
#include "pdem/profiles.hpp"

namespace pdem {

/// Uniform grid of N >= 16 nodes including both end points.
class Grid {
public:
    static constexpr std::size_t kMinNodes = 16;

    /// Throws DomainError unless lo < hi and nodes >= kMinNodes.
    static Grid uniform(double lo, double hi, std::size_t nodes);
    /// Throws GridMismatch unless the nodes are uniform to 1e-12 relative.
    static Grid from_nodes(std::vector<double> nodes);

    std::span<const double> nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    double lo() const noexcept { return nodes_.front(); }
    double hi() const noexcept { return nodes_.back(); }
    double spacing() const noexcept { return spacing_; }

private:
    explicit Grid(std::vector<double> nodes);

    std::vector<double> nodes_;
    double spacing_ = 0.0;
};

/// Lowest `count` eigenvalues of -phi'' + V phi = E phi with Dirichlet
/// conditions at both grid ends, ascending.
///
/// The interior is discretised with the symmetric three-point stencil,
/// giving a symmetric tridiagonal matrix; eigenvalues are isolated by
/// Sturm-sequence bisection, so degenerate levels are all reported.
/// `potential` holds V at every grid node (end values are unused).
/// Throws DomainError unless 1 <= count < N/4 and SolverError if bisection
/// stalls.
std::vector<double> solve_constant_mass_1d(std::span<const double> potential, const Grid& grid,
                                           std::size_t count);

/// Number of eigenvalues of the discretised operator strictly below `energy`.
std::size_t count_eigenvalues_below(std::span<const double> potential, const Grid& grid,
                                    double energy);

/// Normalised (unit l2) interior eigenvector for a computed eigenvalue, by
/// inverse iteration; end entries are the Dirichlet zeros.
std::vector<double> eigenvector(std::span<const double> potential, const Grid& grid,
                                double eigenvalue);

/// Lowest `count` eigenvalues of the PDEM problem on the x interval of
/// `grid`, Dirichlet at both ends.
///
/// The equation is carried to y = int sqrt(m) dx on a uniform y grid with
/// the same node count and solved as a constant-mass problem with the full
/// ordering term kept in the potential, which is equivalent to the x-space
/// equation and self-adjoint.
std::vector<double> solve_pdem_x(const Ordering& o, const MassProfile& m,
                                 const PotentialProfile& v, const Grid& grid, std::size_t count);

struct EigenReport {
    Ordering ordering;
    std::vector<double> x_space_eigenvalues;  // full ordering term kept
    std::vector<double> y_space_eigenvalues;  // bare V(x(y))
    std::vector<double> abs_diffs;
    std::vector<double> rel_diffs;

    double x_lo = 0.0;
    double x_hi = 0.0;
    std::size_t nodes = 0;
    double y_extent = 0.0;
    double y_spacing = 0.0;
    double max_abs_bracket = 0.0;  // largest |ordering term| on the grid

    double max_rel_diff() const noexcept;
    double max_abs_diff() const noexcept;
};

/// Compares the PDEM spectrum against the constant-mass problem with the
/// ordering term dropped.  Levels are paired by ascending index.
EigenReport isospectral_report(const Ordering& o, const MassProfile& m, const PotentialProfile& v,
                               const Grid& grid, std::size_t count);

}  // namespace pdem
