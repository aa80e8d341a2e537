#pragma once

#include <cstddef>
#include <vector>

#include "pdem/orderings.hpp"
#include "pdem/profiles.hpp"

namespace pdem {

/// Absolute tolerance of the quadrature behind coordinate_map.
inline constexpr double kMapQuadratureTolerance = 1e-10;

/// y(x) = integral of sqrt(m(s)) ds from the anchor x0 to x.
///
/// Negative for x < x0.  Integration is split at listed discontinuities.
/// Throws DomainError if either end is outside the mass domain and
/// NonPositiveMass if m <= 0 is sampled.
double coordinate_map(const MassProfile& m, double x0, double x);

/// Inverse of coordinate_map for the same anchor: the x with
/// |coordinate_map(m, x0, x) - y| <= 1e-10 (1 + |y|).
/// Throws RangeError if y is not attained on the domain.
double invert_map(const MassProfile& m, double x0, double y);

/// Samples of a function on strictly increasing nodes.
struct SampledFunction {
    std::vector<double> nodes;
    std::vector<double> values;
};

enum class MapDirection { x_to_y, y_to_x };

/// Wavefunction remapping between x- and y-space.
///
/// x_to_y: `f` holds psi on x nodes; returns phi = m^(1/4) psi on a uniform
///         y grid with the same node count spanning the image of the nodes
///         (y measured from the anchor x0).
/// y_to_x: `f` holds phi on y nodes; returns psi = m^(-1/4) phi on a uniform
///         x grid with the same node count spanning the preimage.
/// Resampling is cubic.  Throws GridMismatch for fewer than 4 nodes,
/// mismatched sizes, or nodes that are not strictly increasing.
SampledFunction map_wavefunction(const MassProfile& m, double x0, const SampledFunction& f,
                                 MapDirection direction);

/// Ordering-dependent term added to E - V in the mapped equation:
///
///     (eta1 - 7/16) m'^2 / m^3 + (eta2 + 1/4) m'' / m^2
///
/// Throws DiscontinuityError at a listed discontinuity of m.
double effective_potential_term(const Ordering& o, const MassProfile& m, double x);

/// Coefficients of psi'' + c1 psi' + c0 psi = 0 (hbar^2 = 2, so 2m/hbar^2 = m).
struct XSpaceCoefficients {
    double c1 = 0.0;  // -m'/m
    double c0 = 0.0;  // eta1 m'^2/m^2 + eta2 m''/m + m (E - V)
};

XSpaceCoefficients x_space_coefficients(const Ordering& o, const MassProfile& m,
                                        const PotentialProfile& v, double energy, double x);

/// Mass equation carried to a uniform y grid spanning [y(lo), y(hi)] with
/// y(lo) = 0.  Node i of every vector refers to the same point.
struct MappedProblem {
    std::vector<double> y_grid;
    std::vector<double> x_of_y;
    std::vector<double> bare_potential;  // V(x(y))
    std::vector<double> bracket;         // effective_potential_term at x(y)
    std::vector<double> effective_potential;  // V - bracket

    double spacing() const noexcept { return y_grid[1] - y_grid[0]; }
};

/// Tabulates x(y) on `nodes` uniform y points over the x interval [lo, hi].
/// The mass must be smooth on [lo, hi]; throws DiscontinuityError otherwise.
MappedProblem build_mapped_problem(const Ordering& o, const MassProfile& m,
                                   const PotentialProfile& v, double lo, double hi,
                                   std::size_t nodes);

}  // namespace pdem
