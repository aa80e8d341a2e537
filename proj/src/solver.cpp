#include "pdem/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pdem/errors.hpp"
#include "pdem/text.hpp"
#include "pdem/transform.hpp"

namespace pdem {

namespace {

constexpr std::size_t kMaxBisections = 256;

// Interior of the Dirichlet problem: diagonal 2/h^2 + V_i, off-diagonal -1/h^2.
struct Tridiagonal {
    std::vector<double> diagonal;
    double off = 0.0;
};

Tridiagonal assemble(std::span<const double> potential, const Grid& grid) {
    if (potential.size() != grid.size()) {
        throw GridMismatch("potential has " + std::to_string(potential.size()) +
                           " samples for a grid of " + std::to_string(grid.size()));
    }
    const double inv_h2 = 1.0 / (grid.spacing() * grid.spacing());
    Tridiagonal t;
    t.off = -inv_h2;
    t.diagonal.resize(grid.size() - 2);
    for (std::size_t i = 0; i < t.diagonal.size(); ++i) {
        t.diagonal[i] = 2.0 * inv_h2 + potential[i + 1];
    }
    return t;
}

// Negative pivots of the LDL^T factorisation of T - lambda I (Sylvester inertia).
std::size_t sturm_count(const Tridiagonal& t, double lambda) {
    const double off2 = t.off * t.off;
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    std::size_t negatives = 0;
    double pivot = 1.0;
    for (std::size_t i = 0; i < t.diagonal.size(); ++i) {
        pivot = t.diagonal[i] - lambda - (i == 0 ? 0.0 : off2 / pivot);
        if (pivot == 0.0) pivot = -tiny;
        if (pivot < 0.0) ++negatives;
    }
    return negatives;
}

double bisect_eigenvalue(const Tridiagonal& t, std::size_t index, double lo, double hi) {
    // Invariant: sturm_count(lo) <= index < sturm_count(hi).
    for (std::size_t it = 0; it < kMaxBisections; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) return mid;
        const double width = hi - lo;
        if (width <= 2.0 * std::numeric_limits<double>::epsilon() *
                         std::max({std::abs(lo), std::abs(hi), 1.0})) {
            return mid;
        }
        if (sturm_count(t, mid) > index) hi = mid;
        else lo = mid;
    }
    throw SolverError("Sturm bisection for eigenvalue " + std::to_string(index) +
                          " did not converge",
                      kMaxBisections);
}

}  // namespace

Grid::Grid(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    spacing_ = (nodes_.back() - nodes_.front()) / static_cast<double>(nodes_.size() - 1);
}

Grid Grid::uniform(double lo, double hi, std::size_t nodes) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        throw DomainError("grid needs finite lo < hi");
    }
    if (nodes < kMinNodes) {
        throw DomainError("grid needs at least " + std::to_string(kMinNodes) + " nodes (got " +
                          std::to_string(nodes) + ")");
    }
    std::vector<double> out(nodes);
    const double h = (hi - lo) / static_cast<double>(nodes - 1);
    for (std::size_t i = 0; i < nodes; ++i) out[i] = lo + h * static_cast<double>(i);
    out.back() = hi;
    return Grid(std::move(out));
}

Grid Grid::from_nodes(std::vector<double> nodes) {
    if (nodes.size() < kMinNodes) {
        throw GridMismatch("grid needs at least " + std::to_string(kMinNodes) + " nodes");
    }
    const double h = (nodes.back() - nodes.front()) / static_cast<double>(nodes.size() - 1);
    if (!(h > 0.0)) throw GridMismatch("grid nodes must be strictly increasing");
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (std::abs((nodes[i] - nodes[i - 1]) - h) > 1e-12 * std::max(h, std::abs(nodes[i]))) {
            throw GridMismatch("grid is not uniform at index " + std::to_string(i));
        }
    }
    return Grid(std::move(nodes));
}

std::size_t count_eigenvalues_below(std::span<const double> potential, const Grid& grid,
                                    double energy) {
    return sturm_count(assemble(potential, grid), energy);
}

std::vector<double> solve_constant_mass_1d(std::span<const double> potential, const Grid& grid,
                                           std::size_t count) {
    if (count == 0 || count >= grid.size() / 4) {
        throw DomainError("eigenvalue count must satisfy 1 <= n < N/4 (n = " +
                          std::to_string(count) + ", N = " + std::to_string(grid.size()) + ")");
    }
    const Tridiagonal t = assemble(potential, grid);

    // Gershgorin interval.
    const auto [dmin, dmax] = std::minmax_element(t.diagonal.begin(), t.diagonal.end());
    const double radius = 2.0 * std::abs(t.off);
    const double lower = *dmin - radius - 1.0;
    const double upper = *dmax + radius + 1.0;

    std::vector<double> values(count);
    double floor = lower;
    for (std::size_t k = 0; k < count; ++k) {
        values[k] = bisect_eigenvalue(t, k, floor, upper);
        // Level k+1 is not below level k, so its search can start under it.
        floor = std::nextafter(values[k], lower);
    }
    return values;
}

std::vector<double> eigenvector(std::span<const double> potential, const Grid& grid,
                                double eigenvalue) {
    const Tridiagonal t = assemble(potential, grid);
    const std::size_t n = t.diagonal.size();
    // Shift slightly off the eigenvalue so the factorisation stays regular.
    const double shift = eigenvalue + 1e-10 * std::max(1.0, std::abs(eigenvalue));

    std::vector<double> v(n, 1.0);
    std::vector<double> c(n), d(n);
    for (int sweep = 0; sweep < 4; ++sweep) {
        // Thomas solve of (T - shift) w = v.
        double denom = t.diagonal[0] - shift;
        c[0] = t.off / denom;
        d[0] = v[0] / denom;
        for (std::size_t i = 1; i < n; ++i) {
            denom = t.diagonal[i] - shift - t.off * c[i - 1];
            c[i] = t.off / denom;
            d[i] = (v[i] - t.off * d[i - 1]) / denom;
        }
        v[n - 1] = d[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) v[i] = d[i] - c[i] * v[i + 1];

        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        for (double& x : v) x /= norm;
    }

    std::vector<double> full(grid.size(), 0.0);
    std::copy(v.begin(), v.end(), full.begin() + 1);
    // Fix the sign so the largest component is positive.
    const auto peak = std::max_element(full.begin(), full.end(),
                                       [](double a, double b) { return std::abs(a) < std::abs(b); });
    if (*peak < 0.0) {
        for (double& x : full) x = -x;
    }
    return full;
}

std::vector<double> solve_pdem_x(const Ordering& o, const MassProfile& m,
                                 const PotentialProfile& v, const Grid& grid, std::size_t count) {
    const MappedProblem p = build_mapped_problem(o, m, v, grid.lo(), grid.hi(), grid.size());
    const Grid y_grid = Grid::uniform(p.y_grid.front(), p.y_grid.back(), p.y_grid.size());
    return solve_constant_mass_1d(p.effective_potential, y_grid, count);
}

double EigenReport::max_rel_diff() const noexcept {
    return rel_diffs.empty() ? 0.0 : *std::max_element(rel_diffs.begin(), rel_diffs.end());
}

double EigenReport::max_abs_diff() const noexcept {
    return abs_diffs.empty() ? 0.0 : *std::max_element(abs_diffs.begin(), abs_diffs.end());
}

EigenReport isospectral_report(const Ordering& o, const MassProfile& m, const PotentialProfile& v,
                               const Grid& grid, std::size_t count) {
    const MappedProblem p = build_mapped_problem(o, m, v, grid.lo(), grid.hi(), grid.size());
    const Grid y_grid = Grid::uniform(p.y_grid.front(), p.y_grid.back(), p.y_grid.size());

    EigenReport r;
    r.ordering = o;
    r.x_space_eigenvalues = solve_constant_mass_1d(p.effective_potential, y_grid, count);
    r.y_space_eigenvalues = solve_constant_mass_1d(p.bare_potential, y_grid, count);
    r.x_lo = grid.lo();
    r.x_hi = grid.hi();
    r.nodes = grid.size();
    r.y_extent = y_grid.hi() - y_grid.lo();
    r.y_spacing = y_grid.spacing();
    for (double b : p.bracket) r.max_abs_bracket = std::max(r.max_abs_bracket, std::abs(b));

    for (std::size_t k = 0; k < count; ++k) {
        const double ex = r.x_space_eigenvalues[k];
        const double ey = r.y_space_eigenvalues[k];
        const double diff = std::abs(ex - ey);
        r.abs_diffs.push_back(diff);
        r.rel_diffs.push_back(diff / std::max(std::abs(ey), std::numeric_limits<double>::min()));
    }
    return r;
}

}  // namespace pdem
