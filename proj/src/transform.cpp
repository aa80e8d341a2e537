#include "pdem/transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <boost/math/tools/toms748_solve.hpp>

#include "pdem/errors.hpp"
#include "pdem/numerics.hpp"
#include "pdem/text.hpp"

namespace pdem {

namespace {

constexpr std::uintmax_t kMaxRootIterations = 200;

double sqrt_mass_integral(const MassProfile& m, double a, double b) {
    // Each smooth piece is sampled strictly inside its end points so a
    // discontinuity never leaks the neighbouring branch into the panel.
    auto piece = [&m](double p, double q, bool p_jump, bool q_jump) {
        const double lo = p_jump ? std::nextafter(p, q) : p;
        const double hi = q_jump ? std::nextafter(q, p) : q;
        return adaptive_simpson(
            [&m, lo, hi](double s) { return std::sqrt(m.value(std::clamp(s, lo, hi))); }, p, q,
            kMapQuadratureTolerance);
    };

    double total = 0.0;
    double start = a;
    bool start_jump = m.is_discontinuity(a);
    for (double d : m.discontinuities()) {
        if (d <= a || d >= b) continue;
        total += piece(start, d, start_jump, true);
        start = d;
        start_jump = true;
    }
    return total + piece(start, b, start_jump, m.is_discontinuity(b));
}

template <class F>
double solve_bracketed(F&& f, double a, double b, double fa, double fb) {
    std::uintmax_t iterations = kMaxRootIterations;
    auto tolerance = [](double lo, double hi) {
        return std::abs(hi - lo) <= 1e-14 * (1.0 + std::abs(lo));
    };
    const auto [lo, hi] =
        boost::math::tools::toms748_solve(std::forward<F>(f), a, b, fa, fb, tolerance, iterations);
    if (iterations >= kMaxRootIterations) {
        throw SolverError("map inversion did not converge", iterations);
    }
    return 0.5 * (lo + hi);
}

// Smallest x in [x_prev, hi] with y(x) = y_target, given y(x_prev) = y_prev.
double invert_from(const MassProfile& m, double x_prev, double y_prev, double y_target,
                   double hi) {
    const double gap = y_target - y_prev;
    if (gap <= 0.0) return x_prev;
    auto residual = [&](double x) { return sqrt_mass_integral(m, x_prev, x) - gap; };

    const double slope = std::sqrt(m.value(x_prev));
    double lower = x_prev;
    double f_lower = -gap;
    double step = gap / slope;
    while (true) {
        const double upper = std::min(lower + 2.0 * step, hi);
        const double f_upper = residual(upper);
        if (f_upper >= 0.0) {
            if (f_upper == 0.0) return upper;
            return solve_bracketed(residual, lower, upper, f_lower, f_upper);
        }
        if (upper >= hi) {
            if (-f_upper <= 1e-10 * (1.0 + std::abs(y_target))) return hi;
            throw RangeError("y = " + format_number(y_target) +
                             " lies beyond the image of the mass domain");
        }
        lower = upper;
        f_lower = f_upper;
        step *= 2.0;
    }
}

void check_nodes(const SampledFunction& f) {
    if (f.nodes.size() != f.values.size()) {
        throw GridMismatch("node and value counts differ (" + std::to_string(f.nodes.size()) +
                           " vs " + std::to_string(f.values.size()) + ")");
    }
    if (f.nodes.size() < 4) throw GridMismatch("at least 4 samples are required");
    for (std::size_t i = 1; i < f.nodes.size(); ++i) {
        if (!(f.nodes[i] > f.nodes[i - 1])) {
            throw GridMismatch("nodes must be strictly increasing (index " + std::to_string(i) + ")");
        }
    }
}

std::vector<double> uniform(double a, double b, std::size_t n) {
    std::vector<double> out(n);
    const double h = (b - a) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) out[i] = a + h * static_cast<double>(i);
    out.back() = b;
    return out;
}

std::vector<double> resample(const std::vector<double>& nodes, const std::vector<double>& values,
                             const std::vector<double>& targets) {
    std::vector<double> out(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        out[i] = cubic_interpolate(nodes, values, targets[i]);
    }
    return out;
}

void check_smooth(const MassProfile& m, double x) {
    if (m.is_discontinuity(x)) {
        throw DiscontinuityError("mass is discontinuous at x = " + format_number(x));
    }
}

}  // namespace

double coordinate_map(const MassProfile& m, double x0, double x) {
    m.value(x0);
    m.value(x);
    if (x >= x0) return sqrt_mass_integral(m, x0, x);
    return -sqrt_mass_integral(m, x, x0);
}

double invert_map(const MassProfile& m, double x0, double y) {
    const double y_lo = coordinate_map(m, x0, m.lo());
    const double y_hi = coordinate_map(m, x0, m.hi());
    const double slack = 1e-10 * (1.0 + std::abs(y));
    if (!std::isfinite(y) || y < y_lo - slack || y > y_hi + slack) {
        throw RangeError("y = " + format_number(y) + " outside attainable range [" +
                         format_number(y_lo) + ", " + format_number(y_hi) + "]");
    }
    if (y >= 0.0) return invert_from(m, x0, 0.0, std::min(y, y_hi), m.hi());
    return invert_from(m, m.lo(), y_lo, std::max(y, y_lo), x0);
}

SampledFunction map_wavefunction(const MassProfile& m, double x0, const SampledFunction& f,
                                 MapDirection direction) {
    check_nodes(f);
    const std::size_t n = f.nodes.size();

    if (direction == MapDirection::x_to_y) {
        std::vector<double> y(n);
        std::vector<double> phi(n);
        y[0] = coordinate_map(m, x0, f.nodes[0]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0) y[i] = y[i - 1] + sqrt_mass_integral(m, f.nodes[i - 1], f.nodes[i]);
            phi[i] = std::pow(m.value(f.nodes[i]), 0.25) * f.values[i];
        }
        std::vector<double> grid = uniform(y.front(), y.back(), n);
        std::vector<double> values = resample(y, phi, grid);
        return {std::move(grid), std::move(values)};
    }

    std::vector<double> x(n);
    std::vector<double> psi(n);
    x[0] = invert_map(m, x0, f.nodes[0]);
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) x[i] = invert_from(m, x[i - 1], f.nodes[i - 1], f.nodes[i], m.hi());
        if (i > 0 && !(x[i] > x[i - 1])) {
            throw GridMismatch("y nodes too close to resolve in x-space (index " +
                               std::to_string(i) + ")");
        }
        psi[i] = std::pow(m.value(x[i]), -0.25) * f.values[i];
    }
    std::vector<double> grid = uniform(x.front(), x.back(), n);
    std::vector<double> values = resample(x, psi, grid);
    return {std::move(grid), std::move(values)};
}

double effective_potential_term(const Ordering& o, const MassProfile& m, double x) {
    check_smooth(m, x);
    const EtaPair etas = compute_etas(o);
    const double mass = m.value(x);
    const double d1 = m.first_derivative(x);
    const double d2 = m.second_derivative(x);
    return (etas.eta1 - 7.0 / 16.0) * d1 * d1 / (mass * mass * mass) +
           (etas.eta2 + 0.25) * d2 / (mass * mass);
}

XSpaceCoefficients x_space_coefficients(const Ordering& o, const MassProfile& m,
                                        const PotentialProfile& v, double energy, double x) {
    check_smooth(m, x);
    const EtaPair etas = compute_etas(o);
    const double mass = m.value(x);
    const double d1 = m.first_derivative(x);
    const double d2 = m.second_derivative(x);
    const double ratio = d1 / mass;
    return {-ratio, etas.eta1 * ratio * ratio + etas.eta2 * d2 / mass + mass * (energy - v.value(x))};
}

MappedProblem build_mapped_problem(const Ordering& o, const MassProfile& m,
                                   const PotentialProfile& v, double lo, double hi,
                                   std::size_t nodes) {
    if (nodes < 4) throw GridMismatch("mapped problem needs at least 4 nodes");
    if (!(lo < hi)) throw DomainError("mapped problem needs lo < hi");
    for (double d : m.discontinuities()) {
        if (d > lo && d < hi) {
            throw DiscontinuityError("mass is discontinuous at x = " + format_number(d) +
                                     " inside the bound-state domain");
        }
    }

    MappedProblem p;
    const double extent = coordinate_map(m, lo, hi);
    p.y_grid = uniform(0.0, extent, nodes);
    p.x_of_y.resize(nodes);
    p.x_of_y.front() = lo;
    p.x_of_y.back() = hi;
    for (std::size_t i = 1; i + 1 < nodes; ++i) {
        p.x_of_y[i] = invert_from(m, p.x_of_y[i - 1], p.y_grid[i - 1], p.y_grid[i], hi);
    }

    p.bare_potential.resize(nodes);
    p.bracket.resize(nodes);
    p.effective_potential.resize(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
        const double x = p.x_of_y[i];
        p.bare_potential[i] = v.value(x);
        p.bracket[i] = effective_potential_term(o, m, x);
        p.effective_potential[i] = p.bare_potential[i] - p.bracket[i];
    }
    return p;
}

}  // namespace pdem
