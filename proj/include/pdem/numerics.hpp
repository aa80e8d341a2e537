#pragma once

#include <functional>
#include <span>

namespace pdem {

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance `tol`.
/// Returns the negated integral when b < a.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10, int max_depth = 50);

/// Local four-point cubic (Lagrange) interpolation on strictly increasing,
/// possibly non-uniform nodes.  Needs at least four nodes; points outside
/// the node range are clamped onto it.
double cubic_interpolate(std::span<const double> nodes, std::span<const double> values, double at);

}  // namespace pdem
