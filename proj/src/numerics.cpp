#include "pdem/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "pdem/errors.hpp"

namespace pdem {

namespace {

struct Panel {
    double a, fa, m, fm, b, fb, whole;
};

double simpson_step(const std::function<double(double)>& f, const Panel& p, double tol, int depth) {
    const double lm = 0.5 * (p.a + p.m);
    const double rm = 0.5 * (p.m + p.b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (p.m - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm);
    const double right = (p.b - p.m) / 6.0 * (p.fm + 4.0 * frm + p.fb);
    const double delta = left + right - p.whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson_step(f, {p.a, p.fa, lm, flm, p.m, p.fm, left}, 0.5 * tol, depth - 1) +
           simpson_step(f, {p.m, p.fm, rm, frm, p.b, p.fb, right}, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
    if (a == b) return 0.0;
    if (b < a) return -adaptive_simpson(f, b, a, tol, max_depth);
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    // Force a few levels of splitting so narrow features are not skipped.
    constexpr int kMinDepth = 3;
    std::function<double(const Panel&, double, int)> seed = [&](const Panel& p, double t,
                                                                int level) -> double {
        if (level == 0) return simpson_step(f, p, t, max_depth);
        const double lm = 0.5 * (p.a + p.m);
        const double rm = 0.5 * (p.m + p.b);
        const double flm = f(lm), frm = f(rm);
        const double left = (p.m - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm);
        const double right = (p.b - p.m) / 6.0 * (p.fm + 4.0 * frm + p.fb);
        return seed({p.a, p.fa, lm, flm, p.m, p.fm, left}, 0.5 * t, level - 1) +
               seed({p.m, p.fm, rm, frm, p.b, p.fb, right}, 0.5 * t, level - 1);
    };
    return seed({a, fa, m, fm, b, fb, whole}, tol, kMinDepth);
}

double cubic_interpolate(std::span<const double> nodes, std::span<const double> values, double at) {
    const std::size_t n = nodes.size();
    if (n < 4 || values.size() != n) {
        throw GridMismatch("cubic interpolation needs at least 4 nodes with matching values");
    }
    at = std::clamp(at, nodes.front(), nodes.back());
    const auto upper = std::upper_bound(nodes.begin(), nodes.end(), at);
    std::size_t i = static_cast<std::size_t>(std::distance(nodes.begin(), upper));
    // Stencil [start, start + 4) centred on the bracketing interval.
    std::size_t start = i >= 2 ? i - 2 : 0;
    start = std::min(start, n - 4);

    double result = 0.0;
    for (std::size_t j = start; j < start + 4; ++j) {
        double weight = 1.0;
        for (std::size_t k = start; k < start + 4; ++k) {
            if (k != j) weight *= (at - nodes[k]) / (nodes[j] - nodes[k]);
        }
        result += weight * values[j];
    }
    return result;
}

}  // namespace pdem
