#include <doctest.h>

#include <cmath>
#include <vector>

#include "pdem/errors.hpp"
#include "pdem/numerics.hpp"

using namespace pdem;

TEST_CASE("adaptive Simpson on closed-form integrals") {
    CHECK(std::abs(adaptive_simpson([](double s) { return 1.0 + s; }, 0.0, 2.0) - 4.0) < 1e-12);
    CHECK(std::abs(adaptive_simpson([](double s) { return std::exp(s); }, 0.0, 1.0) -
                   (std::exp(1.0) - 1.0)) < 1e-10);
    const double lorentz = adaptive_simpson([](double s) { return 1.0 / (1.0 + s * s); }, -50, 50);
    CHECK(std::abs(lorentz - 2.0 * std::atan(50.0)) < 1e-10);
    CHECK(adaptive_simpson([](double) { return 1.0; }, 3.0, 1.0) == doctest::Approx(-2.0));
    CHECK(adaptive_simpson([](double) { return 1.0; }, 1.0, 1.0) == 0.0);
}

TEST_CASE("adaptive Simpson resolves a narrow peak") {
    auto peak = [](double s) { return std::exp(-1e4 * (s - 0.37) * (s - 0.37)); };
    CHECK(std::abs(adaptive_simpson(peak, 0.0, 1.0) - std::sqrt(M_PI / 1e4)) < 1e-10);
}

TEST_CASE("cubic interpolation is exact for cubics on non-uniform nodes") {
    const std::vector<double> nodes = {0.0, 0.1, 0.35, 0.5, 0.9, 1.4, 2.0};
    std::vector<double> values;
    auto cubic = [](double x) { return 2.0 - x + 0.5 * x * x - 0.25 * x * x * x; };
    for (double x : nodes) values.push_back(cubic(x));
    for (double x : {0.0, 0.05, 0.4, 0.77, 1.3, 1.99, 2.0}) {
        CHECK(cubic_interpolate(nodes, values, x) == doctest::Approx(cubic(x)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(cubic_interpolate(std::vector<double>{0, 1, 2}, std::vector<double>{0, 1, 2}, 1),
                    GridMismatch);
}
