#include "pdem/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "pdem/errors.hpp"
#include "pdem/text.hpp"

namespace pdem {

namespace {

double fd_step(double x) { return 1e-5 * (1.0 + std::abs(x)); }

// Slack for grid nodes computed as lo + i*h that land a rounding error past hi.
bool inside(double x, double lo, double hi) {
    const double slack = 1e-12 * (1.0 + std::max(std::abs(lo), std::abs(hi)));
    return x >= lo - slack && x <= hi + slack;
}

void check_interval(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        throw DomainError("profile domain must satisfy lo < hi (got [" + format_number(lo) + ", " +
                          format_number(hi) + "])");
    }
}

Expression resolve(std::string_view text, const std::vector<NamedProfile>& catalog) {
    const std::string_view key = trim(text);
    for (const auto& entry : catalog) {
        if (entry.name == key) return Expression::parse(entry.expression);
    }
    return Expression::parse(key);
}

}  // namespace

MassProfile::MassProfile(RealFunction m, RealFunction dm, RealFunction d2m, double lo, double hi,
                         std::vector<double> discontinuities)
    : m_(std::move(m)),
      dm_(std::move(dm)),
      d2m_(std::move(d2m)),
      lo_(lo),
      hi_(hi),
      discontinuities_(std::move(discontinuities)) {
    check_interval(lo_, hi_);
    std::sort(discontinuities_.begin(), discontinuities_.end());
}

MassProfile MassProfile::analytic(RealFunction m, RealFunction dm, RealFunction d2m, double lo,
                                  double hi, std::vector<double> discontinuities) {
    return MassProfile(std::move(m), std::move(dm), std::move(d2m), lo, hi,
                       std::move(discontinuities));
}

MassProfile MassProfile::sampled(RealFunction m, double lo, double hi,
                                 std::vector<double> discontinuities) {
    return MassProfile(std::move(m), {}, {}, lo, hi, std::move(discontinuities));
}

MassProfile MassProfile::from_expression(const Expression& m, double lo, double hi) {
    const Expression dm = m.derivative();
    const Expression d2m = dm.derivative();
    return analytic(m, dm, d2m, lo, hi);
}

MassProfile MassProfile::constant(double m, double lo, double hi) {
    return from_expression(Expression::constant(m), lo, hi);
}

MassProfile MassProfile::step(double m1, double m2, double lo, double hi) {
    auto zero = [](double) { return 0.0; };
    return analytic([m1, m2](double x) { return x < 0.0 ? m1 : m2; }, zero, zero, lo, hi, {0.0});
}

void MassProfile::check_domain(double x) const {
    if (!inside(x, lo_, hi_)) {
        throw DomainError("x = " + format_number(x) + " outside mass domain [" + format_number(lo_) +
                          ", " + format_number(hi_) + "]");
    }
}

double MassProfile::checked(double x, double m) const {
    if (!(m > 0.0)) {
        throw NonPositiveMass("mass m(" + format_number(x) + ") = " + format_number(m) +
                              " is not positive");
    }
    return m;
}

double MassProfile::value(double x) const {
    check_domain(x);
    return checked(x, m_(x));
}

double MassProfile::first_derivative(double x) const {
    check_domain(x);
    if (dm_) return dm_(x);
    const double h = fd_step(x);
    return (checked(x + h, m_(x + h)) - checked(x - h, m_(x - h))) / (2.0 * h);
}

double MassProfile::second_derivative(double x) const {
    check_domain(x);
    if (d2m_) return d2m_(x);
    const double h = fd_step(x);
    return (checked(x + h, m_(x + h)) - 2.0 * checked(x, m_(x)) + checked(x - h, m_(x - h))) /
           (h * h);
}

void MassProfile::check_positive(std::span<const double> grid) const {
    for (double x : grid) value(x);
}

bool MassProfile::is_discontinuity(double x) const noexcept {
    return std::any_of(discontinuities_.begin(), discontinuities_.end(), [x](double d) {
        return std::abs(x - d) <= 1e-14 * (1.0 + std::abs(d));
    });
}

MassProfile MassProfile::scaled(double c) const {
    if (!(c > 0.0)) throw NonPositiveMass("mass scale factor must be positive");
    RealFunction dm, d2m;
    if (dm_) {
        dm = [f = dm_, c](double x) { return c * f(x); };
        d2m = [f = d2m_, c](double x) { return c * f(x); };
    }
    return MassProfile([f = m_, c](double x) { return c * f(x); }, std::move(dm), std::move(d2m),
                       lo_, hi_, discontinuities_);
}

PotentialProfile::PotentialProfile(RealFunction v, double lo, double hi,
                                   std::vector<double> discontinuities)
    : v_(std::move(v)), lo_(lo), hi_(hi), discontinuities_(std::move(discontinuities)) {
    check_interval(lo_, hi_);
}

PotentialProfile PotentialProfile::from_expression(const Expression& v, double lo, double hi) {
    return PotentialProfile(v, lo, hi);
}

PotentialProfile PotentialProfile::constant(double v, double lo, double hi) {
    return PotentialProfile([v](double) { return v; }, lo, hi);
}

PotentialProfile PotentialProfile::step(double v0, double lo, double hi) {
    return PotentialProfile([v0](double x) { return x < 0.0 ? 0.0 : v0; }, lo, hi, {0.0});
}

double PotentialProfile::value(double x) const {
    if (!inside(x, lo_, hi_)) {
        throw DomainError("x = " + format_number(x) + " outside potential domain [" +
                          format_number(lo_) + ", " + format_number(hi_) + "]");
    }
    const double v = v_(x);
    if (!std::isfinite(v)) {
        throw DomainError("potential V(" + format_number(x) + ") is not finite");
    }
    return v;
}

const std::vector<NamedProfile>& named_mass_profiles() {
    static const std::vector<NamedProfile> catalog = {
        {"unit", "1"},
        {"lorentzian", "1 + 1/(1 + x^2)"},
        {"exponential", "exp(2*x)"},
        {"quadratic", "(1 + x)^2"},
        {"sech2", "1 + 0.5*sech(x)^2"},
        {"gaussian", "1 + 0.5*exp(-x^2)"},
        {"tanh-ramp", "1.5 + 0.5*tanh(x)"},
    };
    return catalog;
}

const std::vector<NamedProfile>& named_potentials() {
    static const std::vector<NamedProfile> catalog = {
        {"free", "0"},
        {"harmonic", "x^2"},
    };
    return catalog;
}

Expression resolve_mass_expression(std::string_view text) {
    return resolve(text, named_mass_profiles());
}

Expression resolve_potential_expression(std::string_view text) {
    return resolve(text, named_potentials());
}

}  // namespace pdem
