#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pdem/expression.hpp"

namespace pdem {

using RealFunction = std::function<double(double)>;

/// Strictly positive effective mass m(x) on [lo, hi], in units of a
/// reference mass.
///
/// Derivatives come from the supplied closed forms when available,
/// otherwise from central differences with step h = 1e-5 (1 + |x|).
/// Between the listed discontinuity points m is assumed twice
/// differentiable.  Instances are immutable and safe to share.
class MassProfile {
public:
    static MassProfile analytic(RealFunction m, RealFunction dm, RealFunction d2m, double lo,
                                double hi, std::vector<double> discontinuities = {});
    static MassProfile sampled(RealFunction m, double lo, double hi,
                               std::vector<double> discontinuities = {});
    static MassProfile from_expression(const Expression& m, double lo, double hi);
    static MassProfile constant(double m, double lo, double hi);
    /// m1 for x < 0, m2 for x >= 0, with a listed discontinuity at 0.
    static MassProfile step(double m1, double m2, double lo, double hi);

    /// Throws DomainError outside [lo, hi] and NonPositiveMass if m(x) <= 0.
    double value(double x) const;
    double first_derivative(double x) const;
    double second_derivative(double x) const;

    /// Throws NonPositiveMass at the first grid node where m <= 0.
    void check_positive(std::span<const double> grid) const;

    bool is_discontinuity(double x) const noexcept;
    bool has_analytic_derivatives() const noexcept { return static_cast<bool>(dm_); }
    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    const std::vector<double>& discontinuities() const noexcept { return discontinuities_; }

    /// Scaled copy c * m(x); c must be positive.
    MassProfile scaled(double c) const;

private:
    MassProfile(RealFunction m, RealFunction dm, RealFunction d2m, double lo, double hi,
                std::vector<double> discontinuities);

    double checked(double x, double m) const;
    void check_domain(double x) const;

    RealFunction m_;
    RealFunction dm_;
    RealFunction d2m_;
    double lo_;
    double hi_;
    std::vector<double> discontinuities_;
};

/// Potential V(x) on the same kind of domain as the mass.
class PotentialProfile {
public:
    PotentialProfile(RealFunction v, double lo, double hi, std::vector<double> discontinuities = {});
    static PotentialProfile from_expression(const Expression& v, double lo, double hi);
    static PotentialProfile constant(double v, double lo, double hi);
    /// V0 for x >= 0, zero to the left.
    static PotentialProfile step(double v0, double lo, double hi);

    /// Throws DomainError outside [lo, hi] or for a non-finite value.
    double value(double x) const;

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    const std::vector<double>& discontinuities() const noexcept { return discontinuities_; }

private:
    RealFunction v_;
    double lo_;
    double hi_;
    std::vector<double> discontinuities_;
};

struct NamedProfile {
    std::string name;
    std::string expression;
};

/// Smooth built-in mass profiles, each given as an expression in x.
const std::vector<NamedProfile>& named_mass_profiles();
/// Built-in potentials.
const std::vector<NamedProfile>& named_potentials();

/// Resolves a built-in name first, then parses `text` as an expression.
Expression resolve_mass_expression(std::string_view text);
Expression resolve_potential_expression(std::string_view text);

}  // namespace pdem
