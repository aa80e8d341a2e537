#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pdem {

using Complex = std::complex<double>;

/// Abrupt heterojunction at x = 0: mass m1 and potential 0 for x < 0, mass
/// m2 and potential V0 for x > 0 (hbar^2 = 2 units).
class StepJunction {
public:
    /// Throws NonPositiveMass unless both masses are positive, DomainError
    /// for a non-finite step.
    StepJunction(double m1, double m2, double v0);

    double m1() const noexcept { return m1_; }
    double m2() const noexcept { return m2_; }
    double v0() const noexcept { return v0_; }
    /// m2 / m1; unrelated to the ordering parameter alpha.
    double mass_ratio() const noexcept { return m2_ / m1_; }

private:
    double m1_;
    double m2_;
    double v0_;
};

struct Wavevectors {
    Complex k1;
    Complex k2;
};

/// k1 = sqrt(m1 E); k2 = sqrt(m2 (E - V0)), or i sqrt(m2 (V0 - E)) below the
/// step.  Throws NonPositiveEnergy for E <= 0.
Wavevectors wavevectors(const StepJunction& j, double energy);

/// Incident wave m1^(-1/4) e^{i k1 x}, reflected r m1^(-1/4) e^{-i k1 x},
/// transmitted t m2^(-1/4) e^{i k2 x}.
struct Amplitudes {
    Complex r;
    Complex t;
};

enum class MatchingRule {
    /// Continuity of psi and psi'/sqrt(m) across the junction.
    continuity,
    /// Diagnostic variant whose derivative row lacks the incident k1 factor:
    /// m1^(-3/4) (1 - r) = m2^(-3/4) k2 t.
    no_k1_factor,
};

/// Reflection and transmission amplitudes.  Throws DegenerateEnergy at
/// E = V0, NonPositiveEnergy for E <= 0.
///
/// With s = sqrt(E - V0) on the principal branch the continuity rule gives
///   r = (sqrt E - s) / (sqrt E + s),
///   t = (m2/m1)^(1/4) 2 sqrt E / (sqrt E + s).
Amplitudes match_amplitudes(const StepJunction& j, double energy,
                            MatchingRule rule = MatchingRule::continuity);

enum class TransmissionMode {
    /// R = 1, T = 0 below the step.
    physical,
    /// The absolute-value transmittivity formula evaluated as written at
    /// every energy, including below the step.
    literal,
};

std::string_view to_string(TransmissionMode mode) noexcept;
/// Accepts "physical" and "literal_eq25".
TransmissionMode parse_transmission_mode(std::string_view text);

struct ScatteringResult {
    double energy = 0.0;
    Complex k1;
    Complex k2;
    Complex r;
    Complex t;
    double reflectivity = 0.0;    // R = |r|^2
    double transmittivity = 0.0;  // T = 4 (m2/m1) sqrt(E(E - V0)) / (sqrt E + sqrt(E - V0))^2
    double r_plus_t_flux = 0.0;   // R + T; equals 1 only for m1 = m2
};

/// T is the mass-ratio weighted coefficient, (k2/k1)|t|^2, which exceeds
/// one for m2 > m1 and does not conserve R + T unless m1 = m2.
ScatteringResult scattering_coefficients(const StepJunction& j, double energy,
                                         TransmissionMode mode = TransmissionMode::physical);

enum class RowStatus { ok, degenerate_energy, non_positive_energy };

std::string_view to_string(RowStatus status) noexcept;

struct SpectrumRow {
    ScatteringResult result;
    RowStatus status = RowStatus::ok;
};

/// `count` uniformly spaced energies over [e_min, e_max], ascending.  An
/// energy that lands exactly on V0 is nudged up by half a step.  Per-row
/// failures are flagged, never thrown.  A single-energy sweep is allowed
/// with count = 1 and e_min = e_max.  Throws DomainError for an invalid
/// range.
std::vector<SpectrumRow> transmission_spectrum(const StepJunction& j, double e_min, double e_max,
                                               std::size_t count,
                                               TransmissionMode mode = TransmissionMode::physical);

struct HighEnergyCheck {
    double transmittivity = 0.0;
    double limit = 0.0;      // m2 / m1
    double deviation = 0.0;  // |T m1/m2 - 1|, about (V0/E)^2 / 16
};

/// At high energy T tends to m2/m1, not to one; the two agree only for
/// m1 = m2.  Requires E_probe > 10 V0 (E_probe > 0 when V0 <= 0); throws
/// DomainError otherwise.
HighEnergyCheck high_energy_limit_check(const StepJunction& j, double energy_probe);

}  // namespace pdem
