#include "pdem/scattering.hpp"

#include <cmath>

#include "pdem/errors.hpp"
#include "pdem/text.hpp"

namespace pdem {

namespace {

void check_energy(const StepJunction& j, double energy) {
    if (!(energy > 0.0)) {
        throw NonPositiveEnergy("energy must be positive (E = " + format_number(energy) + ")");
    }
    if (energy == j.v0()) {
        throw DegenerateEnergy("E = V0 = " + format_number(energy) +
                               ": transmitted wavevector vanishes");
    }
}

// sqrt(E - V0) on the principal branch.
Complex excess_root(double energy, double v0) {
    const double excess = energy - v0;
    return excess >= 0.0 ? Complex(std::sqrt(excess), 0.0) : Complex(0.0, std::sqrt(-excess));
}

Amplitudes solve_2x2(const Complex (&a)[2][2], const Complex (&b)[2]) {
    const Complex det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    return {(b[0] * a[1][1] - a[0][1] * b[1]) / det, (a[0][0] * b[1] - b[0] * a[1][0]) / det};
}

}  // namespace

StepJunction::StepJunction(double m1, double m2, double v0) : m1_(m1), m2_(m2), v0_(v0) {
    if (!(m1 > 0.0) || !(m2 > 0.0) || !std::isfinite(m1) || !std::isfinite(m2)) {
        throw NonPositiveMass("junction masses must be positive and finite (m1 = " +
                              format_number(m1) + ", m2 = " + format_number(m2) + ")");
    }
    if (!std::isfinite(v0)) throw DomainError("junction step V0 must be finite");
}

Wavevectors wavevectors(const StepJunction& j, double energy) {
    if (!(energy > 0.0)) {
        throw NonPositiveEnergy("energy must be positive (E = " + format_number(energy) + ")");
    }
    const double excess = j.m2() * (energy - j.v0());
    return {Complex(std::sqrt(j.m1() * energy), 0.0),
            excess >= 0.0 ? Complex(std::sqrt(excess), 0.0) : Complex(0.0, std::sqrt(-excess))};
}

Amplitudes match_amplitudes(const StepJunction& j, double energy, MatchingRule rule) {
    check_energy(j, energy);
    const double root_e = std::sqrt(energy);
    const Complex s = excess_root(energy, j.v0());
    const double quarter_ratio = std::pow(j.mass_ratio(), 0.25);

    if (rule == MatchingRule::continuity) {
        const Complex sum = root_e + s;
        // sqrt E - s = V0 / (sqrt E + s) avoids cancellation at high energy.
        return {j.v0() / (sum * sum), quarter_ratio * 2.0 * root_e / sum};
    }

    // Rows: m1^(-1/4) (1 + r) = m2^(-1/4) t,
    //       m1^(-3/4) (1 - r) = m2^(-3/4) k2 t.
    const Complex k2 = wavevectors(j, energy).k2;
    const double a1 = std::pow(j.m1(), -0.25), b1 = std::pow(j.m2(), -0.25);
    const double a2 = std::pow(j.m1(), -0.75), b2 = std::pow(j.m2(), -0.75);
    const Complex matrix[2][2] = {{a1, -b1}, {-a2, -b2 * k2}};
    const Complex rhs[2] = {-a1, -a2};
    return solve_2x2(matrix, rhs);
}

std::string_view to_string(TransmissionMode mode) noexcept {
    return mode == TransmissionMode::physical ? "physical" : "literal_eq25";
}

TransmissionMode parse_transmission_mode(std::string_view text) {
    if (text == "physical") return TransmissionMode::physical;
    if (text == "literal_eq25") return TransmissionMode::literal;
    throw NotFound("unknown transmission mode '" + std::string(text) +
                   "' (expected physical or literal_eq25)");
}

ScatteringResult scattering_coefficients(const StepJunction& j, double energy,
                                         TransmissionMode mode) {
    check_energy(j, energy);
    const Wavevectors k = wavevectors(j, energy);
    const Amplitudes amp = match_amplitudes(j, energy);

    ScatteringResult out;
    out.energy = energy;
    out.k1 = k.k1;
    out.k2 = k.k2;
    out.r = amp.r;
    out.t = amp.t;

    const double root_e = std::sqrt(energy);
    const Complex s = excess_root(energy, j.v0());
    const bool above = energy > j.v0();
    if (above || mode == TransmissionMode::literal) {
        out.reflectivity = std::norm(amp.r);
        const double product = std::abs(std::sqrt(Complex(energy * (energy - j.v0()), 0.0)));
        out.transmittivity = 4.0 * j.mass_ratio() * product / std::norm(root_e + s);
    } else {
        out.reflectivity = 1.0;
        out.transmittivity = 0.0;
    }
    out.r_plus_t_flux = out.reflectivity + out.transmittivity;
    return out;
}

std::string_view to_string(RowStatus status) noexcept {
    switch (status) {
        case RowStatus::ok: return "ok";
        case RowStatus::degenerate_energy: return "degenerate_energy";
        case RowStatus::non_positive_energy: return "non_positive_energy";
    }
    return "unknown";
}

std::vector<SpectrumRow> transmission_spectrum(const StepJunction& j, double e_min, double e_max,
                                               std::size_t count, TransmissionMode mode) {
    const bool single = count == 1 && e_min == e_max;
    if (!std::isfinite(e_min) || !std::isfinite(e_max) || !(e_min > 0.0) ||
        !(single || (e_min < e_max && count >= 2))) {
        throw DomainError("energy sweep needs 0 < emin < emax and count >= 2 (or count = 1 with "
                          "emin = emax)");
    }

    const double step = single ? 0.0 : (e_max - e_min) / static_cast<double>(count - 1);
    std::vector<SpectrumRow> rows(count);
    for (std::size_t i = 0; i < count; ++i) {
        double energy = i + 1 == count ? e_max : e_min + step * static_cast<double>(i);
        if (energy == j.v0() && step > 0.0) energy += 0.5 * step;

        SpectrumRow& row = rows[i];
        row.result.energy = energy;
        try {
            row.result = scattering_coefficients(j, energy, mode);
        } catch (const DegenerateEnergy&) {
            row.status = RowStatus::degenerate_energy;
        } catch (const NonPositiveEnergy&) {
            row.status = RowStatus::non_positive_energy;
        }
        if (row.status != RowStatus::ok) {
            const double nan = std::nan("");
            row.result = ScatteringResult{energy, {nan, nan}, {nan, nan}, {nan, nan}, {nan, nan},
                                          nan, nan, nan};
        }
    }
    return rows;
}

HighEnergyCheck high_energy_limit_check(const StepJunction& j, double energy_probe) {
    const double floor = j.v0() > 0.0 ? 10.0 * j.v0() : 0.0;
    if (!(energy_probe > floor)) {
        throw DomainError("high-energy probe needs E > " + format_number(floor) + " (got " +
                          format_number(energy_probe) + ")");
    }
    const ScatteringResult res = scattering_coefficients(j, energy_probe);
    HighEnergyCheck out;
    out.transmittivity = res.transmittivity;
    out.limit = j.mass_ratio();
    out.deviation = std::abs(res.transmittivity / out.limit - 1.0);
    return out;
}

}  // namespace pdem
