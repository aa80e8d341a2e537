#include "pdem/orderings.hpp"

#include <cmath>
#include <numbers>

#include "pdem/errors.hpp"
#include "pdem/text.hpp"

namespace pdem {

namespace {

constexpr double kEta1Target = 7.0 / 16.0;
constexpr double kEta2Target = -0.25;

// Beta implied by the von Roos constraint once alpha + gamma is pinned by
// the eta2 condition (eta2 = (alpha + gamma)/2).
constexpr double kSumAlphaGamma = 2.0 * kEta2Target;
constexpr double kIsospectralBeta = -1.0 - kSumAlphaGamma;

OrderingSolution make_solution(const Ordering& o, std::string exact, SolveMode mode) {
    return {o, check_constraints(o), std::move(exact), mode};
}

std::vector<OrderingSolution> solve_two_root() {
    // 16 g^2 - 8 g - 1 = 0  ->  g = (1 +- sqrt 2)/4,  alpha = -1/2 - g.
    constexpr double a = 16.0, b = -8.0, c = -1.0;
    const double root_disc = std::sqrt(b * b - 4.0 * a * c);
    const double g1 = (-b - root_disc) / (2.0 * a);
    const double g2 = (-b + root_disc) / (2.0 * a);

    std::vector<OrderingSolution> out;
    out.push_back(make_solution({-0.5 - g1, kIsospectralBeta, g1},
                                "alpha = -(3 - sqrt2)/4, beta = -1/2, gamma = (1 - sqrt2)/4",
                                SolveMode::paper_table1));
    out.push_back(make_solution({-0.5 - g2, kIsospectralBeta, g2},
                                "alpha = -(3 + sqrt2)/4, beta = -1/2, gamma = (1 + sqrt2)/4",
                                SolveMode::paper_table1));
    return out;
}

std::vector<OrderingSolution> solve_direct() {
    // With beta fixed and S = alpha + gamma fixed, the eta1 condition reads
    //   alpha^2 + gamma^2 = 2 eta1 - beta S + S,
    // so alpha and gamma are the roots of z^2 - S z + P with
    //   P = (S^2 - (alpha^2 + gamma^2)) / 2.
    const double s = kSumAlphaGamma;
    const double sum_sq = 2.0 * kEta1Target - kIsospectralBeta * s + s;
    const double p = 0.5 * (s * s - sum_sq);
    const double disc = s * s - 4.0 * p;

    std::vector<OrderingSolution> out;
    if (disc < -1e-15) {
        return out;
    }
    if (std::abs(disc) <= 1e-15) {
        const double z = 0.5 * s;
        out.push_back(make_solution({z, kIsospectralBeta, z},
                                    "alpha = gamma = -1/4, beta = -1/2 (double root of 16z^2 + 8z + 1)",
                                    SolveMode::direct));
        return out;
    }
    const double r = std::sqrt(disc);
    const double z1 = 0.5 * (s - r);
    const double z2 = 0.5 * (s + r);
    out.push_back(make_solution({z1, kIsospectralBeta, z2}, "", SolveMode::direct));
    out.push_back(make_solution({z2, kIsospectralBeta, z1}, "", SolveMode::direct));
    return out;
}

}  // namespace

ConstraintFlags ConstraintReport::flags() const noexcept {
    return {std::abs(von_roos_residual) <= tolerance, std::abs(symmetry_residual) <= tolerance,
            std::abs(eta1_residual) <= tolerance, std::abs(eta2_residual) <= tolerance};
}

EtaPair compute_etas(const Ordering& o) noexcept {
    // Grouped through alpha + gamma and alpha^2 + gamma^2 so that swapping
    // alpha and gamma gives bit-identical results.
    const double sum = o.alpha + o.gamma;
    const double sum_sq = o.alpha * o.alpha + o.gamma * o.gamma;
    return {0.5 * (sum_sq + o.beta * sum - sum), 0.5 * sum};
}

ConstraintReport check_constraints(const Ordering& o, double tol) {
    if (!(tol >= 0.0)) {
        throw DomainError("constraint tolerance must be non-negative");
    }
    const EtaPair etas = compute_etas(o);
    return {o.alpha + o.beta + o.gamma + 1.0, o.alpha - o.gamma, etas.eta1 - kEta1Target,
            etas.eta2 - kEta2Target, tol};
}

std::string_view to_string(SolveMode mode) noexcept {
    return mode == SolveMode::direct ? "direct" : "paper_table1";
}

SolveMode parse_solve_mode(std::string_view text) {
    if (text == "direct") return SolveMode::direct;
    if (text == "paper_table1") return SolveMode::paper_table1;
    throw NotFound("unknown ordering mode '" + std::string(text) +
                   "' (expected direct or paper_table1)");
}

std::vector<OrderingSolution> solve_isospectral_orderings(SolveMode mode) {
    return mode == SolveMode::direct ? solve_direct() : solve_two_root();
}

const std::vector<NamedOrdering>& named_orderings() {
    constexpr double sqrt2 = std::numbers::sqrt2;
    static const std::vector<NamedOrdering> catalog = {
        {"bendaniel-duke", {0.0, -1.0, 0.0}, "BenDaniel-Duke, p (1/m) p / 2; eta1 = eta2 = 0"},
        {"zhu-kroemer", {-0.5, 0.0, -0.5}, "Zhu-Kroemer, m^-1/2 p p m^-1/2"},
        {"li-kuhn", {0.0, -0.5, -0.5}, "Li-Kuhn"},
        {"gora-williams", {-1.0, 0.0, 0.0}, "Gora-Williams"},
        {"symmetric-quarter", {-0.25, -0.5, -0.25},
         "alpha = gamma = -1/4, beta = -1/2; removes the ordering term exactly"},
        {"table1-set1", {-(3.0 - sqrt2) / 4.0, -0.5, (1.0 - sqrt2) / 4.0},
         "alpha = -(3 - sqrt2)/4, beta = -1/2, gamma = (1 - sqrt2)/4"},
        {"table1-set2", {-(3.0 + sqrt2) / 4.0, -0.5, (1.0 + sqrt2) / 4.0},
         "alpha = -(3 + sqrt2)/4, beta = -1/2, gamma = (1 + sqrt2)/4"},
    };
    return catalog;
}

const NamedOrdering& find_ordering(std::string_view name) {
    const auto& catalog = named_orderings();
    for (const auto& entry : catalog) {
        if (entry.name == name) return entry;
    }
    std::string keys;
    for (const auto& entry : catalog) {
        if (!keys.empty()) keys += ", ";
        keys += entry.name;
    }
    throw NotFound("unknown ordering '" + std::string(name) + "'; available: " + keys);
}

Ordering parse_ordering(std::string_view text) {
    if (text.find(',') == std::string_view::npos) {
        return find_ordering(trim(text)).ordering;
    }
    const auto values = parse_number_list(text);
    if (values.size() != 3) {
        throw ParseError("ordering triple needs exactly three values alpha,beta,gamma", 0);
    }
    return {values[0], values[1], values[2]};
}

}  // namespace pdem
