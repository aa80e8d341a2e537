#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pdem/errors.hpp"
#include "pdem/orderings.hpp"

using namespace pdem;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

bool near(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("compute_etas on hand-evaluated orderings") {
    const EtaPair bdd = compute_etas({0.0, -1.0, 0.0});
    CHECK(bdd.eta1 == 0.0);
    CHECK(bdd.eta2 == 0.0);

    const EtaPair quarter = compute_etas({-0.25, -0.5, -0.25});
    CHECK(quarter.eta1 == 7.0 / 16.0);
    CHECK(quarter.eta2 == -0.25);

    const EtaPair set1 = compute_etas({-(3.0 - kSqrt2) / 4.0, -0.5, (1.0 - kSqrt2) / 4.0});
    CHECK(near(set1.eta1, (13.0 - 4.0 * kSqrt2) / 16.0));
    CHECK(near(set1.eta1, 0.458947, 1e-6));
    CHECK(near(set1.eta2, -0.25));
}

TEST_CASE("check_constraints residuals") {
    const ConstraintReport bdd = check_constraints({0.0, -1.0, 0.0}, 1e-12);
    CHECK(bdd.von_roos_residual == 0.0);
    CHECK(bdd.eta1_residual == -7.0 / 16.0);
    CHECK(bdd.eta2_residual == 0.25);
    CHECK(bdd.flags().von_roos);
    CHECK(bdd.flags().symmetry);
    CHECK_FALSE(bdd.flags().isospectral());

    const ConstraintReport quarter = check_constraints({-0.25, -0.5, -0.25});
    CHECK(quarter.von_roos_residual == 0.0);
    CHECK(quarter.symmetry_residual == 0.0);
    CHECK(quarter.eta1_residual == 0.0);
    CHECK(quarter.eta2_residual == 0.0);
    CHECK(quarter.flags().isospectral());

    CHECK(check_constraints({0.0, 0.0, 0.0}).von_roos_residual == 1.0);
    CHECK_FALSE(check_constraints({0.0, 0.0, 0.0}).flags().von_roos);

    CHECK_THROWS_AS(check_constraints({0.0, -1.0, 0.0}, -1.0), DomainError);
}

TEST_CASE("tabulated solutions are the roots of 16 g^2 - 8 g - 1") {
    const auto sols = solve_isospectral_orderings(SolveMode::paper_table1);
    REQUIRE(sols.size() == 2);
    const Ordering expected[2] = {{-(3.0 - kSqrt2) / 4.0, -0.5, (1.0 - kSqrt2) / 4.0},
                                  {-(3.0 + kSqrt2) / 4.0, -0.5, (1.0 + kSqrt2) / 4.0}};
    for (int i = 0; i < 2; ++i) {
        const Ordering& o = sols[i].ordering;
        CHECK(o.beta == -0.5);
        CHECK(near(o.alpha, expected[i].alpha));
        CHECK(near(o.gamma, expected[i].gamma));
        CHECK(near(16.0 * o.gamma * o.gamma - 8.0 * o.gamma - 1.0, 0.0));
        CHECK(near(sols[i].report.von_roos_residual, 0.0));
        CHECK(near(sols[i].report.eta2_residual, 0.0));
        CHECK(sols[i].mode == SolveMode::paper_table1);
    }
    // The eta1 condition is not met by the tabulated roots.
    CHECK(near(sols[0].report.eta1_residual, (3.0 - 2.0 * kSqrt2) / 8.0));
    CHECK_FALSE(sols[0].report.flags().eta1);
}

TEST_CASE("direct solve agrees with a brute-force scan of the constraint surface") {
    const auto sols = solve_isospectral_orderings(SolveMode::direct);
    REQUIRE(sols.size() == 1);
    const Ordering& o = sols[0].ordering;
    CHECK(o == Ordering{-0.25, -0.5, -0.25});
    const ConstraintReport& r = sols[0].report;
    CHECK(near(r.von_roos_residual, 0.0));
    CHECK(near(r.symmetry_residual, 0.0));
    CHECK(near(r.eta1_residual, 0.0));
    CHECK(near(r.eta2_residual, 0.0));

    // Oracle: scan (alpha, gamma) with beta from the von Roos constraint.
    double best = 1e300, best_a = 0.0, best_g = 0.0;
    for (int i = 0; i <= 800; ++i) {
        for (int k = 0; k <= 800; ++k) {
            const double a = -2.0 + 0.005 * i;
            const double g = -2.0 + 0.005 * k;
            const double b = -1.0 - a - g;
            const double eta1 = 0.5 * (a * a + g * g + a * b + g * b - a - g);
            const double eta2 = 0.5 * (a + g);
            const double score = std::abs(eta1 - 7.0 / 16.0) + std::abs(eta2 + 0.25);
            if (score < best) {
                best = score;
                best_a = a;
                best_g = g;
            }
        }
    }
    CHECK(best < 1e-12);
    CHECK(near(best_a, o.alpha, 1e-9));
    CHECK(near(best_g, o.gamma, 1e-9));
}

TEST_CASE("both solver modes fix beta = -1/2") {
    for (SolveMode mode : {SolveMode::direct, SolveMode::paper_table1}) {
        for (const auto& s : solve_isospectral_orderings(mode)) CHECK(s.ordering.beta == -0.5);
    }
}

TEST_CASE("named ordering catalog") {
    CHECK(find_ordering("symmetric-quarter").ordering == Ordering{-0.25, -0.5, -0.25});
    CHECK(find_ordering("bendaniel-duke").ordering == Ordering{0.0, -1.0, 0.0});
    const Ordering set2 = find_ordering("table1-set2").ordering;
    CHECK(near(set2.alpha, -(3.0 + kSqrt2) / 4.0));
    CHECK(set2.beta == -0.5);
    CHECK(near(set2.gamma, (1.0 + kSqrt2) / 4.0));

    for (const auto& entry : named_orderings()) {
        CHECK(near(check_constraints(entry.ordering).von_roos_residual, 0.0, 1e-15));
    }

    try {
        find_ordering("weyl");
        FAIL("expected NotFound");
    } catch (const NotFound& e) {
        const std::string msg = e.what();
        CHECK(msg.find("weyl") != std::string::npos);
        CHECK(msg.find("bendaniel-duke") != std::string::npos);
        CHECK(msg.find("table1-set1") != std::string::npos);
    }
}

TEST_CASE("parse_ordering accepts names and triples") {
    CHECK(parse_ordering("bendaniel-duke") == Ordering{0.0, -1.0, 0.0});
    CHECK(parse_ordering("-0.25, -0.5,-0.25") == Ordering{-0.25, -0.5, -0.25});
    CHECK_THROWS_AS(parse_ordering("1,2"), ParseError);
    CHECK_THROWS_AS(parse_ordering("1,2,abc"), ParseError);
    CHECK_THROWS_AS(parse_ordering("nope"), NotFound);
    CHECK(parse_solve_mode("paper_table1") == SolveMode::paper_table1);
    CHECK_THROWS_AS(parse_solve_mode("other"), NotFound);
}

TEST_CASE("eta properties over random orderings") {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int i = 0; i < 1000; ++i) {
        const double a = dist(rng);
        // Half the samples sit on alpha + gamma = -1/2.
        const double g = (i % 2 == 0) ? -0.5 - a : dist(rng);
        const Ordering o{a, -1.0 - a - g, g};
        const EtaPair e = compute_etas(o);

        const Ordering swapped{o.gamma, o.beta, o.alpha};
        const EtaPair es = compute_etas(swapped);
        CHECK(e.eta1 == es.eta1);
        CHECK(e.eta2 == es.eta2);

        const double sum = o.alpha + o.gamma;
        CHECK(((e.eta2 + 0.25) == 0.0) == (sum == -0.5));
        if (i % 2 == 0) CHECK(near(e.eta2, -0.25, 1e-15));
    }
}
