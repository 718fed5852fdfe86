#include <doctest.h>

#include "su11kc/spectrum.hpp"

#include <cmath>
#include <stdexcept>

using namespace su11kc;

TEST_CASE("s_of square roots") {
    CHECK(s_of(-1, 1e-9) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s_of(1, 1e-9) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s_of(-1, 0.5) == doctest::Approx(0.8660254037844386).epsilon(1e-12));
    CHECK(s_of(2, 0.5) == doctest::Approx(1.9364916731037085).epsilon(1e-12));
}

TEST_CASE("s_of domain guards") {
    CHECK_THROWS_AS(s_of(0, 0.5), std::domain_error);
    CHECK_THROWS_AS(s_of(-1, 1.0), std::domain_error);  // gamma = |k|
    CHECK_THROWS_AS(s_of(-1, 1.5), std::domain_error);
    CHECK_THROWS_AS(s_of(-1, 0.0), std::domain_error);
    CHECK_THROWS_AS(s_of(-1, -0.3), std::domain_error);
}

TEST_CASE("closed-form energies") {
    const SpectralParams ground = energy_of({-1, 0, 0.5, 1.0});
    CHECK(ground.energy == doctest::Approx(0.8660254037844386).epsilon(1e-12));
    // E(n=0) = s/|k|
    CHECK(ground.energy == doctest::Approx(ground.s / 1.0).epsilon(1e-13));

    CHECK(energy_of({-1, 1, 0.5, 1.0}).energy ==
          doctest::Approx(0.9659258262890683).epsilon(1e-12));

    // free limit: E -> m as gamma -> 0
    CHECK(energy_of({-1, 0, 1e-8, 1.0}).energy == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(energy_of({3, 2, 1e-8, 2.5}).energy == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("derived spectral parameters satisfy their couplings") {
    for (int k : {-3, -1, 1, 2}) {
        for (int n : {0, 1, 4}) {
            const QuantumNumbers q{k, n, 0.5, 1.0};
            const SpectralParams p = energy_of(q);
            CHECK(p.s * p.s + q.gamma * q.gamma ==
                  doctest::Approx(double(k) * k).epsilon(1e-12));
            CHECK(p.xi * p.xi ==
                  doctest::Approx(1.0 / (p.energy * p.energy) - 1.0).epsilon(1e-12));
            CHECK(p.nu * p.xi == doctest::Approx(q.gamma).epsilon(1e-12));
            CHECK(p.mu == doctest::Approx(p.s - 1.0));
            CHECK(p.energy > 0.0);
            CHECK(p.energy < q.mass);
            CHECK(p.alpha1 == doctest::Approx(q.mass + p.energy));
            CHECK(p.alpha2 == doctest::Approx(q.mass - p.energy));
        }
    }
}

TEST_CASE("spectrum degeneracy in the sign of k") {
    for (int n : {0, 1, 2, 7}) {
        for (int abs_k : {1, 2, 5}) {
            const double e_minus = energy_of({-abs_k, n, 0.77, 1.0}).energy;
            const double e_plus = energy_of({abs_k, n, 0.77, 1.0}).energy;
            CHECK(e_minus == e_plus);  // s depends on k only through k^2
        }
    }
}

TEST_CASE("relabeling (n, s) -> (n-1, s+1) leaves E fixed") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(component_match_check({-1, n, 0.5, 1.0}));
        CHECK(component_match_check({2, n, 0.9, 1.0}));
    }
    CHECK_THROWS_AS(component_match_check({-1, 0, 0.5, 1.0}), std::domain_error);

    // negative control: a mismatched pair (n_s = n, n_{s+1} = n) has E_s != E_{s+1}
    const double s = s_of(-1, 0.5);
    const int n = 2;
    const double e_s = 1.0 / std::sqrt(1.0 + 0.25 / ((n + s) * (n + s)));
    const double e_s1 = 1.0 / std::sqrt(1.0 + 0.25 / ((n + s + 1.0) * (n + s + 1.0)));
    CHECK(std::abs(e_s - e_s1) > 1e-4);
}

TEST_CASE("E increases with n at fixed k") {
    double prev = 0.0;
    for (int n = 0; n <= 10; ++n) {
        const double e = energy_of({-2, n, 0.9, 1.0}).energy;
        CHECK(e > prev);
        prev = e;
    }
}

TEST_CASE("nonrelativistic limit reproduces the Balmer form") {
    CHECK(nonrel_limit_check(1, -1, 1e-3) < 1e-2);
    CHECK(nonrel_limit_check(2, 1, 1e-3) < 1e-2);
    CHECK(nonrel_limit_check(3, -2, 1e-3) < 1e-2);
    // leading correction is O(gamma^2)
    CHECK(nonrel_limit_check(1, -1, 1e-3) < 10.0 * 1e-6);
    CHECK(nonrel_limit_check(1, -1, 1e-2) / nonrel_limit_check(1, -1, 1e-3) ==
          doctest::Approx(100.0).epsilon(0.05));
    CHECK_THROWS_AS(nonrel_limit_check(1, -1, 0.1), std::domain_error);
}

TEST_CASE("derived angular labels") {
    const QuantumNumbers q{-2, 1, 0.5, 1.0};
    CHECK(q.j_total() == 1.5);
    CHECK(q.principal() == 3);
    CHECK(QuantumNumbers{1, 0, 0.5, 1.0}.j_total() == 0.5);
}

TEST_CASE("state existence rule") {
    CHECK(state_exists(0, -1));
    CHECK(state_exists(0, -4));
    CHECK_FALSE(state_exists(0, 1));
    CHECK_FALSE(state_exists(0, 3));
    CHECK(state_exists(1, 1));
    CHECK(state_exists(5, 2));
}

TEST_CASE("level diagram layout") {
    SUBCASE("k_max=1, N_max=1: single dashed ground level at k=-1") {
        const DiagramData data = level_diagram(0.5, 1, 1);
        REQUIRE(data.levels.size() == 1);
        CHECK(data.levels[0].k == -1);
        CHECK(data.levels[0].n == 0);
        CHECK(data.levels[0].dashed);
    }

    SUBCASE("k=+1 column starts at N=2") {
        const DiagramData data = level_diagram(0.5, 2, 3);
        for (const DiagramLevel& level : data.levels) {
            if (level.k > 0) CHECK(level.N > std::abs(level.k));
            CHECK(level.dashed == (level.n == 0));
        }
    }

    SUBCASE("E strictly increasing in N at fixed k, and in |k| at fixed N") {
        const DiagramData data = level_diagram(0.5, 4, 8);
        for (const DiagramLevel& a : data.levels) {
            for (const DiagramLevel& b : data.levels) {
                if (a.k == b.k && a.N < b.N) CHECK(a.e_over_m < b.e_over_m);
                if (a.N == b.N && std::abs(a.k) < std::abs(b.k))
                    CHECK(a.e_over_m < b.e_over_m);
            }
        }
    }

    SUBCASE("arrow metadata present for the first column pair") {
        const DiagramData data = level_diagram(0.5, 1, 3);
        REQUIRE(data.arrows.size() == 6);
        bool saw_sigma = false, saw_xi = false, saw_susy = false;
        for (const DiagramArrow& arrow : data.arrows) {
            if (arrow.label[0] == 'S') {
                saw_sigma = true;
                CHECK(arrow.k_from == arrow.k_to);
                CHECK(arrow.k_from < 0);
            } else if (arrow.label[0] == 'X') {
                saw_xi = true;
                CHECK(arrow.k_from == arrow.k_to);
                CHECK(arrow.k_from > 0);
            } else {
                saw_susy = true;
                CHECK(arrow.k_from == -arrow.k_to);
                CHECK(arrow.N_from == arrow.N_to);
            }
        }
        CHECK(saw_sigma);
        CHECK(saw_xi);
        CHECK(saw_susy);
    }

    SUBCASE("domain guards") {
        CHECK_THROWS_AS(level_diagram(1.2, 2, 3), std::domain_error);
        CHECK_THROWS_AS(level_diagram(0.5, 0, 3), std::domain_error);
        CHECK_THROWS_AS(level_diagram(0.5, 21, 3), std::domain_error);
    }
}
