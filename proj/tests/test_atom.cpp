#include "qes/atom.hpp"
#include "qes/oracle.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <set>

using namespace qes;

namespace {

// Laplace expansion along the first row; independent of the continuant recurrence.
double cofactor_determinant(const Eigen::MatrixXd& m) {
    const auto n = m.rows();
    if (n == 1) return m(0, 0);
    double det = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        if (m(0, j) == 0.0) continue;
        Eigen::MatrixXd minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r)
            for (Eigen::Index c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        det += (j % 2 == 0 ? 1.0 : -1.0) * m(0, j) * cofactor_determinant(minor);
    }
    return det;
}

std::vector<double> log_radii(double b, int count) {
    std::vector<double> out;
    for (int i = 0; i < count; ++i) out.push_back(b * 1e-3 * std::pow(6.0 / 1e-3, i / (count - 1.0)));
    return out;
}

}  // namespace

TEST_CASE("Jacobi-style coordinates") {
    const auto mass = NucleusMass::finite(4.0);
    SUBCASE("origin") {
        const auto j = atom::jacobi_transform(Vec3::Zero(), Vec3::Zero(), Vec3::Zero(), mass);
        CHECK(j.R.norm() == 0.0);
        CHECK(j.S.norm() == 0.0);
        CHECK(j.r.norm() == 0.0);
    }
    SUBCASE("symmetric electrons about the nucleus") {
        const auto j = atom::jacobi_transform(Vec3(1, 0, 0), Vec3(-1, 0, 0), Vec3::Zero(), mass);
        CHECK(j.R.norm() == 0.0);
        CHECK(j.S.norm() == 0.0);
        CHECK(j.r.x() == doctest::Approx(std::sqrt(2.0)));
        CHECK(j.r.y() == 0.0);
    }
    SUBCASE("potential arguments on random configurations") {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        for (int i = 0; i < 100; ++i) {
            const Vec3 r1(u(rng), u(rng), u(rng)), r2(u(rng), u(rng), u(rng)), r3(u(rng), u(rng), u(rng));
            const auto j = atom::jacobi_transform(r1, r2, r3, mass);
            CHECK((j.S + j.r).norm() / std::sqrt(2.0) == doctest::Approx((r1 - r3).norm()).epsilon(1e-14));
            CHECK((j.S - j.r).norm() / std::sqrt(2.0) == doctest::Approx((r2 - r3).norm()).epsilon(1e-14));
            CHECK(std::sqrt(2.0) * j.r.norm() == doctest::Approx((r1 - r2).norm()).epsilon(1e-14));
            CHECK((j.R - (r1 + r2 + 4.0 * r3) / 6.0).norm() < 1e-14);
        }
    }
    SUBCASE("infinite nucleus mass pins the center of mass to the nucleus") {
        const Vec3 r3(0.3, -1.0, 2.0);
        const auto j = atom::jacobi_transform(Vec3(1, 2, 3), Vec3(-1, 0, 4), r3, NucleusMass::infinite());
        CHECK((j.R - r3).norm() == 0.0);
    }
}

TEST_CASE("relative potential") {
    const AtomParameters atom{1.0, 1.0, 26.0};
    CHECK(relative_potential(0.0, atom) == doctest::Approx(13.0));
    CHECK(relative_potential(1.0, atom) == doctest::Approx(7.0));
    const AtomParameters free{1.7, 0.4, 0.0};
    CHECK(relative_potential(1.3, free) == doctest::Approx(1.3 * 1.3 / (2.0 * std::pow(1.7, 4))));
    for (double r : {0.0, 0.3, 1.0, 2.5}) {
        const AtomParameters a{1.2, 0.8, 9.0};
        CHECK(electron_interaction(std::sqrt(2.0) * r, a) == doctest::Approx(0.5 * a.g / (r * r + a.d * a.d)));
    }
}

TEST_CASE("quantized energy") {
    CHECK(atom::quantized_energy(1, 0, 1.0) == 5.5);
    CHECK(atom::quantized_energy(2, 0, 1.0) == 7.5);
    CHECK(atom::quantized_energy(1, 1, 2.0) == 13.0 / 8.0);
    CHECK_THROWS_AS(atom::quantized_energy(0, 0, 1.0), DomainError);
}

TEST_CASE("Heun parameters of the radial problem") {
    const auto p = atom::heun_parameters(AtomParameters{1.0, 1.0, 26.0}, 0, 5.5);
    CHECK(p.alpha() == 1.0);
    CHECK(p.beta() == 0.5);
    CHECK(p.gamma() == 1.0);
    CHECK(p.delta() == doctest::Approx(-11.0 / 4.0));
    CHECK(p.eta() == doctest::Approx(-13.0 / 4.0));
    CHECK(p.mu() == doctest::Approx(3.0));
    CHECK(p.nu() == doctest::Approx(-4.0));
    CHECK(atom::heun_parameters(AtomParameters{1.0, 1.0, 12.0}, 0, 5.5).mu() == doctest::Approx(-0.5));

    // g = k^2 d^2 with d^2 = 2 b^2
    const double b = 1.3, d = std::sqrt(2.0) * b, e = 2.1;
    const auto q = atom::heun_parameters(AtomParameters{b, d, 2.0 * e * d * d}, 0, e);
    CHECK(q.eta() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std::abs(q.mu()) < 1e-14);

    CHECK_THROWS_AS(atom::heun_parameters(AtomParameters{-1.0, 1.0, 1.0}, 0, 1.0), DomainError);
}

TEST_CASE("termination matrix reproduces the N = 1 and N = 2 determinants") {
    for (double mu : {-1.3, 0.0, 2.7}) {
        const auto m1 = atom::termination_matrix(1, 0, 1.0, mu);
        Eigen::Matrix2d e1;
        e1 << mu, 1.5, 1.0, 1.0 + mu - 3.5;
        CHECK((m1 - e1).norm() == 0.0);

        const auto m2 = atom::termination_matrix(2, 0, 1.0, mu);
        Eigen::Matrix3d e2;
        e2 << mu, 1.5, 0.0, 2.0, 1.0 + mu - 3.5, 5.0, 0.0, 1.0, 2.0 + mu - 9.0;
        CHECK((m2 - e2).norm() == 0.0);
    }
    // General l_r and d/b against the printed N = 2 layout.
    const double a = 0.49, l = 3.0, mu = 0.8;
    const auto m = atom::termination_matrix(2, 3, 0.7, mu);
    CHECK(m(0, 0) == doctest::Approx(mu));
    CHECK(m(0, 1) == doctest::Approx(l + 1.5));
    CHECK(m(1, 0) == doctest::Approx(2.0 * a));
    CHECK(m(1, 1) == doctest::Approx(a + mu - l - 3.5));
    CHECK(m(1, 2) == doctest::Approx(2.0 * l + 5.0));
    CHECK(m(2, 1) == doctest::Approx(a));
    CHECK(m(2, 2) == doctest::Approx(2.0 * a + mu - 2.0 * l - 9.0));
}

TEST_CASE("termination determinant: recurrence, cofactor expansion and polynomial agree") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> mu(-20.0, 20.0), ratio(0.2, 3.0);
    for (int i = 0; i < 50; ++i) {
        const int N = 1 + i % 4, l = i % 3;
        const double r = ratio(rng), m = mu(rng);
        const double cof = cofactor_determinant(atom::termination_matrix(N, l, r, m));
        const double rec = atom::termination_determinant(N, l, r, m);
        const double poly = atom::termination_polynomial(N, l, r)(m);
        const double scale = std::max(1.0, std::abs(cof));
        CHECK(std::abs(rec - cof) <= 1e-12 * scale);
        CHECK(std::abs(poly - cof) <= 1e-11 * scale);
        CHECK(atom::termination_polynomial(N, l, r).degree() == N + 1);
    }
}

TEST_CASE("solve_g") {
    SUBCASE("N = 1, l_r = 0, d/b = 1") {
        const auto g = atom::solve_g(1, 0, 1.0, 1.0);
        REQUIRE(g.size() == 2);
        CHECK(std::abs(g[0] - 12.0) < 1e-10);
        CHECK(std::abs(g[1] - 26.0) < 1e-10);
    }
    // Reference roots from exact symbolic determinants.
    SUBCASE("N = 2, l_r = 0") {
        const auto g = atom::solve_g(2, 0, 1.0, 1.0);
        REQUIRE(g.size() == 3);
        CHECK(g[0] == doctest::Approx(13.874580313012219358).epsilon(1e-12));
        CHECK(g[1] == doctest::Approx(28.206711029386899121).epsilon(1e-12));
        CHECK(g[2] == doctest::Approx(49.918708657600881522).epsilon(1e-12));
    }
    SUBCASE("N = 1, l_r = 1") {
        const auto g = atom::solve_g(1, 1, 1.0, 1.0);
        REQUIRE(g.size() == 2);
        CHECK(g[0] == doctest::Approx(15.566018867943396189).epsilon(1e-12));
        CHECK(g[1] == doctest::Approx(34.433981132056603811).epsilon(1e-12));
    }
    SUBCASE("N = 3") {
        const auto g0 = atom::solve_g(3, 0, 1.0, 1.0);
        const std::vector<double> ref0{15.630566921217118983, 30.443898069901715134, 52.049183355697859837,
                                       81.876351653183306045};
        const auto g1 = atom::solve_g(3, 1, 1.0, 1.0);
        const std::vector<double> ref1{18.493120662333077523, 38.330084054878220598, 64.566707285648344600,
                                       98.610087997140357279};
        REQUIRE(g0.size() == 4);
        REQUIRE(g1.size() == 4);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(g0[i] == doctest::Approx(ref0[i]).epsilon(1e-12));
            CHECK(g1[i] == doctest::Approx(ref1[i]).epsilon(1e-12));
        }
    }
    SUBCASE("roots depend on d/b only") {
        const auto a = atom::solve_g(2, 1, 1.0, 0.6);
        const auto b = atom::solve_g(2, 1, 3.5, 2.1);
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
    }
    SUBCASE("N + 1 real, distinct roots for random shapes") {
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> ratio(0.05, 20.0);
        for (int i = 0; i < 60; ++i) {
            const int N = 1 + i % 5, l = i % 3;
            const auto g = atom::solve_g(N, l, 1.0, ratio(rng));
            REQUIRE(g.size() == static_cast<std::size_t>(N + 1));
            for (std::size_t k = 1; k < g.size(); ++k) CHECK(g[k] > g[k - 1]);
        }
    }
    SUBCASE("invalid input") {
        CHECK_THROWS_AS(atom::solve_g(0, 0, 1.0, 1.0), DomainError);
        CHECK_THROWS_AS(atom::solve_g(1, 0, 0.0, 1.0), DomainError);
        CHECK_THROWS_AS(atom::solve_g(1, -1, 1.0, 1.0), DomainError);
    }
}

TEST_CASE("N = 2 roots host an oracle eigenvalue at E_r = 15/2") {
    for (double g : atom::solve_g(2, 0, 1.0, 1.0)) {
        const auto spectrum = oracle::radial_eigensolve(AtomParameters{1.0, 1.0, g}, 0, oracle::RadialGrid{}, 3);
        double best = 1e9;
        for (const auto& s : spectrum.states) best = std::min(best, std::abs(s.eigenvalue - 7.5));
        CAPTURE(g);
        CHECK(best / 7.5 < 1e-4);
    }
}

TEST_CASE("radial solutions for the two N = 1 roots") {
    const auto gs = atom::radial_solution(1, 0, 1.0, 1.0, 26.0);
    const auto ex = atom::radial_solution(1, 0, 1.0, 1.0, 12.0);
    CHECK(gs.n_r == 0);
    CHECK(ex.n_r == 1);
    CHECK(gs.coefficients[1] == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(ex.coefficients[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(gs.energy_r == 5.5);

    // Normalization constants from closed-form Gaussian moments.
    CHECK(gs.normalization == doctest::Approx(0.070620898010300541950).epsilon(1e-12));
    CHECK(ex.normalization == doctest::Approx(0.88278662796397674259).epsilon(1e-12));

    for (double r : {0.0, 0.4, 1.0, 2.2, 4.0}) {
        const double g26 = (1 + r * r) * (1 + 2 * r * r) * std::exp(-r * r / 2);
        const double g12 = (1 + r * r) * (1 - r * r / 3) * std::exp(-r * r / 2);
        CHECK(gs(r) == doctest::Approx(gs.normalization * g26).epsilon(1e-13));
        CHECK(ex(r) == doctest::Approx(ex.normalization * g12).epsilon(1e-13));
    }
    CHECK(std::abs(ex(std::sqrt(3.0))) < 1e-15);
    CHECK(ex(std::sqrt(3.0) - 1e-3) > 0.0);
    CHECK(ex(std::sqrt(3.0) + 1e-3) < 0.0);

    CHECK_THROWS_AS(atom::radial_solution(1, 0, 1.0, 1.0, 20.0), DomainError);
    CHECK_THROWS_AS(atom::radial_solution(2, 0, 1.0, 1.0, 26.0), DomainError);
}

TEST_CASE("every solution satisfies the radial equation") {
    for (double ratio : {0.5, 1.0, 2.0}) {
        for (int l = 0; l <= 2; ++l) {
            for (int N = 1; N <= 3; ++N) {
                const double b = 1.4, d = ratio * b;
                for (double g : atom::solve_g(N, l, b, d)) {
                    const auto sol = atom::radial_solution(N, l, b, d, g);
                    double worst = 0.0;
                    for (double r : log_radii(b, 50)) worst = std::max(worst, sol.ode_residual(r));
                    CAPTURE(N);
                    CAPTURE(l);
                    CAPTURE(ratio);
                    CHECK(worst < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("off-root coupling violates the radial equation") {
    auto sol = atom::radial_solution(1, 0, 1.0, 1.0, 26.0);
    sol.atom.g = 26.5;
    double worst = 0.0;
    for (double r : log_radii(1.0, 50)) worst = std::max(worst, sol.ode_residual(r));
    CHECK(worst > 1e-3);
}

TEST_CASE("node counts enumerate 0..N once per class") {
    for (int l = 0; l <= 1; ++l) {
        for (int N = 1; N <= 3; ++N) {
            std::multiset<int> nodes;
            for (double g : atom::solve_g(N, l, 1.0, 1.0)) {
                const auto sol = atom::radial_solution(N, l, 1.0, 1.0, g);
                CHECK(sol.n_r >= 0);
                CHECK(sol.n_r <= N);
                nodes.insert(sol.n_r);
            }
            for (int k = 0; k <= N; ++k) CHECK(nodes.count(k) == 1);
        }
    }
}

TEST_CASE("positive root counting") {
    CHECK(atom::count_positive_roots(Polynomial({1.0, -2.0, 1.0})) == 1);  // (z - 1)^2
    CHECK(atom::count_positive_roots(Polynomial({2.0, -3.0, 1.0})) == 2);  // (z - 1)(z - 2)
    CHECK(atom::count_positive_roots(Polynomial({1.0, 0.0, 1.0})) == 0);   // complex pair
    CHECK(atom::count_positive_roots(Polynomial({1.0})) == 0);
}

TEST_CASE("normalization") {
    const auto sol = atom::radial_solution(2, 1, 0.8, 1.1, atom::solve_g(2, 1, 0.8, 1.1)[1]);
    const double norm = oracle::quadrature([&](double r) { return sol(r) * sol(r) * r * r; }, 0.0, oracle::infinity);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-11));

    const auto again = atom::normalize_radial(sol);
    CHECK(std::abs(again.normalization - sol.normalization) <= 1e-13 * sol.normalization);

    auto scaled = sol;
    scaled.normalization *= 3.7;
    const auto renormalized = atom::normalize_radial(scaled);
    for (double r : {0.1, 0.9, 2.0}) CHECK(renormalized(r) == doctest::Approx(sol(r)).epsilon(1e-13));
}

TEST_CASE("short-range behaviour R ~ r^l") {
    for (int l = 0; l <= 3; ++l) {
        const double g = atom::solve_g(1, l, 1.0, 1.0)[0];
        const auto sol = atom::radial_solution(1, l, 1.0, 1.0, g);
        const double c1 = sol(1e-4) / std::pow(1e-4, l);
        const double c2 = sol(1e-6) / std::pow(1e-6, l);
        CHECK(std::abs(c1) > 1e-3);
        CHECK(c1 == doctest::Approx(c2).epsilon(1e-7));
    }
}

TEST_CASE("symmetry classification") {
    CHECK(atom::classify_symmetry(0) == atom::Symmetry::Singlet);
    CHECK(atom::classify_symmetry(1) == atom::Symmetry::Triplet);
    CHECK(atom::classify_symmetry(4) == atom::Symmetry::Singlet);
    CHECK_THROWS_AS(atom::classify_symmetry(-1), DomainError);
}

TEST_CASE("energy assembly") {
    const auto inf = NucleusMass::infinite();
    CHECK(atom::assemble_total_energy(Vec3::Zero(), inf, 1.0, 0, 0, 5.5) == 7.0);
    CHECK(atom::assemble_total_energy(Vec3::Zero(), inf, 1.0, 1, 0, 0.0) == 3.5);
    CHECK(atom::center_of_mass_energy(Vec3(2, 0, 0), NucleusMass::finite(2.0)) == doctest::Approx(0.5));
    CHECK(atom::center_of_mass_energy(Vec3(2, 0, 0), inf) == 0.0);

    const Vec3 K(0.3, -0.2, 0.5);
    const auto M = NucleusMass::finite(7.0);
    CHECK(atom::assemble_total_energy(K, M, 1.3, 2, 1, 4.2) ==
          doctest::Approx(atom::center_of_mass_energy(K, M) + atom::pseudorelative_energy(M, 1.3, 2, 1) + 4.2));

    double previous = 1e300;
    for (double m : {1.0, 10.0, 100.0, 1e4, 1e8}) {
        const double e = atom::pseudorelative_energy(NucleusMass::finite(m), 1.0, 0, 0);
        CHECK(e > 1.5);
        CHECK(e < previous);
        previous = e;
    }
    CHECK(atom::pseudorelative_energy(inf, 1.0, 0, 0) == 1.5);

    atom::QuantumNumbers q;
    q.l_r = 1;
    q.m_r = -1;
    CHECK_NOTHROW(q.validate());
    q.m_r = 2;
    CHECK_THROWS_AS(q.validate(), DomainError);
    CHECK_THROWS_AS(NucleusMass::finite(-1.0), DomainError);
}

TEST_CASE("oracle eigenpairs match every exact solution") {
    for (int l = 0; l <= 1; ++l) {
        for (int N = 1; N <= 3; ++N) {
            for (double g : atom::solve_g(N, l, 1.0, 1.0)) {
                const auto sol = atom::radial_solution(N, l, 1.0, 1.0, g);
                double previous_l2 = 1e300;
                for (std::size_t points : {1000u, 2000u, 4000u}) {
                    const oracle::RadialGrid grid{1e-6, 10.0, points};
                    const auto spectrum =
                        oracle::radial_eigensolve(sol.atom, l, grid, static_cast<std::size_t>(sol.n_r) + 1);
                    const auto& state = spectrum.states.back();
                    CHECK(state.node_count == static_cast<std::size_t>(sol.n_r));
                    double sum = 0.0;
                    for (std::size_t i = 0; i < points; ++i) {
                        const double r = grid.radius(i);
                        sum += std::pow(state.u_values[i] - r * sol(r), 2);
                    }
                    const double l2 = std::sqrt(sum * grid.spacing());
                    CHECK(l2 < previous_l2);
                    previous_l2 = l2;
                    if (points == 4000) {
                        CHECK(std::abs(state.eigenvalue - sol.energy_r) / sol.energy_r < 1e-4);
                        CHECK(l2 < 1e-3);
                    }
                }
            }
        }
    }
}
