#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "oracle.hpp"
#include "winter/spectrum.hpp"

using namespace winter;

constexpr double kPi = std::numbers::pi;

TEST_CASE("pole lattice skips multiples of N+1") {
    // N = 2: poles at 1/3, 2/3, 4/3, 5/3, 7/3
    const double expect[] = {1.0 / 3, 2.0 / 3, 4.0 / 3, 5.0 / 3, 7.0 / 3};
    for (int i = 1; i <= 5; ++i) CHECK(pole_momentum(2, i) == doctest::Approx(expect[i - 1]));
    const auto win = SpectralWindow::build(2, 3.0 * kPi);
    CHECK(win.pole_grid.size() == 6);
    CHECK(win.zero_grid.size() == 5);
}

TEST_CASE("h_N evaluation") {
    CHECK(h_function(1, kPi / 2).pole);
    CHECK_FALSE(h_function(1, kPi).pole);
    CHECK(h_function(1, kPi).value == 0.0);
    // N = 1: h = tan(w) / (2 w) ... check against the defining ratio away from poles
    for (double w : {0.3, 1.1, 2.0, 7.7, 31.4}) {
        for (int N = 1; N <= 5; ++N) {
            const double ref = std::sin(w) * std::sin(N * w) / (w * std::sin((N + 1) * w));
            CHECK(h_function(N, w).value == doctest::Approx(ref).epsilon(1e-11));
        }
    }
    CHECK_THROWS_AS(h_function(2, -1.0), DomainError);
}

TEST_CASE("levels agree with the independent oracle") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> lz(-3.0, 1.7);
    for (int N = 1; N <= 6; ++N)
        for (int s = 1; s <= 12; ++s)
            for (int r = 0; r < 6; ++r) {
                const double z = (r % 2 ? -1 : 1) * std::pow(10.0, lz(rng));
                const double k = exact_level(N, s, z);
                CHECK(k == doctest::Approx(oracle::level(N, s, z)).epsilon(1e-12));
                CHECK(std::abs(cot_residual(N, z, k)) < 1e-8 * (1.0 + 1.0 / std::abs(z * kPi * k)));
            }
}

TEST_CASE("levels stay inside their pole bracket and grow with z") {
    for (int N = 1; N <= 4; ++N)
        for (int s = 1; s <= 8; ++s) {
            double prev = pole_momentum(N, s);
            for (double z = -20.0; z <= 20.0; z += 0.37) {
                const double k = exact_level(N, s, z);
                CHECK(k > pole_momentum(N, s));
                CHECK(k < pole_momentum(N, s + 1));
                CHECK(k > prev);
                prev = k;
            }
        }
}

TEST_CASE("bound-state continuation is not counted") {
    // z > N/(N+1): h_N also reaches z below the first pole; the labelled spectrum ignores it
    const auto levels = exact_levels(2, 5.0, 2.0);
    for (const auto& l : levels)
        if (l.index.kind != LevelKind::Exceptional) CHECK(l.k > pole_momentum(2, 1));
}

TEST_CASE("spectrum listing") {
    const auto v = exact_levels(3, 0.2, 2.0);
    int normal = 0, exceptional = 0;
    for (const auto& l : v) (l.index.kind == LevelKind::Exceptional ? exceptional : normal)++;
    CHECK(exceptional == 1);
    CHECK(normal == 5);  // 1/3 .. 5/3
    CHECK_THROWS_AS(exact_levels(3, 0.0, 2.0), DomainError);
    CHECK_THROWS_AS(exact_level(3, 0, 0.5), DomainError);
}

TEST_CASE("strong- and weak-coupling limits") {
    const auto lv = exact_levels(2, -1e6, 2.5);
    const double expect[] = {1.0 / 3, 2.0 / 3, 4.0 / 3, 5.0 / 3, 7.0 / 3};
    for (int i = 0; i < 5; ++i) CHECK(lv[i].k == doctest::Approx(expect[i]).epsilon(1e-5));
    for (int N = 1; N <= 4; ++N)
        for (int s = 1; s <= 6; ++s) {
            CHECK(std::abs(exact_level(N, s, 1e-8) - double(s) / N) < 1e-6);
            CHECK(std::abs(exact_level(N, s, 1e7) - infinite_coupling_limit(N, s, +1)) < 1e-5);
        }
}

TEST_CASE("slope formula matches finite differences") {
    for (int N = 1; N <= 4; ++N)
        for (int s = 1; s <= 5; ++s)
            for (double z : {-2.0, -0.3, 0.05, 0.8, 4.0}) {
                const double h = 1e-6 * std::max(1.0, std::abs(z));
                const double fd = (exact_level(N, s, z + h) - exact_level(N, s, z - h)) / (2 * h);
                CHECK(dk_dz(N, z, exact_level(N, s, z)) == doctest::Approx(fd).epsilon(1e-5));
            }
}

TEST_CASE("eigenfunctions are normalized, continuous and vanish at the walls") {
    using boost::math::quadrature::gauss_kronrod;
    for (int N = 1; N <= 4; ++N)
        for (double z : {-1.0, 0.4}) {
            const double k = exact_level(N, 2 * N - 1, z);
            const double L = (N + 1) * kPi;
            auto sq = [&](double x) {
                const double p = eigenfunction(N, k, x);
                return p * p;
            };
            const double norm = gauss_kronrod<double, 61>::integrate(sq, 0.0, kPi, 15, 1e-13) +
                                gauss_kronrod<double, 61>::integrate(sq, kPi, L, 15, 1e-13);
            CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(std::abs(eigenfunction(N, k, 0.0)) < 1e-14);
            CHECK(std::abs(eigenfunction(N, k, L)) < 1e-12);
            CHECK(eigenfunction(N, k, kPi * (1 - 1e-12)) == doctest::Approx(eigenfunction(N, k, kPi * (1 + 1e-12))));
        }
    CHECK_THROWS_AS(eigenfunction(2, 1.0, 0.5), DomainError);
    CHECK(exceptional_eigenfunction(2, 1, kPi) == doctest::Approx(0.0));
}
