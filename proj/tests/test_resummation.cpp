#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "winter/perturbation.hpp"
#include "winter/resummation.hpp"

using namespace winter;

constexpr double kPi = std::numbers::pi;

namespace {

double taylor_eval(const Jet& j, double e) {
    double v = 0.0;
    for (int i = j.order(); i >= 0; --i) v = v * e + j[i].real();
    return v;
}

}  // namespace

TEST_CASE("branch table") {
    CHECK(all_branches().size() == 10);
    CHECK(branch_spec(3, Branch::NonResDown).n_min == 1);
    CHECK(branch_spec(4, Branch::NonResMid).shift == 0.5);
    CHECK_THROWS_AS(branch_spec(3, Branch::NonResMid), DomainError);
    CHECK_THROWS_AS(branch_spec(5, Branch::Resonant), DomainError);
    CHECK(branch_of(normalize_index(4, 1, 2)) == Branch::NonResMid);
    CHECK(branch_of(normalize_index(4, 2, -1)) == Branch::NonResDown);
    CHECK(branch_of(normalize_index(2, 0, 1)) == Branch::NonResUp);
    CHECK(level_of(3, Branch::NonResDown, 1).label() == "k_2/3");
    CHECK_THROWS_AS(level_of(3, Branch::NonResDown, 0), DomainError);
}

TEST_CASE("H vanishes at zero with the expected slopes") {
    for (const auto& s : all_branches()) CHECK(branch_H(s.N, s.branch, 0.0) == 0.0);
    CHECK(branch_H(1, Branch::Resonant, 1.0) == doctest::Approx(kPi / 4));
    const double slope[][3] = {{1, 0, 1.0}, {2, 0, 1.5}, {2, 1, 0.5}, {4, 0, 1.25}};
    for (const auto& r : slope) {
        const Branch b = r[1] == 0 ? Branch::Resonant : Branch::NonResUp;
        const Jet t = branch_H_taylor(int(r[0]), b, 0.0, 3);
        CHECK(t[1].real() == doctest::Approx(r[2]).epsilon(1e-14));
        CHECK(branch_H(int(r[0]), b, 1e-7) / 1e-7 == doctest::Approx(r[2]).epsilon(1e-6));
    }
}

TEST_CASE("N = 2 non-resonant branch is odd") {
    for (double x : {1e-9, 0.01, 0.5, 3.0, 40.0})
        CHECK(branch_H(2, Branch::NonResUp, -x) == -branch_H(2, Branch::NonResUp, x));
}

TEST_CASE("complex radicals reduce to real values") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> U(-30.0, 30.0);
    for (const auto& s : all_branches()) {
        if (s.N < 3) continue;
        for (int i = 0; i < 10000; ++i) {
            const double x = U(rng) * (i % 3 == 0 ? 0.01 : 1.0);
            const cplx c = branch_H_complex(s.N, s.branch, x);
            CHECK(std::abs(c.imag()) < 1e-10);
            if (i % 50 == 0) CHECK(std::abs(c.real() - branch_H(s.N, s.branch, x)) < 1e-9);
        }
    }
}

TEST_CASE("H is continuous and matches its Taylor data everywhere") {
    for (const auto& s : all_branches()) {
        // across the small-argument switch and far away from it
        for (double x0 : {0.0, 9.9e-5, -1.02e-4, 0.05, -0.9, 1.0, 2.5, -7.0, 25.0}) {
            const Jet t = branch_H_taylor(s.N, s.branch, x0, 16);
            for (double e : {-2e-3, -1e-5, 1e-5, 2e-3})
                CHECK(taylor_eval(t, e) == doctest::Approx(branch_H(s.N, s.branch, x0 + e)).epsilon(1e-12).scale(1.0));
        }
    }
}

TEST_CASE("H solves the spectral condition") {
    // tan(H + shift) = t with S_N(t) = x / coupling_factor, checked in the cotangent form
    for (const auto& s : all_branches())
        for (double x = -12.0; x <= 12.0; x += 0.71) {
            const double th = branch_H(s.N, s.branch, x) + s.shift * kPi;
            const double lhs = std::cos(th) / std::sin(th) + std::cos(s.N * th) / std::sin(s.N * th);
            if (!std::isfinite(lhs)) continue;
            // S_N(t) = x/c  <=>  cot w + cot(N w) = c/x  in terms of the angle
            CHECK(lhs == doctest::Approx(s.coupling_factor / x).epsilon(1e-9).scale(1e-9));
        }
}

TEST_CASE("recursion examples") {
    // N = 1 is parametrized by zeta = 2z
    const auto r1 = recursive_momentum(1, Branch::Resonant, 1, 0.05, 1);
    CHECK(r1.w == doctest::Approx(kPi + std::atan(0.1 * kPi)).epsilon(1e-15));
    const auto r2 = recursive_momentum(1, Branch::Resonant, 1, 0.05, 2);
    CHECK(r2.w == doctest::Approx(kPi + std::atan(0.1 * kPi + 0.1 * std::atan(0.1 * kPi))).epsilon(1e-15));
    for (const auto& s : all_branches())
        for (int h : {1, 3, 7}) {
            const auto r = recursive_momentum(s.N, s.branch, s.n_min + 1, 0.0, h);
            CHECK(r.w == kPi * (s.n_min + 1 + s.shift));
        }
    CHECK_THROWS_AS(recursive_momentum(1, Branch::Resonant, 1, 0.1, 0), DomainError);
    CHECK_THROWS_AS(recursive_momentum(3, Branch::NonResDown, 0, 0.1, 1), DomainError);
}

TEST_CASE("fixed point reproduces the exact levels") {
    const auto a = fixed_point_momentum(1, Branch::Resonant, 3, 0.025, 1e-14);
    CHECK(a.converged);
    CHECK(a.k() == doctest::Approx(oracle::level(1, 3, 0.025)).epsilon(1e-12));
    const auto b = fixed_point_momentum(2, Branch::Resonant, 1, -0.3, 1e-13);
    CHECK(b.k() == doctest::Approx(oracle::level(2, 2, -0.3)).epsilon(1e-10));
    const auto c = fixed_point_momentum(4, Branch::NonResMid, 2, 0.0);
    CHECK(c.iterations == 1);
    CHECK(c.w == kPi * 2.5);

    for (const auto& s : all_branches())
        for (int n = s.n_min; n <= s.n_min + 4; ++n)
            for (double z = -10.0; z <= 10.0; z += 0.61) {
                const auto r = fixed_point_momentum(s.N, s.branch, n, z);
                CHECK(r.converged);
                const int num = level_of(s.N, s.branch, n).free_numerator();
                CHECK(r.k() == doctest::Approx(oracle::level(s.N, num, z)).epsilon(1e-12));
                CHECK(std::abs(r.w - r.effective_index) < kPi / 2 + std::abs(s.shift) * kPi);
            }
}

TEST_CASE("non-convergence is reported with the last iterate") {
    const auto r = fixed_point_momentum(1, Branch::Resonant, 5, 4.0, 1e-300, 3);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 3);
    CHECK(r.last_increment > 0.0);
}

TEST_CASE("function series") {
    // closed forms for N = 1
    for (double om : {-3.0, -0.4, 0.0, 0.7, 2.0, 11.0}) {
        const auto phi = phi_functions(1, Branch::Resonant, om, 4);
        const auto ref = phi_closed_n1(om);
        for (int i = 0; i < 3; ++i) CHECK(phi[i] == doctest::Approx(ref[i]).epsilon(1e-13).scale(1e-15));
    }
    // P = 1 at omega = 1, zeta = 0.1  (n = 1 -> zeta = 1/pi)
    const double zeta = 0.1, omega = 1.0;
    const auto phi = phi_functions(1, Branch::Resonant, omega, 1);
    CHECK(kPi + phi[0] + zeta * phi[1] == doctest::Approx(kPi + kPi / 4 + kPi / 80).epsilon(1e-15));

    // N = 2 resonant: phi_2 = phi_1 (1 + 1/(2 sqrt(1 + 3 eta^2))) / (1 + 4 eta^2)
    for (double eta : {-2.0, -0.3, 0.5, 1.7}) {
        const auto p = phi_functions(2, Branch::Resonant, eta, 1);
        const double ref = p[0] * (1.0 + 1.0 / (2.0 * std::sqrt(1.0 + 3.0 * eta * eta))) / (1.0 + 4.0 * eta * eta);
        CHECK(p[1] == doctest::Approx(ref).epsilon(1e-10));
    }
    CHECK_THROWS_AS(phi_functions(1, Branch::Resonant, 0.3, kJetCapacity + 1), DomainError);
}

TEST_CASE("series converges to the exact level for small coupling") {
    for (const auto& s : all_branches()) {
        const int n = s.n_min + 1;
        const double z = 0.02;
        const int num = level_of(s.N, s.branch, n).free_numerator();
        const double exact = oracle::level(s.N, num, z);
        double prev = 1.0;
        for (int P : {0, 2, 4, 8}) {
            const double err = std::abs(series_momentum(s.N, s.branch, n, z, P).k() - exact);
            CHECK((err < prev || err < 1e-14));
            prev = err;
        }
        CHECK(prev < 1e-12);
    }
}

TEST_CASE("lowest order of both schemes coincides") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> Z(-3.0, 3.0);
    for (const auto& s : all_branches())
        for (int i = 0; i < 50; ++i) {
            const int n = s.n_min + static_cast<int>(rng() % 6);
            const double z = Z(rng);
            CHECK(series_momentum(s.N, s.branch, n, z, 0).w == recursive_momentum(s.N, s.branch, n, z, 1).w);
        }
}

TEST_CASE("second recursion carries phi_1, phi_2 and part of phi_3") {
    // N = 1: the z^2 coefficient of the h = 2 recursion is -omega atan(omega)^2/(1+omega^2)^2,
    // the large-omega part of phi_3 = atan(1 - omega atan)/(1+omega^2)^2
    for (double om : {-2.0, 0.6, 3.0}) {
        const Jet d = recursion_series(1, Branch::Resonant, om, 2, 4);
        const auto ref = phi_closed_n1(om);
        const double q = 1.0 + om * om;
        CHECK(d[0].real() == doctest::Approx(ref[0]));
        CHECK(d[1].real() == doctest::Approx(ref[1]));
        CHECK(d[2].real() == doctest::Approx(-om * std::atan(om) * std::atan(om) / (q * q)).epsilon(1e-13));
    }
}

TEST_CASE("first-order slope agrees with perturbation theory") {
    // d w / dz at z = 0 from recursion h = 1 versus pi * k_free * (-c1)
    int cases = 0;
    for (const auto& s : all_branches())
        for (int n = s.n_min; n < s.n_min + 2; ++n) {
            const auto idx = level_of(s.N, s.branch, n);
            const double h = 1e-7;
            const double slope = (recursive_momentum(s.N, s.branch, n, h, 1).w -
                                  recursive_momentum(s.N, s.branch, n, -h, 1).w) /
                                 (2 * h);
            const double c1 = coefficients(idx, 1).coeffs[0];
            CHECK(slope == doctest::Approx(-kPi * idx.free_momentum() * c1).epsilon(1e-6));
            ++cases;
        }
    CHECK(cases == 20);
}
