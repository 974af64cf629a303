#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "winter/perturbation.hpp"

using namespace winter;

constexpr double kPi = std::numbers::pi;

TEST_CASE("closed-form coefficient values") {
    const auto r1 = resonant_coeffs(1, 3, 2);
    CHECK(r1.coeffs == std::vector<double>{-2.0, 4.0});
    const auto r2 = resonant_coeffs(2, 1, 3);
    CHECK(r2.coeffs[2] == doctest::Approx(std::pow(1.5, 3) * (kPi * kPi * 2 / 3 - 1)));
    CHECK(resonant_coeffs(1000000, 1, 1).coeffs[0] == doctest::Approx(-1.0).epsilon(1e-5));

    CHECK(nonresonant_coeffs(2, 0, 1, 1).coeffs[0] == -0.5);
    CHECK(nonresonant_coeffs(2, 3, 1, 2).coeffs[1] == doctest::Approx(0.25));
    CHECK(nonresonant_coeffs(4, 1, 1, 2).coeffs[1] == doctest::Approx(5 * kPi / 16 + 1.0 / 16));
}

TEST_CASE("structural invariants") {
    for (int N = 1; N <= 6; ++N) {
        const double a = 1.0 + 1.0 / N;
        for (int n = 1; n <= 4; ++n) {
            const auto c = resonant_coeffs(N, n, 5).coeffs;
            CHECK(c[0] == doctest::Approx(-a));
            CHECK(c[1] == doctest::Approx(a * a));
        }
        for (int l = 1; l < N; ++l) CHECK(nonresonant_coeffs(N, 1, l, 1).coeffs[0] == doctest::Approx(-1.0 / N));
    }
}

TEST_CASE("either remainder convention gives the same coefficients") {
    const auto a = nonresonant_coeffs(3, 0, 2, 5), b = nonresonant_coeffs(3, 1, -1, 5);
    CHECK(a.index == b.index);
    for (int i = 0; i < 5; ++i) CHECK(a.coeffs[i] == doctest::Approx(b.coeffs[i]).epsilon(1e-13));
}

TEST_CASE("rejected inputs") {
    CHECK_THROWS_AS(resonant_coeffs(2, 1, 6), DomainError);
    CHECK_THROWS_AS(resonant_coeffs(2, 0, 2), DomainError);
    CHECK_THROWS_AS(nonresonant_coeffs(3, 1, 3, 2), DomainError);
    CHECK_THROWS_AS(nonresonant_coeffs(3, 0, -1, 2), DomainError);
}

TEST_CASE("momentum evaluation") {
    const LevelIndex res{1, 1, 0, LevelKind::Resonant};
    CHECK(perturbative_momentum(res, 0.0, 5) == 1.0);
    CHECK(perturbative_momentum(res, 0.01, 1) == doctest::Approx(1.02));
    CHECK(perturbative_momentum(normalize_index(2, 0, 1), 0.1, 1) == doctest::Approx(0.525));
    CHECK(perturbative_momentum(exceptional_index(3, 2), 0.7, 4) == 2.0);
}

TEST_CASE("truncation error shrinks with the next power of z") {
    // halving z divides the error of order p by about 2^(p+1)
    for (int N = 1; N <= 4; ++N)
        for (int s = 1; s <= 6; ++s) {
            const auto idx = classify_free_momentum(N, s);
            for (int p = 1; p <= 3; ++p) {
                const double z = 0.002 / s;
                const double e1 = std::abs(oracle::level(N, s, z) - perturbative_momentum(idx, z, p));
                const double e2 = std::abs(oracle::level(N, s, z / 2) - perturbative_momentum(idx, z / 2, p));
                const double ratio = std::log2(e1 / e2);
                CHECK(ratio == doctest::Approx(p + 1).epsilon(0.1));
            }
        }
}
