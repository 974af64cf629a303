#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "winter/trig_reduce.hpp"

using namespace winter;

TEST_CASE("low-order reductions") {
    const auto r2 = build_reduction(2);
    CHECK(r2.p == std::vector<std::int64_t>{2});
    CHECK(r2.q == std::vector<std::int64_t>{1, -1});
    const auto r3 = build_reduction(3);
    CHECK(r3.p == std::vector<std::int64_t>{3, -1});
    CHECK(r3.q == std::vector<std::int64_t>{1, -3});
    CHECK_THROWS_AS(build_reduction(0), DomainError);
    CHECK_THROWS_AS(build_reduction(kMaxReductionN + 1), DomainError);
}

TEST_CASE("tan(N w) identity on random angles") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-1.5, 1.5);
    for (int N = 1; N <= kMaxReductionN; ++N) {
        const auto red = build_reduction(N);
        for (int i = 0; i < 100; ++i) {
            const double w = U(rng);
            const auto r = tan_multiple(red, std::tan(w));
            if (r.pole) continue;
            const double ref = std::tan(N * w);
            // conditioning of tan(N w) in w grows like N (1 + ref^2)
            CHECK(std::abs(r.value - ref) <= 1e-12 * N * (1.0 + ref * ref));
        }
    }
}

TEST_CASE("poles are tagged") {
    for (int N : {1, 3, 5}) {
        const auto r = tan_multiple(N, std::tan(std::numbers::pi / (2 * N) - 1e-17));
        if (N > 1) CHECK(r.pole);
    }
    CHECK(tan_multiple(2, std::tan(std::numbers::pi / 4)).pole);
}

TEST_CASE("spectral function and its polynomial form agree") {
    for (int N = 1; N <= 6; ++N) {
        const auto sp = spectral_polynomial(N);
        for (double t : {-2.3, -0.4, 0.1, 0.9, 3.7}) {
            const auto s = s_function(N, t);
            REQUIRE_FALSE(s.pole);
            double A = 0, B = 0, pw = 1;
            for (std::size_t i = 0; i < std::max(sp.A.size(), sp.B.size()); ++i, pw *= t) {
                if (i < sp.A.size()) A += sp.A[i] * pw;
                if (i < sp.B.size()) B += sp.B[i] * pw;
            }
            CHECK(s.value == doctest::Approx(A / B).epsilon(1e-13));
            const double R = std::tan(N * std::atan(t));
            CHECK(s.value == doctest::Approx(t * R / (t + R)).epsilon(1e-9));
        }
    }
}

TEST_CASE("complex arguments") {
    const std::complex<double> t(0.3, 0.2);
    const auto r = tan_multiple(4, t);
    const auto ref = std::tan(4.0 * std::atan(t));
    CHECK(std::abs(r.value - ref) < 1e-13);
}
