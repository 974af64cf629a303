#include "winter/analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/cos_pi.hpp>
#include <boost/math/special_functions/sin_pi.hpp>
#include <fmt/format.h>

#include "winter/spectrum.hpp"

namespace winter {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_N(int N) {
    if (N < 1) throw DomainError(fmt::format("cavity ratio N must be >= 1, got {}", N));
}

bool near_integer(double x) { return std::abs(x - std::round(x)) <= 4.0 * kEps * std::max(1.0, std::abs(x)); }

double reduce_mod_pi(double x) {
    // x in units of pi
    double f = x - std::floor(x);
    if (f >= 1.0) f = 0.0;
    return kPi * f;
}

}  // namespace

double amplitude_ratio(int N, double k) {
    require_N(N);
    if (N == 1) return 1.0;
    if (near_integer(k)) return N;
    if (near_integer(N * k)) return 0.0;
    using boost::math::sin_pi;
    return std::abs(sin_pi(N * k) / sin_pi(k));
}

double phase_shift(int N, double k) {
    require_N(N);
    return reduce_mod_pi(-(N + 1) * k);
}

double phase_shift_large_n(int N, double k) {
    require_N(N);
    return reduce_mod_pi(-N * k);
}

std::vector<double> unwrap_phase(const std::vector<double>& phase_mod_pi) {
    std::vector<double> out(phase_mod_pi);
    double offset = 0.0;
    for (std::size_t i = 1; i < out.size(); ++i) {
        const double d = phase_mod_pi[i] - phase_mod_pi[i - 1];
        if (d > kPi / 2) offset -= kPi;
        if (d < -kPi / 2) offset += kPi;
        out[i] = phase_mod_pi[i] + offset;
    }
    return out;
}

double amplitude_local_maximum(int N, int n, int u) {
    require_N(N);
    if (N < 2) throw DomainError("A_1 is constant and has no local maxima");
    if (u == 0 || u == -1) throw DomainError("u = 0 and u = -1 border the principal maximum");
    using boost::math::cos_pi;
    using boost::math::sin_pi;
    double k = n + (u + 0.5) / N;
    for (int it = 0; it < 50; ++it) {
        const double sN = sin_pi(N * k), s1 = sin_pi(k);
        const double g1 = kPi * N * cos_pi(N * k) / sN - kPi * cos_pi(k) / s1;
        const double g2 = -kPi * kPi * N * N / (sN * sN) + kPi * kPi / (s1 * s1);
        const double step = g1 / g2;
        k -= step;
        if (std::abs(step) <= 4.0 * kEps * std::abs(k)) break;
    }
    return k;
}

ResonanceDiagnostics diagnostics(int N, double z, double k) {
    return {amplitude_ratio(N, k), phase_shift(N, k), dk_dz(N, z, k)};
}

std::pair<LevelCurve, LevelCurve> plus_minus_levels(int N, int n, const std::vector<double>& z_grid) {
    require_N(N);
    if (n < 1) throw DomainError("glued levels start at n = 1");
    const LevelIndex res{N, n, 0, LevelKind::Resonant};
    LevelCurve plus(res, Method{MethodKind::Exact, 0});
    LevelCurve minus(res, Method{MethodKind::Exact, 0});
    for (double z : z_grid) {
        plus.push(z, z <= 0.0 ? n : exact_level(N, n * N, z));
        minus.push(z, z >= 0.0 ? n : exact_level(N, n * N, z));
    }
    return {std::move(plus), std::move(minus)};
}

Eval<double> resummed_large_n(int n, int N, double z) {
    require_N(N);
    if (n < 1) throw DomainError("resummed form applies to resonant levels n >= 1");
    if (z == 0.0) return {static_cast<double>(n), false};
    const double nN = static_cast<double>(n) * N;
    const double j = std::round(z * nN);
    if (j != 0.0) {
        const double zc = j / nN;
        if (std::abs(z - zc) <= 1e-6 * std::abs(zc)) return {0.0, true};
    }
    using boost::math::cos_pi;
    using boost::math::sin_pi;
    const double cot = cos_pi(nN * z) / sin_pi(nN * z);
    return {n * (1.0 + z + z * z * (kPi * n * cot + 1.0)), false};
}

std::pair<double, double> half_line_ranges(int N, int n, int l) {
    require_N(N);
    const auto idx = normalize_index(N, n, l);
    const double inv = 1.0 / (N + 1);
    if (idx.kind == LevelKind::Resonant) return {inv, inv};
    const double L = idx.l;
    if (L > 0) return {L / (N * (N + 1.0)), (1.0 - L / N) * inv};
    return {(1.0 + L / N) * inv, -L / (N * (N + 1.0))};
}

}  // namespace winter
