#include "winter/spectrum.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/sin_pi.hpp>
#include <boost/math/special_functions/cos_pi.hpp>
#include <boost/math/tools/toms748_solve.hpp>
#include <fmt/format.h>

namespace winter {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kScanPoints = 64;

void require_N(int N) {
    if (N < 1) throw DomainError(fmt::format("cavity ratio N must be >= 1, got {}", N));
}

// h - z with poles mapped to the sign they take from inside the bracket.
struct Residual {
    int N;
    double z;

    double operator()(double w) const {
        const auto h = h_function(N, w);
        if (h.pole) return std::numeric_limits<double>::quiet_NaN();
        return h.value - z;
    }
};

// Walks from a pole at `pole` towards `inner` until the residual has sign `want`.
double approach_pole(const Residual& f, double pole, double inner, double want) {
    double d = inner - pole;
    for (int i = 0; i < 400; ++i) {
        d /= 8.0;
        const double x = pole + d;
        if (x == pole) break;
        const double v = f(x);
        if (!std::isnan(v) && v * want > 0) return x;
    }
    throw NumericalError(fmt::format("cannot separate root from pole at w = {:.17g} (N={}, z={:.17g})", pole, f.N, f.z));
}

double solve_in_interval(int N, double z, double a, double b) {
    const Residual f{N, z};
    std::array<double, kScanPoints + 1> x{};
    std::array<double, kScanPoints + 1> v{};
    for (int i = 0; i <= kScanPoints; ++i) x[i] = a + (b - a) * i / kScanPoints;
    v[0] = -1.0;  // h -> -inf just above a pole
    v[kScanPoints] = 1.0;
    for (int i = 1; i < kScanPoints; ++i) {
        v[i] = f(x[i]);
        if (v[i] == 0.0) return x[i];
        if (std::isnan(v[i])) throw NumericalError(fmt::format("unexpected pole inside bracket at w = {:.17g}", x[i]));
    }

    int changes = 0, at = -1;
    for (int i = 0; i < kScanPoints; ++i)
        if ((v[i] < 0) != (v[i + 1] < 0)) {
            ++changes;
            at = i;
        }
    if (changes != 1)
        throw NumericalError(
            fmt::format("bracket ({:.17g}, {:.17g}) holds {} sign changes; expected exactly one (N={}, z={:.17g})", a, b,
                        changes, N, z));

    double lo = x[at], hi = x[at + 1];
    if (at == 0) lo = approach_pole(f, a, hi, -1.0);
    if (at + 1 == kScanPoints) hi = approach_pole(f, b, lo, 1.0);

    std::uintmax_t iters = 200;
    const auto tol = boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 1);
    const auto [r0, r1] = boost::math::tools::toms748_solve(f, lo, hi, f(lo), f(hi), tol, iters);
    if (iters >= 200)
        throw NumericalError(fmt::format("root refinement stalled in ({:.17g}, {:.17g}) (N={}, z={:.17g})", lo, hi, N, z));
    return 0.5 * (r0 + r1);
}

}  // namespace

double pole_momentum(int N, int i) {
    require_N(N);
    if (i < 1) throw DomainError("pole index starts at 1");
    return (i + (i - 1) / N) / static_cast<double>(N + 1);
}

SpectralWindow SpectralWindow::build(int N, double w_max) {
    require_N(N);
    SpectralWindow win;
    win.N = N;
    win.w_max = w_max;
    for (int i = 1;; ++i) {
        const double w = kPi * pole_momentum(N, i);
        if (w >= w_max) break;
        win.pole_grid.push_back(w);
    }
    for (int s = 1;; ++s) {
        const double w = kPi * s / N;
        if (w >= w_max) break;
        win.zero_grid.push_back(w);
    }
    return win;
}

Eval<double> h_function(int N, double w) {
    require_N(N);
    if (!(w > 0.0)) throw DomainError(fmt::format("h_N needs w > 0, got {}", w));

    const double j = std::round((N + 1) * w / kPi);
    const auto ji = static_cast<long long>(j);
    if (ji % (N + 1) != 0 && std::abs(w - j * kPi / (N + 1)) <= 4.0 * std::numeric_limits<double>::epsilon() * w)
        return {0.0, true};

    // Reduce by the nearest multiple of pi: the sign factors of the three sines cancel.
    const double m = std::round(w / kPi);
    const double d = w - m * kPi;
    if (d == 0.0) return {0.0, false};
    const double den = w * std::sin((N + 1) * d);
    if (den == 0.0) return {0.0, true};
    return {std::sin(d) * std::sin(N * d) / den, false};
}

double exact_level(int N, int s, double z) {
    require_N(N);
    if (z == 0.0) throw DomainError("z = 0 is the free theory; use the free momenta s/N instead");
    if (s < 1) throw DomainError("level numerator s must be >= 1");
    const double a = kPi * pole_momentum(N, s);
    const double b = kPi * pole_momentum(N, s + 1);
    return solve_in_interval(N, z, a, b) / kPi;
}

double exact_level(const LevelIndex& index, double z) {
    if (index.kind == LevelKind::Exceptional) return index.n;
    return exact_level(index.N, index.free_numerator(), z);
}

std::vector<Level> exact_levels(int N, double z, double k_max) {
    require_N(N);
    if (z == 0.0) throw DomainError("z = 0 is the free theory; use the free momenta s/N instead");
    if (!(k_max >= 1.0)) throw DomainError(fmt::format("k_max must be >= 1, got {}", k_max));

    std::vector<Level> out;
    for (int s = 1; pole_momentum(N, s) < k_max; ++s) {
        const double k = exact_level(N, s, z);
        if (k < k_max) out.push_back({classify_free_momentum(N, s), k});
    }
    for (const auto& e : exceptional_levels(N, k_max)) out.push_back({e, static_cast<double>(e.n)});
    return out;
}

double infinite_coupling_limit(int N, int s, int sign) {
    if (sign == 0) throw DomainError("infinite-coupling limit needs a sign");
    return sign < 0 ? pole_momentum(N, s) : pole_momentum(N, s + 1);
}

double eigenfunction(int N, double k, double x) {
    require_N(N);
    const double L = (N + 1) * kPi;
    if (!(k > 0.0)) throw DomainError("eigenfunction needs k > 0");
    if (k == std::round(k)) throw DomainError("integer k belongs to an exceptional level; use exceptional_eigenfunction");
    if (x < 0.0 || x > L) throw DomainError(fmt::format("x = {} outside [0, {}]", x, L));

    using boost::math::sin_pi;
    const double sNk = sin_pi(N * k);
    const double sk = sin_pi(k);
    const double norm2 = sNk * sNk * (kPi / 2 - sin_pi(2 * k) / (4 * k)) +
                         sk * sk * (kPi * N / 2 - sin_pi(2 * N * k) / (4 * k));
    const double c = 1.0 / std::sqrt(norm2);
    if (x <= kPi) return c * sNk * std::sin(k * x);
    return c * sk * std::sin(k * (L - x));
}

double exceptional_eigenfunction(int N, int n, double x) {
    require_N(N);
    const double L = (N + 1) * kPi;
    if (n < 1) throw DomainError("exceptional levels start at n = 1");
    if (x < 0.0 || x > L) throw DomainError(fmt::format("x = {} outside [0, {}]", x, L));
    return std::sqrt(2.0 / L) * std::sin(n * x);
}

double dk_dz(int N, double z, double k) {
    require_N(N);
    if (z == 0.0) throw DomainError("dk/dz is singular at z = 0");
    using boost::math::sin_pi;
    const double s1 = sin_pi(k);
    const double sN = sin_pi(N * k);
    const double pk = kPi * k;
    const double bracket = 1.0 / (s1 * s1) + N / (sN * sN);
    return k / (z * (z * pk * pk * bracket - 1.0));
}

double cot_residual(int N, double z, double k) {
    require_N(N);
    using boost::math::cos_pi;
    using boost::math::sin_pi;
    return cos_pi(k) / sin_pi(k) + cos_pi(N * k) / sin_pi(N * k) - 1.0 / (z * kPi * k);
}

}  // namespace winter
