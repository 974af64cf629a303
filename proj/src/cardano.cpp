#include "winter/cardano.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "winter/core.hpp"
#include "winter/jets.hpp"

namespace winter {

namespace {

const cplx kOmega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);

}  // namespace

Depressed depress_cubic(cplx a, cplx b, cplx c) {
    return {b - a * a / 3.0, c - a * b / 3.0 + 2.0 / 27.0 * a * a * a};
}

CubicRoots solve_cubic(cplx a, cplx b, cplx c) {
    const auto [p, q] = depress_cubic(a, b, c);
    const cplx disc = sqrt_principal(q * q / 4.0 + p * p * p / 27.0);
    const cplx t_plus = -q / 2.0 + disc;
    const cplx t_minus = -q / 2.0 - disc;
    // The two choices differ only by u <-> v; take the one without cancellation.
    const cplx t = std::abs(t_plus) >= std::abs(t_minus) ? t_plus : t_minus;
    const cplx u = cbrt_principal(t);
    const cplx v = u == 0.0 ? cplx(0.0) : -p / (3.0 * u);

    CubicRoots out;
    cplx fn = 1.0;
    for (int n = 0; n < 3; ++n) {
        out.roots[n] = fn * u + std::conj(fn) * v - a / 3.0;
        fn *= kOmega;
    }
    return out;
}

QuarticRoots solve_quartic(cplx a, cplx b, cplx c, cplx d) {
    if (a == 0.0 && b == 0.0 && c == 0.0 && d == 0.0)
        throw DomainError("quartic with all coefficients zero is degenerate (x^4 = 0 has no distinguished branches)");

    const cplx a2 = a * a;
    const cplx p = b - 3.0 / 8.0 * a2;
    const cplx q = c - a * b / 2.0 + a2 * a / 8.0;
    const cplx r = d + a2 * b / 16.0 - a * c / 4.0 - 3.0 / 256.0 * a2 * a2;

    // resolvent: v^3 + p v^2 + (p^2/4 - r) v - q^2/8 = 0
    const auto res = solve_cubic(p, p * p / 4.0 - r, -q * q / 8.0);
    const cplx v0 = *std::max_element(res.roots.begin(), res.roots.end(),
                                      [](cplx x, cplx y) { return std::abs(x) < std::abs(y); });

    QuarticRoots out;
    const cplx shift = a / 4.0;
    const double scale = std::max({1.0, std::abs(p), std::sqrt(std::abs(r))});
    if (std::abs(v0) < 1e-12 * scale) {
        // p, q, r all vanish on this path: y^2 = (-p +- sqrt(p^2 - 4r)) / 2
        out.biquadratic = true;
        const cplx s = sqrt_principal(p * p - 4.0 * r);
        for (int e1 : {1, -1}) {
            const cplx y2 = (-p + static_cast<double>(e1) * s) / 2.0;
            const cplx y = sqrt_principal(y2);
            out.roots[QuarticRoots::slot(e1, 1)] = y - shift;
            out.roots[QuarticRoots::slot(e1, -1)] = -y - shift;
        }
        return out;
    }

    out.resolvent_root = v0;
    const cplx s = sqrt_principal(2.0 * v0);
    for (int e1 : {1, -1}) {
        const cplx inner = sqrt_principal(-(p + v0) / 2.0 - static_cast<double>(e1) * q / (2.0 * s));
        for (int e2 : {1, -1})
            out.roots[QuarticRoots::slot(e1, e2)] =
                static_cast<double>(e1) * s / 2.0 + static_cast<double>(e2) * inner - shift;
    }
    return out;
}

CubicRoots polish(const CubicRoots& r, cplx a, cplx b, cplx c) {
    CubicRoots out = r;
    for (auto& x : out.roots) {
        const cplx f = ((x + a) * x + b) * x + c;
        const cplx df = (3.0 * x + 2.0 * a) * x + b;
        if (df != 0.0) x -= f / df;
    }
    return out;
}

QuarticRoots polish(const QuarticRoots& r, cplx a, cplx b, cplx c, cplx d) {
    QuarticRoots out = r;
    for (auto& x : out.roots) {
        const cplx f = (((x + a) * x + b) * x + c) * x + d;
        const cplx df = ((4.0 * x + 3.0 * a) * x + 2.0 * b) * x + c;
        if (df != 0.0) x -= f / df;
    }
    return out;
}

}  // namespace winter
