#pragma once

#include <array>
#include <complex>

namespace winter {

using cplx = std::complex<double>;

struct Depressed {
    cplx p, q;
};

// x^3 + a x^2 + b x + c  ->  y^3 + p y + q with x = y - a/3
Depressed depress_cubic(cplx a, cplx b, cplx c);

// roots[n] = f^n u + conj(f)^n v - a/3,  f = exp(2 pi i / 3).
// u is the principal cube root of the larger of -q/2 +- sqrt(q^2/4 + p^3/27),
// v = -p / (3u), so u v = -p/3 holds exactly as the derivation requires.
struct CubicRoots {
    std::array<cplx, 3> roots;
};

CubicRoots solve_cubic(cplx a, cplx b, cplx c);

// Quartic roots labelled by the two sign determinations of the closed formula:
//   y = e1 sqrt(2 v0)/2 + e2 sqrt(-(p + v0)/2 - e1 q / (2 sqrt(2 v0)))
struct QuarticRoots {
    std::array<cplx, 4> roots;  // order (+,+), (+,-), (-,+), (-,-)
    cplx resolvent_root = 0.0;
    bool biquadratic = false;

    static constexpr int slot(int e1, int e2) { return (e1 > 0 ? 0 : 2) + (e2 > 0 ? 0 : 1); }
    cplx at(int e1, int e2) const { return roots[slot(e1, e2)]; }
};

// x^4 + a x^3 + b x^2 + c x + d
QuarticRoots solve_quartic(cplx a, cplx b, cplx c, cplx d);

// One Newton step per root on the monic polynomial; opt-in, never applied inside the solvers.
CubicRoots polish(const CubicRoots& r, cplx a, cplx b, cplx c);
QuarticRoots polish(const QuarticRoots& r, cplx a, cplx b, cplx c, cplx d);

}  // namespace winter
