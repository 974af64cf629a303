#pragma once

#include <vector>

#include "winter/core.hpp"

namespace winter {

// Pole and zero lattice of h_N in the rescaled momentum w = pi k.
struct SpectralWindow {
    int N = 1;
    double w_max = 0.0;
    std::vector<double> pole_grid;  // pi h/(N+1), h not a multiple of N+1
    std::vector<double> zero_grid;  // pi s/N

    static SpectralWindow build(int N, double w_max);
};

// k-position of the i-th pole of h_N (i >= 1), ascending.
double pole_momentum(int N, int i);

// h_N(w) = sin w sin(Nw) / (w sin((N+1)w)); the spectral condition is h_N(w) = z.
Eval<double> h_function(int N, double w);

struct Level {
    LevelIndex index;
    double k = 0.0;
};

// Normal levels with 0 < k < k_max plus exceptional levels k = 1, 2, ...
// The extra root in (0, first pole) that exists for z > N/(N+1) continues the
// bound state and is not part of the labelled spectrum.
std::vector<Level> exact_levels(int N, double z, double k_max);

// Single normal level with free momentum s/N.
double exact_level(int N, int s, double z);
double exact_level(const LevelIndex& index, double z);

// k(z -> -inf) and k(z -> +inf), read off the pole lattice.
double infinite_coupling_limit(int N, int s, int sign);

// Normalized eigenfunction of a normal level (non-integer k).
double eigenfunction(int N, double k, double x);
// Exceptional eigenfunction sqrt(2/L) sin(n x).
double exceptional_eigenfunction(int N, int n, double x);

// dk/dz along a normal level through (z, k).
double dk_dz(int N, double z, double k);

// cot w + cot(Nw) - 1/(z w), the cotangent form of the quantization condition.
double cot_residual(int N, double z, double k);

}  // namespace winter
