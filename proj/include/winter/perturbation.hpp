#pragma once

#include <vector>

#include "winter/core.hpp"

namespace winter {

inline constexpr int kMaxPerturbativeOrder = 5;

// Coefficients c^(i) of k = k_free [1 + sum_i g^i c^(i)], stored in the g convention.
struct PerturbativeCoefficients {
    LevelIndex index;
    int order = 0;
    std::vector<double> coeffs;  // coeffs[i-1] = c^(i)
};

PerturbativeCoefficients resonant_coeffs(int N, int n, int order);
PerturbativeCoefficients nonresonant_coeffs(int N, int n, int l, int order);
PerturbativeCoefficients coefficients(const LevelIndex& index, int order);

// Truncated series at coupling z (g = -z). Exceptional levels return n.
double perturbative_momentum(const LevelIndex& index, double z, int order);

}  // namespace winter
