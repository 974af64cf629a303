#pragma once

#include <utility>
#include <vector>

#include "winter/core.hpp"

namespace winter {

// |sin(pi N k) / sin(pi k)|, with the limit N at integer k and exact zeros on the lattice n + l/N.
double amplitude_ratio(int N, double k);

// -pi (N+1) k reduced to [0, pi).
double phase_shift(int N, double k);
// Large-N form -pi N k reduced to [0, pi), the one whose resonances sit at n + (l + 1/2)/N.
double phase_shift_large_n(int N, double k);
// Removes the jumps of a phase sampled mod pi so consecutive values differ by less than pi/2.
std::vector<double> unwrap_phase(const std::vector<double>& phase_mod_pi);

// Local maximum of A_N near n + (u + 1/2)/N, refined by Newton on d log A / dk. u must not be 0 or -1.
double amplitude_local_maximum(int N, int n, int u);

struct ResonanceDiagnostics {
    double amplitude_ratio = 0.0;
    double phase_shift_mod_pi = 0.0;
    double slope_dk_dz = 0.0;
};

ResonanceDiagnostics diagnostics(int N, double z, double k);

// k_{n+}: exceptional level n for z <= 0 glued to the resonant level for z > 0.
// k_{n-}: resonant level for z < 0 glued to the exceptional level for z >= 0.
std::pair<LevelCurve, LevelCurve> plus_minus_levels(int N, int n, const std::vector<double>& z_grid);

// n {1 + z + z^2 [pi n cot(pi n N z) + 1]}; flagged as a pole within relative 1e-6 of j/(nN), j != 0.
Eval<double> resummed_large_n(int n, int N, double z);

// (Range-, Range+) of a non-resonant level (n, l) over z < 0 and z > 0.
std::pair<double, double> half_line_ranges(int N, int n, int l);

}  // namespace winter
