#pragma once

#include <array>
#include <complex>
#include <vector>

#include "winter/core.hpp"
#include "winter/jets.hpp"

namespace winter {

// Level families that have a closed-form branch function. Names follow the
// sub-index: Up is l = +1, Down is l = -1, Mid is l = +2 (N = 4 only).
// For N = 2 the single non-resonant family (l = +1) is NonResUp.
enum class Branch { Resonant, NonResUp, NonResDown, NonResMid };

const char* to_string(Branch b);

struct BranchSpec {
    int N;
    Branch branch;
    int l;
    double shift;            // index shift in units of pi: nu_eff = pi (n + shift)
    double coupling_factor;  // argument of H is coupling_factor * z * w
    int n_min;
};

const BranchSpec& branch_spec(int N, Branch b);
const std::vector<BranchSpec>& all_branches();

Branch branch_of(const LevelIndex& index);
LevelIndex level_of(int N, Branch b, int n);

// Branch function H with H(0) = 0, real on the real axis.
double branch_H(int N, Branch b, double x);
// The same function evaluated literally through its complex radicals
// (before the final cast to real); used to audit realness.
cplx branch_H_complex(int N, Branch b, double x);

// Taylor coefficients of H about x0, H(x0 + e) = sum_k c_k e^k, up to `order`.
// Obtained from the polynomialized spectral condition by Newton iteration on jets.
Jet branch_H_taylor(int N, Branch b, double x0, int order);

struct SchemeResult {
    double w = 0.0;
    Method method;
    double effective_index = 0.0;
    int iterations = 0;
    double last_increment = 0.0;
    bool converged = true;

    double k() const;
};

// h-th recursion: Delta <- H(eta + kappa Delta) from Delta = 0, kappa = coupling_factor * z.
SchemeResult recursive_momentum(int N, Branch b, int n, double z, int h);

SchemeResult fixed_point_momentum(int N, Branch b, int n, double z, double tol = 1e-13, int max_iter = 64);

// w = nu_eff + sum_{i=0}^{P} kappa^i phi_{i+1}(eta).
SchemeResult series_momentum(int N, Branch b, int n, double z, int P);

// phi_1 .. phi_{P+1} at eta, extracted as kappa-coefficients of the (P+1)-th recursion.
std::vector<double> phi_functions(int N, Branch b, double eta, int P);

// kappa-Taylor series of the h-th recursion shift Delta^(h) at fixed eta.
Jet recursion_series(int N, Branch b, double eta, int h, int order);

// kappa-Taylor series of Delta^(h) with eta = nu * kappa varying as well.
// nu may be complex, which lets callers separate powers of nu.
Jet recursion_coupling_series(int N, Branch b, cplx nu, int h, int order);

// phi_1, phi_2, phi_3 for N = 1 in closed form.
std::array<double, 3> phi_closed_n1(double omega);

}  // namespace winter
