#include "winter/resummation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <utility>

#include <fmt/format.h>

#include "winter/trig_reduce.hpp"

namespace winter {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;
// Below this |x| the N = 4 radicals are replaced by their Taylor polynomial.
constexpr double kTaylorSwitch = 1e-4;
constexpr int kTaylorFallbackOrder = 5;

const std::vector<BranchSpec>& table() {
    static const std::vector<BranchSpec> t = {
        {1, Branch::Resonant, 0, 0.0, 2.0, 1},
        {2, Branch::Resonant, 0, 0.0, 1.0, 1},
        {2, Branch::NonResUp, 1, 0.5, 1.0, 0},
        {3, Branch::Resonant, 0, 0.0, 4.0 / 3.0, 1},
        {3, Branch::NonResUp, 1, 1.0 / 3.0, 4.0 / 3.0, 0},
        {3, Branch::NonResDown, -1, -1.0 / 3.0, 4.0 / 3.0, 1},
        {4, Branch::Resonant, 0, 0.0, 1.0, 1},
        {4, Branch::NonResUp, 1, 0.25, 1.0, 0},
        {4, Branch::NonResDown, -1, -0.25, 1.0, 1},
        {4, Branch::NonResMid, 2, 0.5, 1.0, 0},
    };
    return t;
}

double horner(const std::array<double, kTaylorFallbackOrder + 1>& c, double x) {
    double acc = 0.0;
    for (int i = kTaylorFallbackOrder; i >= 0; --i) acc = acc * x + c[i];
    return acc;
}

// Taylor coefficients of H at 0, computed once per branch.
double taylor_at_zero(int N, Branch b, double x) {
    using Coeffs = std::array<double, kTaylorFallbackOrder + 1>;
    static const std::map<std::pair<int, Branch>, Coeffs> cache = [] {
        std::map<std::pair<int, Branch>, Coeffs> m;
        for (const auto& s : table()) {
            const Jet j = branch_H_taylor(s.N, s.branch, 0.0, kTaylorFallbackOrder);
            Coeffs c{};
            for (int i = 0; i <= kTaylorFallbackOrder; ++i) c[i] = j[i].real();
            m[{s.N, s.branch}] = c;
        }
        return m;
    }();
    return horner(cache.at({N, b}), x);
}

// N = 3: R = sqrt(1 + 3x^2 + 3x^4), C = (R + i x^3)^(1/3) and C - 1 without cancellation.
struct Radicals3 {
    cplx C, Cm1;

    explicit Radicals3(double x) {
        const double x2 = x * x;
        const double R = std::sqrt(1.0 + 3.0 * x2 + 3.0 * x2 * x2);
        const double Rm1 = (3.0 * x2 + 3.0 * x2 * x2) / (R + 1.0);
        C = cbrt_principal(cplx(R, x2 * x));
        Cm1 = cplx(Rm1, x2 * x) / (C * C + C + 1.0);
    }
};

double h_n3(Branch b, double x) {
    const Radicals3 r(x);
    switch (b) {
        case Branch::Resonant: return std::atan(x - 2.0 * r.Cm1.imag());
        case Branch::NonResUp: {
            // atan(c) - pi/3 with c - sqrt3 formed directly
            const double d = x + (cplx(kSqrt3, -1.0) * r.Cm1).real();
            const double c = kSqrt3 + d;
            return std::atan2(d, 1.0 + kSqrt3 * c);
        }
        case Branch::NonResDown: {
            const double d = x - (cplx(kSqrt3, 1.0) * r.Cm1).real();
            const double c = d - kSqrt3;
            return std::atan2(d, 1.0 - kSqrt3 * c);
        }
        case Branch::NonResMid: break;
    }
    throw DomainError("N = 3 has no Mid branch");
}

cplx h_n3_literal(Branch b, double x) {
    const double x2 = x * x;
    const double R = std::sqrt(1.0 + 3.0 * x2 + 3.0 * x2 * x2);
    const cplx Cp = cbrt_principal(cplx(R, x2 * x));
    const cplx Cm = cbrt_principal(cplx(R, -x2 * x));
    const cplx i(0.0, 1.0);
    switch (b) {
        case Branch::Resonant: return std::atan(x + i * Cp - i * Cm);
        case Branch::NonResUp:
            return std::atan(x + cplx(kSqrt3, -1.0) / 2.0 * Cp + cplx(kSqrt3, 1.0) / 2.0 * Cm) - kPi / 3.0;
        case Branch::NonResDown:
            return std::atan(x - cplx(kSqrt3, 1.0) / 2.0 * Cp - cplx(kSqrt3, -1.0) / 2.0 * Cm) + kPi / 3.0;
        case Branch::NonResMid: break;
    }
    throw DomainError("N = 3 has no Mid branch");
}

// N = 4 building blocks. Sigma = 1 + xi*dq, with dq = 1 + e; every small
// quantity (e, sigma = sqrt(Sigma) - 1) is formed without subtracting O(1) terms.
struct Radicals4 {
    double xi, dq, e, s, sig;

    explicit Radicals4(double x) : xi(x) {
        const double x2 = x * x;
        const double poly = 7.0 * x2 + 25.0 * x2 * x2 + 125.0 / 4.0 * x2 * x2 * x2;
        const double R = std::sqrt(1.0 + poly);
        const double Rm1 = poly / (R + 1.0);
        const double beta = x * (25.0 * x2 + 18.0) / (6.0 * kSqrt3);
        const cplx F = cbrt_principal(cplx(R, -beta));
        const cplx Fm1 = cplx(Rm1, -beta) / (F * F + F + 1.0);
        const cplx rot = std::polar(1.0, kPi / 6.0);
        e = 5.0 * x / 3.0 + 2.0 / kSqrt3 * (rot * Fm1).real();
        dq = 1.0 + e;
        const double delta = x * dq;
        s = std::sqrt(1.0 + delta);
        sig = delta / (s + 1.0);
    }
};

double h_n4(Branch b, double xi) {
    if (std::abs(xi) < kTaylorSwitch) return taylor_at_zero(4, b, xi);
    const Radicals4 r(xi);
    const double s = r.s, sig = r.sig, e = r.e, dq = r.dq;

    if (b == Branch::Resonant || b == Branch::NonResUp) {
        // rho = (round bracket)/xi^2 for eps1 = +1, and rho - 1/4
        const double rq = 4.0 * sig / (1.0 + sig) +
                          (20.0 * sig + 15.0 * sig * sig + 3.0 * sig * sig * sig - (3.0 + sig) * (8.0 * e + 4.0 * e * e)) /
                              (4.0 * (1.0 + sig) * (2.0 + sig) * (2.0 + sig));
        const double sq = std::sqrt(std::max(0.25 + rq, 0.0));
        if (b == Branch::Resonant) {
            const double a = dq / (s + 1.0);
            const double num = (4.0 * e + 2.0 * e * e - sig - 5.0 * xi * dq) / (s * (s + 1.0));
            return std::atan(num / (a + sq));
        }
        const double cm1 = (2.0 * e - sig) / (2.0 * (s + 1.0)) + rq / (sq + 0.5);
        return std::atan2(cm1, 2.0 + cm1);
    }

    const double x2 = xi * xi;
    const double RB = 3.0 + 5.0 * x2 - s * s + 2.0 * (1.0 + 2.0 * x2) / s;
    const double rbs = std::sqrt(RB);
    if (b == Branch::NonResDown) {
        const double RBm4 = -xi * dq - 2.0 * sig / s + x2 * (5.0 + 4.0 / s);
        const double cp1 = (xi * (5.0 + 4.0 / s) + RBm4 / (rbs + 2.0) +
                            (3.0 * sig + sig * sig - 4.0 * e - 2.0 * e * sig) / s) /
                           (rbs + s + 1.0);
        return std::atan2(cp1, 2.0 - cp1);
    }
    return -std::atan(xi / (-s - 1.0 - rbs));
}

cplx h_n4_literal(Branch b, double xi) {
    if (std::abs(xi) < kTaylorSwitch) return taylor_at_zero(4, b, xi);
    const double x2 = xi * xi;
    const double R = std::sqrt(1.0 + 7.0 * x2 + 25.0 * x2 * x2 + 125.0 / 4.0 * x2 * x2 * x2);
    const double beta = xi * (25.0 * x2 + 18.0) / (6.0 * kSqrt3);
    const cplx Fp = cbrt_principal(cplx(R, -beta));
    const cplx Fm = cbrt_principal(cplx(R, beta));
    const cplx Sigma = 1.0 + 5.0 * x2 / 3.0 +
                       xi / kSqrt3 * (std::polar(1.0, kPi / 6.0) * Fp + std::polar(1.0, -kPi / 6.0) * Fm);
    const cplx s = sqrt_principal(Sigma);

    const int e1 = (b == Branch::Resonant || b == Branch::NonResUp) ? 1 : -1;
    const int e2 = (b == Branch::Resonant || b == Branch::NonResMid) ? -1 : 1;
    const cplx rb = 3.0 + 5.0 * x2 - Sigma - 2.0 * e1 * (1.0 + 2.0 * x2) / s;
    const cplx rbs = e1 > 0 ? xi * sqrt_principal(rb / x2) : sqrt_principal(rb);
    const cplx B = double(e1) * s - 1.0 + double(e2) * rbs;
    switch (b) {
        case Branch::Resonant: return std::atan(B / xi);
        case Branch::NonResUp: return std::atan(B / xi) - kPi / 4.0;
        case Branch::NonResDown: return std::atan(B / xi) + kPi / 4.0;
        case Branch::NonResMid: return -std::atan(xi / B);
    }
    return 0.0;
}

// One Newton step on the polynomialized spectral condition, in t = tan(theta) or u = cot(theta).
// The N = 4 radicals cancel at large |xi| while the polynomial root stays well conditioned.
double newton_refine(int N, Branch b, double x, double H) {
    const auto& spec = branch_spec(N, b);
    const auto sp = spectral_polynomial(N);
    const double theta = H + spec.shift * kPi;
    const bool use_cot = std::abs(std::sin(theta)) > std::abs(std::cos(theta));
    std::vector<double> c(N + 1, 0.0);
    for (int i = 0; i <= N; ++i) {
        const double a = i < static_cast<int>(sp.A.size()) ? static_cast<double>(sp.A[i]) : 0.0;
        const double bb = i < static_cast<int>(sp.B.size()) ? static_cast<double>(sp.B[i]) : 0.0;
        c[use_cot ? N - i : i] = spec.coupling_factor * a - x * bb;
    }
    const double t = use_cot ? std::cos(theta) / std::sin(theta) : std::tan(theta);
    double G = c[N], dG = N * c[N];
    for (int i = N - 1; i >= 0; --i) {
        G = G * t + c[i];
        if (i >= 1) dG = dG * t + i * c[i];
    }
    if (dG == 0.0) return H;
    const double dt = -G / dG;
    const double dtheta = std::atan(dt / (1.0 + t * (t + dt)));
    return use_cot ? H - dtheta : H + dtheta;
}

void require_order(int order) {
    if (order < 0 || order > kJetCapacity)
        throw DomainError(fmt::format("jet order {} outside 0..{}", order, kJetCapacity));
}

const BranchSpec& admissible(int N, Branch b, int n) {
    const auto& s = branch_spec(N, b);
    if (n < s.n_min)
        throw DomainError(fmt::format("branch {} of N={} starts at n = {}, got {}", to_string(b), N, s.n_min, n));
    return s;
}

}  // namespace

const char* to_string(Branch b) {
    switch (b) {
        case Branch::Resonant: return "resonant";
        case Branch::NonResUp: return "up";
        case Branch::NonResDown: return "down";
        case Branch::NonResMid: return "mid";
    }
    return "?";
}

const std::vector<BranchSpec>& all_branches() { return table(); }

const BranchSpec& branch_spec(int N, Branch b) {
    for (const auto& s : table())
        if (s.N == N && s.branch == b) return s;
    throw DomainError(fmt::format("no closed-form {} branch for N = {} (available for N = 1..4)", to_string(b), N));
}

Branch branch_of(const LevelIndex& index) {
    if (index.N < 1 || index.N > 4) throw DomainError(fmt::format("closed-form branches exist for N = 1..4, got {}", index.N));
    if (index.kind == LevelKind::Exceptional) throw DomainError("exceptional levels do not move with the coupling");
    if (index.kind == LevelKind::Resonant) return Branch::Resonant;
    switch (index.l) {
        case 1: return Branch::NonResUp;
        case -1: return Branch::NonResDown;
        case 2: return Branch::NonResMid;
        default: break;
    }
    throw DomainError(fmt::format("no branch for sub-index l = {}", index.l));
}

LevelIndex level_of(int N, Branch b, int n) {
    const auto& s = admissible(N, b, n);
    return normalize_index(N, n, s.l);
}

double branch_H(int N, Branch b, double x) {
    branch_spec(N, b);
    switch (N) {
        case 1: return std::atan(x);
        case 2:
            if (b == Branch::Resonant) return std::atan(3.0 * x / (std::sqrt(1.0 + 3.0 * x * x) + 1.0));
            return std::atan(x / (std::sqrt(1.0 + 3.0 * x * x) + 1.0));
        case 3: return h_n3(b, x);
        default: {
            const double h = h_n4(b, x);
            return std::abs(x) < 1.0 ? h : newton_refine(4, b, x, h);
        }
    }
}

cplx branch_H_complex(int N, Branch b, double x) {
    branch_spec(N, b);
    switch (N) {
        case 1: return std::atan(cplx(x));
        case 2: {
            const cplx r = sqrt_principal(1.0 + 3.0 * x * x);
            if (b == Branch::Resonant) return std::atan(3.0 * x / (r + 1.0));
            return std::atan(x / (r + 1.0));
        }
        case 3: return h_n3_literal(b, x);
        default: return h_n4_literal(b, x);
    }
}

Jet branch_H_taylor(int N, Branch b, double x0, int order) {
    require_order(order);
    const auto& spec = branch_spec(N, b);
    const auto sp = spectral_polynomial(N);

    const double H0 = x0 == 0.0 ? 0.0 : branch_H(N, b, x0);
    const double theta0 = H0 + spec.shift * kPi;
    // Work with t = tan(theta) or, near theta = pi/2, with u = cot(theta) and the reversed polynomial.
    const bool use_cot = std::abs(std::sin(theta0)) > std::abs(std::cos(theta0));

    const Jet X = Jet::variable(x0, order);
    std::vector<Jet> coef(N + 1, Jet(order));
    for (int i = 0; i <= N; ++i) {
        const double a = i < static_cast<int>(sp.A.size()) ? static_cast<double>(sp.A[i]) : 0.0;
        const double bb = i < static_cast<int>(sp.B.size()) ? static_cast<double>(sp.B[i]) : 0.0;
        coef[use_cot ? N - i : i] = spec.coupling_factor * a - X * bb;
    }

    Jet T = Jet::constant(use_cot ? std::cos(theta0) / std::sin(theta0) : std::tan(theta0), order);
    int iters = 3;
    for (int m = 1; m < order + 1; m *= 2) ++iters;
    for (int it = 0; it < iters; ++it) {
        Jet G = coef[N];
        Jet dG = coef[N] * double(N);
        for (int i = N - 1; i >= 0; --i) {
            G = G * T + coef[i];
            if (i >= 1) dG = dG * T + coef[i] * double(i);
        }
        if (std::abs(dG[0]) == 0.0)
            throw NumericalError(fmt::format("singular implicit derivative for N={} {} at x0={}", N, to_string(b), x0));
        T -= G / dG;
    }

    Jet H = use_cot ? -atan(T) : atan(T);
    H[0] = H0;
    return H;
}

double SchemeResult::k() const { return w / kPi; }

SchemeResult recursive_momentum(int N, Branch b, int n, double z, int h) {
    const auto& s = admissible(N, b, n);
    if (h < 1) throw DomainError(fmt::format("recursion depth must be >= 1, got {}", h));
    const double kappa = s.coupling_factor * z;
    const double nu = kPi * (n + s.shift);
    const double eta = kappa * nu;

    double delta = 0.0, inc = 0.0;
    for (int i = 0; i < h; ++i) {
        const double next = branch_H(N, b, eta + kappa * delta);
        inc = std::abs(next - delta);
        delta = next;
    }
    return {nu + delta, Method{MethodKind::Recursive, h}, nu, h, inc, true};
}

SchemeResult fixed_point_momentum(int N, Branch b, int n, double z, double tol, int max_iter) {
    const auto& s = admissible(N, b, n);
    if (!(tol > 0.0) || max_iter < 1) throw DomainError("fixed point needs tol > 0 and max_iter >= 1");
    const double kappa = s.coupling_factor * z;
    const double nu = kPi * (n + s.shift);
    const double eta = kappa * nu;

    double delta = 0.0, inc = 0.0;
    int it = 0;
    while (it < max_iter) {
        const double next = branch_H(N, b, eta + kappa * delta);
        inc = std::abs(next - delta);
        delta = next;
        ++it;
        if (inc <= tol * std::max(1.0, std::abs(nu + delta))) break;
    }
    const bool ok = inc <= tol * std::max(1.0, std::abs(nu + delta));
    return {nu + delta, Method{MethodKind::Recursive, it}, nu, it, inc, ok};
}

Jet recursion_series(int N, Branch b, double eta, int h, int order) {
    require_order(order);
    if (h < 0) throw DomainError("recursion depth must be >= 0");
    const Jet Ht = branch_H_taylor(N, b, eta, order);
    Jet delta(order);
    for (int i = 0; i < h; ++i) delta = compose(Ht, eta + times_e(delta));
    return delta;
}

Jet recursion_coupling_series(int N, Branch b, cplx nu, int h, int order) {
    require_order(order);
    if (h < 0) throw DomainError("recursion depth must be >= 0");
    const Jet H0 = branch_H_taylor(N, b, 0.0, order);
    Jet delta(order);
    for (int i = 0; i < h; ++i) delta = compose(H0, times_e(nu + delta));
    return delta;
}

std::vector<double> phi_functions(int N, Branch b, double eta, int P) {
    if (P < 0) throw DomainError(fmt::format("series order must be >= 0, got {}", P));
    const Jet d = recursion_series(N, b, eta, P + 1, P);
    if (!is_real(d, 1e-10)) throw NumericalError("complex residue in resummation coefficients");
    std::vector<double> phi(P + 1);
    for (int i = 0; i <= P; ++i) phi[i] = d[i].real();
    return phi;
}

SchemeResult series_momentum(int N, Branch b, int n, double z, int P) {
    const auto& s = admissible(N, b, n);
    const double kappa = s.coupling_factor * z;
    const double nu = kPi * (n + s.shift);
    const auto phi = phi_functions(N, b, kappa * nu, P);

    double sum = 0.0;
    for (int i = P; i >= 0; --i) sum = sum * kappa + phi[i];
    return {nu + sum, Method{MethodKind::FunctionSeries, P}, nu, P + 1, std::abs(phi[P] * std::pow(kappa, P)), true};
}

std::array<double, 3> phi_closed_n1(double omega) {
    const double a = std::atan(omega);
    const double q = 1.0 + omega * omega;
    return {a, a / q, a * (1.0 - omega * a) / (q * q)};
}

}  // namespace winter
