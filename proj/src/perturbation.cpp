#include "winter/perturbation.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace winter {

namespace {

constexpr double kPi = std::numbers::pi;

void check_order(int order) {
    if (order < 1 || order > kMaxPerturbativeOrder)
        throw DomainError(fmt::format("perturbative order must be in 1..{}, got {}", kMaxPerturbativeOrder, order));
}

}  // namespace

PerturbativeCoefficients resonant_coeffs(int N, int n, int order) {
    check_order(order);
    if (N < 1) throw DomainError("N must be >= 1");
    if (n < 1) throw DomainError("resonant levels start at n = 1");

    const double a = 1.0 + 1.0 / N;
    const double v = kPi * n;
    const double v2 = v * v;
    const double all[5] = {
        -a,
        a * a,
        std::pow(a, 3) * (v2 * N / 3.0 - 1.0),
        -std::pow(a, 4) * (4.0 * v2 * N / 3.0 - 1.0),
        std::pow(a, 5) / 45.0 *
            (v2 * v2 * N * N * N - 11.0 * v2 * v2 * N * N + v2 * (150.0 + v2) * N - 45.0),
    };
    return {LevelIndex{N, n, 0, LevelKind::Resonant}, order, std::vector<double>(all, all + order)};
}

PerturbativeCoefficients nonresonant_coeffs(int N, int n, int l, int order) {
    check_order(order);
    if (N < 1) throw DomainError("N must be >= 1");
    if (l % N == 0) throw DomainError(fmt::format("l = {} is a multiple of N = {}: that level is resonant", l, N));
    if (n < 0 || (n == 0 && l < 0)) throw DomainError(fmt::format("(n={}, l={}) is not a physical level", n, l));

    const double Nd = N;
    const double m = n + l / Nd;
    const double C = std::cos(kPi * l / Nd) / std::sin(kPi * l / Nd);
    const double p = kPi, p2 = p * p, p3 = p2 * p, p4 = p2 * p2;
    const double iN = 1.0 / Nd, iN2 = iN * iN, iN3 = iN2 * iN;
    const double mC = m * C;

    const double c1 = -iN;
    const double c2 = p * iN * mC + iN2;
    const double c3 = -(p2 * iN) * (1 - iN) * mC * mC - 3 * p * iN2 * mC + p2 / (3 * Nd) * (1 + 3 * iN) * m * m - iN3;
    const double c4 = p3 * iN * (1 - 3 * iN + iN2) * std::pow(mC, 3) + 2 * p2 * iN2 * (3 - 2 * iN) * mC * mC -
                      p * iN * (p2 * (1 + 3 * iN - iN2) * m * m - 6 * iN2) * mC -
                      4 * p2 / (3 * Nd * Nd) * (1 + 3 * iN) * m * m + iN2 * iN2;
    const double c5 = -p4 * iN * (1 - 6 * iN + 6 * iN2 - iN3) * std::pow(mC, 4) -
                      5 * p3 * iN2 * (2 - 4 * iN + iN2) * std::pow(mC, 3) +
                      2 * p2 * iN * (p2 / 3 * (3 + 7 * iN - 12 * iN2 + 2 * iN3) * m * m - 5 * iN2 * (2 - iN)) * mC * mC +
                      5 * p * iN2 * (p2 / 3 * (4 + 12 * iN - 3 * iN2) * m * m - 2 * iN2) * mC -
                      p4 / (15 * Nd) * (3 + 20 * iN + 30 * iN2 - 5 * iN3) * std::pow(m, 4) +
                      10 * p2 / (3 * Nd * Nd * Nd) * (1 + 3 * iN) * m * m - iN3 * iN2;
    const double all[5] = {c1, c2, c3, c4, c5};
    return {normalize_index(N, n, l), order, std::vector<double>(all, all + order)};
}

PerturbativeCoefficients coefficients(const LevelIndex& index, int order) {
    switch (index.kind) {
        case LevelKind::Resonant: return resonant_coeffs(index.N, index.n, order);
        case LevelKind::NonResonant: return nonresonant_coeffs(index.N, index.n, index.l, order);
        case LevelKind::Exceptional: break;
    }
    check_order(order);
    return {index, order, std::vector<double>(order, 0.0)};
}

double perturbative_momentum(const LevelIndex& index, double z, int order) {
    const auto pc = coefficients(index, order);
    const double g = -z;
    double sum = 0.0, gi = 1.0;
    for (double c : pc.coeffs) {
        gi *= g;
        sum += gi * c;
    }
    return index.free_momentum() * (1.0 + sum);
}

}  // namespace winter
