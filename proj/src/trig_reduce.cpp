#include "winter/trig_reduce.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace winter {

namespace {

std::int64_t binomial(int n, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

RationalTanReduction build_reduction(int N) {
    if (N < 1 || N > kMaxReductionN)
        throw DomainError(fmt::format("tangent reduction supports 1 <= N <= {}, got {}", kMaxReductionN, N));
    RationalTanReduction red;
    red.N = N;
    for (int r = 0; 2 * r + 1 <= N; ++r) red.p.push_back((r % 2 ? -1 : 1) * binomial(N, 2 * r + 1));
    for (int r = 0; 2 * r <= N; ++r) red.q.push_back((r % 2 ? -1 : 1) * binomial(N, 2 * r));
    return red;
}

std::vector<std::int64_t> RationalTanReduction::numerator_coeffs() const {
    std::vector<std::int64_t> c(2 * p.size(), 0);
    for (std::size_t r = 0; r < p.size(); ++r) c[2 * r + 1] = p[r];
    return c;
}

std::vector<std::int64_t> RationalTanReduction::denominator_coeffs() const {
    std::vector<std::int64_t> c(2 * q.size() - 1, 0);
    for (std::size_t r = 0; r < q.size(); ++r) c[2 * r] = q[r];
    return c;
}

SpectralPolynomial spectral_polynomial(int N) {
    const auto red = build_reduction(N);
    SpectralPolynomial sp;
    sp.A = red.numerator_coeffs();
    // B = P + Q, with P(t) as a polynomial in t (even powers only)
    std::vector<std::int64_t> P(2 * red.p.size() - 1, 0);
    for (std::size_t r = 0; r < red.p.size(); ++r) P[2 * r] = red.p[r];
    sp.B = red.denominator_coeffs();
    if (sp.B.size() < P.size()) sp.B.resize(P.size(), 0);
    for (std::size_t i = 0; i < P.size(); ++i) sp.B[i] += P[i];
    return sp;
}

}  // namespace winter
