#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "winter/core.hpp"

namespace winter {

inline constexpr int kMaxReductionN = 16;

// tan(N w) = t P(t^2) / Q(t^2) with t = tan w, P and Q stored as
// coefficient lists in powers of t^2:  p[r] = (-1)^r C(N, 2r+1),  q[r] = (-1)^r C(N, 2r).
struct RationalTanReduction {
    int N = 1;
    std::vector<std::int64_t> p;
    std::vector<std::int64_t> q;

    // Full polynomials in t, lowest power first.
    std::vector<std::int64_t> numerator_coeffs() const;    // t P
    std::vector<std::int64_t> denominator_coeffs() const;  // Q
};

RationalTanReduction build_reduction(int N);

// Polynomialized spectral condition S_N(t) = x with S_N(t) = t P / (P + Q).
// Cleared of denominators it reads A(t) - x B(t) = 0; coefficients lowest power first.
struct SpectralPolynomial {
    std::vector<std::int64_t> A;  // t P(t)
    std::vector<std::int64_t> B;  // P(t) + Q(t)
};

SpectralPolynomial spectral_polynomial(int N);

namespace detail {

template <class T>
T horner_t2(const std::vector<std::int64_t>& c, const T& t2) {
    T acc = T(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t2 + T(static_cast<double>(*it));
    return acc;
}

template <class T>
double abs_sum_t2(const std::vector<std::int64_t>& c, const T& t2) {
    double acc = 0.0, pw = 1.0;
    for (auto v : c) {
        acc += std::abs(static_cast<double>(v)) * pw;
        pw *= std::abs(t2);
    }
    return acc;
}

// Relative margin used to tag evaluations that sit on a pole.
inline constexpr double kPoleMargin = 1e-13;

}  // namespace detail

// R_N(t) = tan(N w) for t = tan w. Poles (Q(t) ~ 0 relative to its terms) are tagged.
template <class T>
Eval<T> tan_multiple(const RationalTanReduction& red, const T& t) {
    const T t2 = t * t;
    const T num = t * detail::horner_t2(red.p, t2);
    const T den = detail::horner_t2(red.q, t2);
    if (std::abs(den) <= detail::kPoleMargin * detail::abs_sum_t2(red.q, t2)) return {T(0), true};
    return {num / den, false};
}

template <class T>
Eval<T> tan_multiple(int N, const T& t) {
    return tan_multiple(build_reduction(N), t);
}

// S_N(t) = t R_N(t) / (t + R_N(t)), evaluated as t P / (P + Q).
template <class T>
Eval<T> s_function(const RationalTanReduction& red, const T& t) {
    const T t2 = t * t;
    const T P = detail::horner_t2(red.p, t2);
    const T Q = detail::horner_t2(red.q, t2);
    const T den = P + Q;
    const double scale = detail::abs_sum_t2(red.p, t2) + detail::abs_sum_t2(red.q, t2);
    if (std::abs(den) <= detail::kPoleMargin * scale) return {T(0), true};
    return {t * P / den, false};
}

template <class T>
Eval<T> s_function(int N, const T& t) {
    return s_function(build_reduction(N), t);
}

}  // namespace winter
