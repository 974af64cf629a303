#include "winter/jets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "winter/core.hpp"

namespace winter {

namespace {

bool on_cut(cplx x) { return x.imag() == 0.0 && x.real() <= 0.0; }

}  // namespace

Jet::Jet(int order) : order_(order) {
    if (order < 0 || order > kJetCapacity)
        throw DomainError(fmt::format("jet order {} outside [0, {}]", order, kJetCapacity));
}

Jet Jet::constant(cplx c, int order) {
    Jet j(order);
    j.c_[0] = c;
    return j;
}

Jet Jet::variable(cplx x0, int order) {
    Jet j(order);
    j.c_[0] = x0;
    if (order >= 1) j.c_[1] = 1.0;
    return j;
}

Jet Jet::truncated(int order) const {
    Jet j(std::min(order, order_));
    std::copy_n(c_.begin(), j.order_ + 1, j.c_.begin());
    return j;
}

Jet& Jet::operator+=(const Jet& b) {
    order_ = std::min(order_, b.order_);
    for (int i = 0; i <= order_; ++i) c_[i] += b.c_[i];
    for (int i = order_ + 1; i <= kJetCapacity; ++i) c_[i] = 0.0;
    return *this;
}

Jet& Jet::operator-=(const Jet& b) {
    order_ = std::min(order_, b.order_);
    for (int i = 0; i <= order_; ++i) c_[i] -= b.c_[i];
    for (int i = order_ + 1; i <= kJetCapacity; ++i) c_[i] = 0.0;
    return *this;
}

Jet& Jet::operator*=(const Jet& b) { return *this = *this * b; }
Jet& Jet::operator/=(const Jet& b) { return *this = *this / b; }

Jet& Jet::operator+=(cplx s) {
    c_[0] += s;
    return *this;
}

Jet& Jet::operator-=(cplx s) {
    c_[0] -= s;
    return *this;
}

Jet& Jet::operator*=(cplx s) {
    for (int i = 0; i <= order_; ++i) c_[i] *= s;
    return *this;
}

Jet& Jet::operator/=(cplx s) {
    if (s == 0.0) throw DomainError("jet divided by zero scalar");
    for (int i = 0; i <= order_; ++i) c_[i] /= s;
    return *this;
}

Jet Jet::operator-() const {
    Jet r(*this);
    for (int i = 0; i <= order_; ++i) r.c_[i] = -r.c_[i];
    return r;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }

Jet operator*(const Jet& a, const Jet& b) {
    Jet r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) {
        cplx acc = 0.0;
        for (int j = 0; j <= k; ++j) acc += a[j] * b[k - j];
        r[k] = acc;
    }
    return r;
}

Jet operator/(const Jet& a, const Jet& b) {
    if (b[0] == 0.0) throw DomainError("jet division by a series with vanishing constant term");
    Jet r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) {
        cplx acc = a[k];
        for (int j = 1; j <= k; ++j) acc -= b[j] * r[k - j];
        r[k] = acc / b[0];
    }
    return r;
}

Jet operator+(Jet a, cplx s) { return a += s; }
Jet operator+(cplx s, Jet a) { return a += s; }
Jet operator-(Jet a, cplx s) { return a -= s; }
Jet operator-(cplx s, const Jet& a) { return (-a) += s; }
Jet operator*(Jet a, cplx s) { return a *= s; }
Jet operator*(cplx s, Jet a) { return a *= s; }
Jet operator/(Jet a, cplx s) { return a /= s; }
Jet operator/(cplx s, const Jet& a) { return Jet::constant(s, a.order()) / a; }

Jet times_e(const Jet& a) {
    Jet r(a.order());
    for (int i = a.order(); i >= 1; --i) r[i] = a[i - 1];
    return r;
}

cplx sqrt_principal(cplx x) { return std::sqrt(x); }

cplx cbrt_principal(cplx x) {
    if (x == 0.0) return 0.0;
    if (x.imag() == 0.0 && x.real() > 0.0) return std::cbrt(x.real());
    return std::polar(std::cbrt(std::abs(x)), std::arg(x) / 3.0);
}

Jet atan(const Jet& a) {
    const cplx a0 = a[0];
    if (a0 == cplx(0, 1) || a0 == cplx(0, -1)) throw DomainError("arctan jet at a singular point +-i");
    // y' = a' d with d = 1/(1 + a^2)
    const Jet d = 1.0 / (1.0 + a * a);
    Jet y(a.order());
    y[0] = a0.imag() == 0.0 ? cplx(std::atan(a0.real())) : std::atan(a0);
    for (int k = 1; k <= y.order(); ++k) {
        cplx acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += static_cast<double>(j) * a[j] * d[k - j];
        y[k] = acc / static_cast<double>(k);
    }
    return y;
}

Jet pow(const Jet& a, double alpha) {
    const cplx a0 = a[0];
    if (on_cut(a0))
        throw DomainError(fmt::format("power jet constant term ({}, {}) lies on the branch cut", a0.real(), a0.imag()));
    Jet y(a.order());
    if (alpha == 0.5)
        y[0] = sqrt_principal(a0);
    else if (alpha == 1.0 / 3.0)
        y[0] = cbrt_principal(a0);
    else
        y[0] = std::pow(a0, alpha);
    // a y' = alpha a' y, solved coefficient by coefficient
    for (int k = 1; k <= y.order(); ++k) {
        cplx acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += (alpha * j - (k - j)) * a[j] * y[k - j];
        y[k] = acc / (static_cast<double>(k) * a0);
    }
    return y;
}

Jet sqrt(const Jet& a) { return pow(a, 0.5); }
Jet cbrt(const Jet& a) { return pow(a, 1.0 / 3.0); }

Jet compose(const Jet& outer, const Jet& inner) {
    Jet delta = inner;
    delta[0] = 0.0;
    const int P = std::min(outer.order(), inner.order());
    Jet r = Jet::constant(outer[P], P);
    for (int k = P - 1; k >= 0; --k) {
        r = r * delta;
        r[0] += outer[k];
    }
    return r;
}

bool is_real(const Jet& a, double tol) {
    for (int i = 0; i <= a.order(); ++i)
        if (std::abs(a[i].imag()) > tol * std::max(1.0, std::abs(a[i]))) return false;
    return true;
}

}  // namespace winter
