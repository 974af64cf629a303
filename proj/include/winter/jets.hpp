#pragma once

#include <array>
#include <complex>

namespace winter {

using cplx = std::complex<double>;

inline constexpr int kJetCapacity = 32;
inline constexpr int kDefaultJetOrder = 24;

// Truncated Taylor series a_0 + a_1 e + ... + a_P e^P over complex scalars.
// Binary operations truncate to the smaller of the two orders.
class Jet {
public:
    explicit Jet(int order = kDefaultJetOrder);

    static Jet constant(cplx c, int order = kDefaultJetOrder);
    // x0 + e
    static Jet variable(cplx x0, int order = kDefaultJetOrder);

    int order() const { return order_; }
    cplx operator[](int i) const { return c_[i]; }
    cplx& operator[](int i) { return c_[i]; }

    Jet truncated(int order) const;

    Jet& operator+=(const Jet& b);
    Jet& operator-=(const Jet& b);
    Jet& operator*=(const Jet& b);
    Jet& operator/=(const Jet& b);
    Jet& operator+=(cplx s);
    Jet& operator-=(cplx s);
    Jet& operator*=(cplx s);
    Jet& operator/=(cplx s);

    Jet operator-() const;

private:
    int order_;
    std::array<cplx, kJetCapacity + 1> c_{};
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);
Jet operator+(Jet a, cplx s);
Jet operator+(cplx s, Jet a);
Jet operator-(Jet a, cplx s);
Jet operator-(cplx s, const Jet& a);
Jet operator*(Jet a, cplx s);
Jet operator*(cplx s, Jet a);
Jet operator/(Jet a, cplx s);
Jet operator/(cplx s, const Jet& a);

// Multiplication by the jet variable e (drops the top coefficient).
Jet times_e(const Jet& a);

// Principal branches, cut along the non-positive real axis.
cplx sqrt_principal(cplx x);
cplx cbrt_principal(cplx x);

Jet atan(const Jet& a);
Jet sqrt(const Jet& a);
Jet cbrt(const Jet& a);
// a^alpha on the principal branch; sqrt and cbrt are the alpha = 1/2, 1/3 cases.
Jet pow(const Jet& a, double alpha);

// outer holds Taylor coefficients of f about inner[0]; returns f(inner).
Jet compose(const Jet& outer, const Jet& inner);

bool is_real(const Jet& a, double tol);

}  // namespace winter
