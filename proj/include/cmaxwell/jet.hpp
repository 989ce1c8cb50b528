#pragma once

// Second-order forward-mode jets: value plus first and second derivative
// with respect to a single real variable.

#include <cmath>
#include <complex>
#include <limits>

namespace cmaxwell {

using cplx = std::complex<double>;

struct Jet {
    cplx v{}, d1{}, d2{};

    Jet() = default;
    Jet(cplx value) : v(value) {}
    Jet(double value) : v(value) {}
    Jet(cplx a, cplx b, cplx c) : v(a), d1(b), d2(c) {}

    static Jet variable(double x) { return {x, 1.0, 0.0}; }
};

inline Jet operator+(const Jet& a, const Jet& b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
inline Jet operator-(const Jet& a, const Jet& b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
inline Jet operator-(const Jet& a) { return {-a.v, -a.d1, -a.d2}; }
inline Jet operator*(const Jet& a, const Jet& b) {
    return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}
inline Jet operator*(cplx s, const Jet& a) { return {s * a.v, s * a.d1, s * a.d2}; }
inline Jet operator*(const Jet& a, cplx s) { return s * a; }
inline Jet operator*(double s, const Jet& a) { return cplx(s) * a; }
inline Jet operator*(const Jet& a, double s) { return cplx(s) * a; }

// Outer function applied by the chain rule: g(a) with g, g', g'' at a.v.
inline Jet compose(const Jet& a, cplx g, cplx g1, cplx g2) {
    return {g, g1 * a.d1, g2 * a.d1 * a.d1 + g1 * a.d2};
}

inline Jet reciprocal(const Jet& a) {
    cplx r = 1.0 / a.v;
    return compose(a, r, -r * r, 2.0 * r * r * r);
}
inline Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }
inline Jet operator/(const Jet& a, cplx s) { return (1.0 / s) * a; }
inline Jet operator/(const Jet& a, double s) { return (1.0 / s) * a; }
inline Jet operator/(cplx s, const Jet& a) { return s * reciprocal(a); }
inline Jet operator/(double s, const Jet& a) { return cplx(s) * reciprocal(a); }

inline Jet sin(const Jet& a) { return compose(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v)); }
inline Jet cos(const Jet& a) { return compose(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v)); }
inline Jet sinh(const Jet& a) { return compose(a, std::sinh(a.v), std::cosh(a.v), std::sinh(a.v)); }
inline Jet cosh(const Jet& a) { return compose(a, std::cosh(a.v), std::sinh(a.v), std::cosh(a.v)); }
inline Jet exp(const Jet& a) {
    cplx e = std::exp(a.v);
    return compose(a, e, e, e);
}
inline Jet log(const Jet& a) { return compose(a, std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v)); }

// a^p for a with positive real part along the path (principal branch).
inline Jet pow(const Jet& a, cplx p) {
    if (p == cplx(0)) return Jet(1.0);
    cplx g = std::pow(a.v, p);
    cplx g1 = p * std::pow(a.v, p - 1.0);
    cplx g2 = p * (p - 1.0) * std::pow(a.v, p - 2.0);
    return compose(a, g, g1, g2);
}
inline Jet pow(const Jet& a, int n) {
    if (n == 0) return Jet(1.0);
    Jet r = a;
    for (int i = 1; i < std::abs(n); ++i) r = r * a;
    return n < 0 ? reciprocal(r) : r;
}

// Derivative as a jet: (a', a'', unknown). Only the value and first
// derivative of the result are meaningful.
inline Jet derivative(const Jet& a) {
    return {a.d1, a.d2, std::numeric_limits<double>::quiet_NaN()};
}

}  // namespace cmaxwell
