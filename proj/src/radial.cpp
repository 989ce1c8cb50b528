#include "cmaxwell/radial.hpp"

#include <cmath>

#include "cmaxwell/errors.hpp"

namespace cmaxwell {

namespace {
constexpr cplx I{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

bool compact(SpaceKind k) { return k == SpaceKind::Spherical || k == SpaceKind::Elliptic; }

double normalised(std::initializer_list<cplx> terms) {
    cplx s = 0;
    double a = 0;
    for (auto t : terms) {
        s += t;
        a += std::abs(t);
    }
    return a == 0 ? 0.0 : std::abs(s) / a;
}

void require_frequency(const ModeSpec& mode) {
    if (mode.omega == 0) throw ZeroFrequency("omega = 0: algebraic f1 relation undefined");
}
}  // namespace

void validate(const ModeSpec& mode) {
    if (!compact(mode.space)) return;
    double kr = mode.k.real();
    if (mode.k.imag() != 0 || kr != std::round(kr))
        throw InvalidQuantumNumbers("k must be an integer on S3");
    if (mode.space == SpaceKind::Elliptic && (mode.m - long(std::lround(kr))) % 2 != 0)
        throw InvalidQuantumNumbers("elliptic space requires m and k of equal parity");
}

GeometryContext default_context(SpaceKind kind) {
    GeometryContext c;
    c.kind = kind;
    return c;
}

RadialFrame radial_frame(const GeometryContext& ctx, double r) {
    auto rot = ricci_rotation(ctx, r);
    auto [a, b] = angular_factors(ctx.kind, r);
    return {a / ctx.rho, b / ctx.rho, rot.gamma122(), rot.gamma313()};
}

RadialDerivative radial_rhs(const ModeSpec& mode, const RadialState& s, const GeometryContext& ctx) {
    require_frequency(mode);
    auto fr = radial_frame(ctx, s.r);
    const double w = mode.omega, m = mode.m;
    const cplx k = mode.k;
    cplx f2 = s.f[1], f3 = s.f[2];
    cplx f1 = (-I * k * fr.b * f2 + I * m * fr.a * f3) / w;
    cplx df2 = w * f3 - fr.g122 * f2 + I * m * fr.a * f1;
    cplx df3 = -w * f2 + fr.g313 * f3 + I * k * fr.b * f1;
    return {f1, df2, df3};
}

RadialDerivative radial_rhs(const ModeSpec& mode, const RadialState& s) {
    return radial_rhs(mode, s, default_context(mode.space));
}

std::array<double, 4> system_residuals(const ModeSpec& mode, const RadialState& s,
                                       const GeometryContext& ctx) {
    auto fr = radial_frame(ctx, s.r);
    const double w = mode.omega, m = mode.m;
    const cplx k = mode.k;
    auto [f1, f2, f3] = s.f;
    auto [d1, d2, d3] = s.df;
    return {normalised({d1, (fr.g122 - fr.g313) * f1, I * m * fr.a * f2, I * k * fr.b * f3}),
            normalised({-w * f1, -I * k * fr.b * f2, I * m * fr.a * f3}),
            normalised({-w * f2, -d3, fr.g313 * f3, I * k * fr.b * f1}),
            normalised({-w * f3, d2, fr.g122 * f2, -I * m * fr.a * f1})};
}

std::array<double, 4> system_residuals(const ModeSpec& mode, const RadialState& s) {
    return system_residuals(mode, s, default_context(mode.space));
}

double consistency_residual(const ModeSpec& mode, const RadialState& s, const GeometryContext& ctx) {
    return system_residuals(mode, s, ctx)[0];
}

double consistency_residual(const ModeSpec& mode, const RadialState& s) {
    return consistency_residual(mode, s, default_context(mode.space));
}

GPair to_gpair(const ModeSpec& mode, cplx F2, cplx F3, double y) {
    require_frequency(mode);
    if (mode.space == SpaceKind::Hyperbolic)
        return {y, (F2 - I * F3) * kInvSqrt2, (-I * F2 + F3) * kInvSqrt2};
    return {y, (F2 - F3) * kInvSqrt2, (F2 + F3) * kInvSqrt2};
}

std::pair<cplx, cplx> from_gpair(const ModeSpec& mode, const GPair& g) {
    if (mode.space == SpaceKind::Hyperbolic)
        return {(g.G2 + I * g.G3) * kInvSqrt2, (I * g.G2 + g.G3) * kInvSqrt2};
    return {(g.G2 + g.G3) * kInvSqrt2, (-g.G2 + g.G3) * kInvSqrt2};
}

double gpair_variable(SpaceKind kind, double r) {
    if (kind == SpaceKind::Hyperbolic) {
        double s = std::sinh(r);
        return -s * s;
    }
    double s = std::sin(r);
    return s * s;
}

std::pair<cplx, cplx> elimination_divisors(const ModeSpec& mode) {
    const double w = mode.omega, m = mode.m;
    const cplx k = mode.k;
    if (mode.space == SpaceKind::Hyperbolic)
        return {w * w + (m - I * k) * (m - I * k), w * w + (m + I * k) * (m + I * k)};
    return {(m - k) * (m - k) - w * w, w * w - (m + k) * (m + k)};
}

GPairEquations gpair_second_order_coeffs(const ModeSpec& mode, bool check) {
    require_frequency(mode);
    auto [d2, d3] = elimination_divisors(mode);
    if (check && std::abs(d2) < 1e-12)
        throw DegenerateElimination("vanishing G2 elimination divisor; use a special family or integrate");
    const double w = mode.omega, m2 = double(mode.m) * mode.m;
    const cplx k2 = mode.k * mode.k;
    GPairEquations eq;
    eq.g2_degenerate = std::abs(d2) < 1e-12;
    eq.g3_degenerate = std::abs(d3) < 1e-12;
    if (mode.space == SpaceKind::Hyperbolic) {
        auto make = [=](cplx shift) {
            return [=](double y) {
                return OdeCoeffs{4 * y * (1 - y), 4 * (1 - 2 * y),
                                 -(shift + w * w + m2 / (y * (1 - y)) - (m2 + k2) / (1 - y))};
            };
        };
        eq.g2 = make(-2.0 * I * w);
        eq.g3 = make(2.0 * I * w);
    } else {
        auto make = [=](double shift) {
            return [=](double y) {
                return OdeCoeffs{4 * y * (1 - y), 4 * (1 - 2 * y),
                                 shift + w * w - m2 / (y * (1 - y)) + (m2 - k2) / (1 - y)};
            };
        };
        eq.g2 = make(2 * w);
        eq.g3 = make(-2 * w);
    }
    return eq;
}

}  // namespace cmaxwell

namespace cmaxwell {

std::vector<double> uniform_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    if (n == 1) {
        g[0] = lo;
        return g;
    }
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
    return g;
}

}  // namespace cmaxwell
