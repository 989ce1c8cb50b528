#include "cmaxwell/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "cmaxwell/errors.hpp"

namespace cmaxwell {

namespace {
constexpr double kPi = std::numbers::pi;

bool compact(SpaceKind k) { return k == SpaceKind::Spherical || k == SpaceKind::Elliptic; }

void check_chart(const GeometryContext& ctx, double r) {
    auto rr = ctx.r_range();
    if (!(r >= rr.lo && r <= rr.hi)) throw OutOfRange("r outside the chart");
}

void check_interior(const GeometryContext& ctx, double r) {
    check_chart(ctx, r);
    if (r < kSingularGuard) throw SingularPoint("r too close to the axis");
    if (compact(ctx.kind) && r > kPi / 2 - kSingularGuard)
        throw SingularPoint("r too close to pi/2");
}
}  // namespace

std::string to_string(SpaceKind k) {
    switch (k) {
        case SpaceKind::Spherical: return "s3";
        case SpaceKind::Elliptic: return "elliptic";
        case SpaceKind::Hyperbolic: return "h3";
        case SpaceKind::Flat: return "flat";
    }
    return "?";
}

SpaceKind parse_space(const std::string& s) {
    if (s == "s3") return SpaceKind::Spherical;
    if (s == "elliptic") return SpaceKind::Elliptic;
    if (s == "h3") return SpaceKind::Hyperbolic;
    if (s == "flat") return SpaceKind::Flat;
    throw OutOfRange("unknown space '" + s + "'");
}

Interval GeometryContext::r_range() const {
    if (compact(kind)) return {0.0, kPi / 2};
    return {0.0, std::numeric_limits<double>::infinity()};
}

Interval GeometryContext::phi_range() const {
    if (compact(kind)) return {-kPi, kPi};
    return {0.0, 2 * kPi};
}

Interval GeometryContext::z_range() const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    switch (kind) {
        case SpaceKind::Spherical: return {-kPi, kPi};
        case SpaceKind::Elliptic: return {-kPi / 2, kPi / 2};
        default: return {-inf, inf};
    }
}

std::array<double, 4> metric_diag(const GeometryContext& ctx, double r) {
    check_chart(ctx, r);
    double p2 = ctx.rho * ctx.rho;
    switch (ctx.kind) {
        case SpaceKind::Spherical:
        case SpaceKind::Elliptic: {
            double s = std::sin(r), c = std::cos(r);
            return {1.0, -p2, -p2 * s * s, -p2 * c * c};
        }
        case SpaceKind::Hyperbolic: {
            double s = std::sinh(r), c = std::cosh(r);
            return {1.0, -p2, -p2 * s * s, -p2 * c * c};
        }
        case SpaceKind::Flat: return {1.0, -p2, -p2 * r * r, -p2};
    }
    return {};
}

std::pair<double, double> angular_factors(SpaceKind kind, double r) {
    switch (kind) {
        case SpaceKind::Spherical:
        case SpaceKind::Elliptic: return {1 / std::sin(r), 1 / std::cos(r)};
        case SpaceKind::Hyperbolic: return {1 / std::sinh(r), 1 / std::cosh(r)};
        case SpaceKind::Flat: return {1 / r, 1.0};
    }
    return {};
}

ConnectionSample christoffel(const GeometryContext& ctx, double r) {
    check_interior(ctx, r);
    ConnectionSample out;
    out.r = r;
    double r_pp = 0, r_zz = 0, p_rp = 0, z_rz = 0;
    switch (ctx.kind) {
        case SpaceKind::Spherical:
        case SpaceKind::Elliptic: {
            double s = std::sin(r), c = std::cos(r);
            r_pp = -s * c, r_zz = s * c, p_rp = c / s, z_rz = -s / c;
            break;
        }
        case SpaceKind::Hyperbolic: {
            double s = std::sinh(r), c = std::cosh(r);
            r_pp = -s * c, r_zz = -s * c, p_rp = c / s, z_rz = s / c;
            break;
        }
        case SpaceKind::Flat: r_pp = -r, p_rp = 1 / r; break;
    }
    auto& G = out.christoffel;
    G[1][2][2] = r_pp;
    G[1][3][3] = r_zz;
    G[2][1][2] = G[2][2][1] = p_rp;
    G[3][1][3] = G[3][3][1] = z_rz;
    return out;
}

ConnectionSample ricci_rotation(const GeometryContext& ctx, double r) {
    ConnectionSample out = christoffel(ctx, r);
    double g122 = 0, g313 = 0;
    switch (ctx.kind) {
        case SpaceKind::Spherical:
        case SpaceKind::Elliptic: g122 = std::cos(r) / std::sin(r), g313 = std::tan(r); break;
        case SpaceKind::Hyperbolic: g122 = std::cosh(r) / std::sinh(r), g313 = -std::tanh(r); break;
        case SpaceKind::Flat: g122 = 1 / r; break;
    }
    g122 /= ctx.rho;
    g313 *= ctx.gamma313_sign / ctx.rho;
    auto& g = out.rotation;
    g[1][2][2] = g122;
    g[2][1][2] = -g122;
    g[3][1][3] = g313;
    g[1][3][3] = -g313;
    out.p2 = {0, 0, g122};
    out.p3 = {0, g313, 0};
    return out;
}

Table3 christoffel_fd(const GeometryContext& ctx, double r, double h) {
    auto g = metric_diag(ctx, r);
    auto gp = metric_diag(ctx, r + h), gm = metric_diag(ctx, r - h);
    std::array<std::array<double, 4>, 4> dg{};  // dg[alpha][mu] = d_alpha g_mumu
    for (int mu = 0; mu < 4; ++mu) dg[1][mu] = (gp[mu] - gm[mu]) / (2 * h);
    Table3 G{};
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                // diagonal metric: only l = k survives
                double d_i_gjk = (j == k) ? dg[i][k] : 0;
                double d_j_gik = (i == k) ? dg[j][k] : 0;
                double d_k_gij = (i == j) ? dg[k][i] : 0;
                G[k][i][j] = 0.5 / g[k] * (d_i_gjk + d_j_gik - d_k_gij);
            }
    return G;
}

Table3 ricci_rotation_fd(const GeometryContext& ctx, double r, double h) {
    // Diagonal tetrad e_(a)^mu = delta_a^mu / sqrt|g_mumu|, lowered
    // e_(b)mu = g_mumu e_(b)^mu.
    auto upper = [&](double x) {
        auto g = metric_diag(ctx, x);
        std::array<double, 4> e{};
        for (int a = 0; a < 4; ++a) e[a] = 1 / std::sqrt(std::abs(g[a]));
        return e;
    };
    auto lower = [&](double x) {
        auto g = metric_diag(ctx, x);
        auto e = upper(x);
        for (int a = 0; a < 4; ++a) e[a] *= g[a];
        return e;
    };
    auto eu = upper(r), el = lower(r);
    auto elp = lower(r + h), elm = lower(r - h);
    auto G = christoffel_fd(ctx, r, h);
    Table3 gam{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                // beta = a, alpha = c by diagonality of the tetrad
                int beta = a, alpha = c;
                double d = (alpha == 1 && beta == b) ? (elp[b] - elm[b]) / (2 * h) : 0;
                double cov = d - G[b][alpha][beta] * el[b];
                gam[a][b][c] = eu[a] * cov * eu[c];
            }
    return gam;
}

}  // namespace cmaxwell
