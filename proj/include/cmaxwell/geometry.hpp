#pragma once

#include <array>
#include <string>
#include <utility>

namespace cmaxwell {

enum class SpaceKind { Spherical, Elliptic, Hyperbolic, Flat };

std::string to_string(SpaceKind k);
SpaceKind parse_space(const std::string& s);  // s3 | elliptic | h3 | flat

struct Interval {
    double lo, hi;
};

struct GeometryContext {
    SpaceKind kind = SpaceKind::Spherical;
    double rho = 1.0;  // curvature radius; geometry is evaluated at rho=1 and rescaled
    // Multiplies gamma_313 everywhere it is consumed. Only for sensitivity
    // tests of the radial consistency identity; keep at +1 otherwise.
    double gamma313_sign = 1.0;

    Interval r_range() const;
    Interval phi_range() const;
    Interval z_range() const;  // infinite ends for H3/flat reported as +-inf
};

inline constexpr double kSingularGuard = 1e-8;

using Table3 = std::array<std::array<std::array<double, 4>, 4>, 4>;

struct ConnectionSample {
    double r = 0;
    // christoffel[k][i][j] = Gamma^k_ij, coordinates (t, r, phi, z)
    Table3 christoffel{};
    // rotation[a][b][c] = gamma_abc in the diagonal frame
    Table3 rotation{};
    std::array<double, 3> p2{}, p3{};
    std::array<double, 3> v1{}, v2{}, v3{};  // time-rotation data, zero for static charts

    double gamma_r_phiphi() const { return christoffel[1][2][2]; }
    double gamma_r_zz() const { return christoffel[1][3][3]; }
    double gamma_phi_rphi() const { return christoffel[2][1][2]; }
    double gamma_z_rz() const { return christoffel[3][1][3]; }
    double gamma122() const { return rotation[1][2][2]; }
    double gamma313() const { return rotation[3][1][3]; }
};

// (g_tt, g_rr, g_phiphi, g_zz)
std::array<double, 4> metric_diag(const GeometryContext& ctx, double r);

// Closed-form Christoffel symbols.
ConnectionSample christoffel(const GeometryContext& ctx, double r);

// Closed-form Christoffel symbols and Ricci rotation coefficients.
ConnectionSample ricci_rotation(const GeometryContext& ctx, double r);

// Finite-difference oracles built from metric_diag alone. The rotation
// coefficients use gamma_abc = e_(a)^beta (nabla_alpha e_(b)beta) e_(c)^alpha.
Table3 christoffel_fd(const GeometryContext& ctx, double r, double h = 1e-5);
Table3 ricci_rotation_fd(const GeometryContext& ctx, double r, double h = 1e-5);

// Frame factors 1/sqrt(-g_phiphi) and 1/sqrt(-g_zz) at rho=1.
std::pair<double, double> angular_factors(SpaceKind kind, double r);

// omega in units of 1/rho converted to a physical angular frequency (c=1).
inline double physical_frequency(double omega, double rho) { return omega / rho; }

}  // namespace cmaxwell
