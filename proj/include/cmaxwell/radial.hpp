#pragma once

#include <array>
#include <functional>

#include "cmaxwell/geometry.hpp"
#include "cmaxwell/matalg.hpp"

namespace cmaxwell {

enum class Branch { General, MZero, KZero, Special };

struct ModeSpec {
    SpaceKind space = SpaceKind::Spherical;
    double omega = 1;
    int m = 0;
    // Real for every family except the exact sinh^2 cosh^B branch on H3,
    // whose axial number is complex.
    cplx k = 0;
    int n = -1;  // radial node index, -1 when not applicable
    Branch branch = Branch::General;
};

// Throws InvalidQuantumNumbers if S3/Elliptic numbers are not integers or
// violate the elliptic parity rule.
void validate(const ModeSpec& mode);

struct RadialState {
    double r = 0;
    cvec3 f{};   // (f1, f2, f3)
    cvec3 df{};  // r-derivatives, where known
};

// Coefficients of the separated system at r, taken from the frame data.
struct RadialFrame {
    double a = 0;     // 1/sqrt(-g_phiphi)
    double b = 0;     // 1/sqrt(-g_zz)
    double g122 = 0;  // gamma_122
    double g313 = 0;  // gamma_313
};

GeometryContext default_context(SpaceKind kind);
RadialFrame radial_frame(const GeometryContext& ctx, double r);

struct RadialDerivative {
    cplx f1;   // from the algebraic equation
    cplx df2;  // explicit first-order form
    cplx df3;
};

RadialDerivative radial_rhs(const ModeSpec& mode, const RadialState& state);
RadialDerivative radial_rhs(const ModeSpec& mode, const RadialState& state, const GeometryContext& ctx);

// Normalised residuals |sum of terms| / sum |terms| of the four radial
// equations (divergence, algebraic, f3-propagation, f2-propagation).
std::array<double, 4> system_residuals(const ModeSpec& mode, const RadialState& state,
                                       const GeometryContext& ctx);
std::array<double, 4> system_residuals(const ModeSpec& mode, const RadialState& state);

// The divergence equation alone, normalised as above; 0 for the zero field.
double consistency_residual(const ModeSpec& mode, const RadialState& state);
double consistency_residual(const ModeSpec& mode, const RadialState& state, const GeometryContext& ctx);

struct GPair {
    double y = 0;
    cplx G2, G3;
};

// S3: orthogonal map F2 = (G2 + G3)/sqrt2, F3 = (-G2 + G3)/sqrt2.
// H3: unitary map F2 = (G2 + i G3)/sqrt2, F3 = (i G2 + G3)/sqrt2.
GPair to_gpair(const ModeSpec& mode, cplx F2, cplx F3, double y = 0);
std::pair<cplx, cplx> from_gpair(const ModeSpec& mode, const GPair& g);

// y-variable per space: S3 y = sin^2 r; H3 y = -sinh^2 r.
double gpair_variable(SpaceKind kind, double r);

// P y'' + Q y' + R y = 0 coefficients at y.
struct OdeCoeffs {
    cplx P, Q, R;
};

struct GPairEquations {
    std::function<OdeCoeffs(double)> g2, g3;
    bool g2_degenerate = false, g3_degenerate = false;  // elimination divisor vanishes
};

// Second-order equations for G2 and G3 in the space's y-variable. With
// check=true a vanishing G2 divisor raises DegenerateElimination; G3
// degeneracy is only flagged.
GPairEquations gpair_second_order_coeffs(const ModeSpec& mode, bool check = true);

// Divisors of the two eliminations: S3 (m-k)^2 - w^2 and w^2 - (m+k)^2;
// H3 w^2 + (m-ik)^2 and w^2 + (m+ik)^2.
std::pair<cplx, cplx> elimination_divisors(const ModeSpec& mode);

}  // namespace cmaxwell

#include <string>
#include <vector>

namespace cmaxwell {

enum class Provenance { ClosedForm, Integrated };

struct RadialProfile {
    std::vector<double> r;
    std::vector<cvec3> f;
    Provenance provenance = Provenance::ClosedForm;
};

std::vector<double> uniform_grid(double lo, double hi, int n);

}  // namespace cmaxwell
