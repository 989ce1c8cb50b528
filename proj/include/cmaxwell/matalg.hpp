#pragma once

#include <array>
#include <complex>
#include <functional>

namespace cmaxwell {

using cplx = std::complex<double>;
using cvec3 = std::array<cplx, 3>;

struct ComplexMat4 {
    std::array<std::array<cplx, 4>, 4> e{};

    static ComplexMat4 identity();
    static ComplexMat4 from_int(const std::array<std::array<int, 4>, 4>& m);

    cplx& operator()(int i, int j) { return e[i][j]; }
    const cplx& operator()(int i, int j) const { return e[i][j]; }

    ComplexMat4 operator+(const ComplexMat4& o) const;
    ComplexMat4 operator-(const ComplexMat4& o) const;
    ComplexMat4 operator-() const;
    ComplexMat4 operator*(const ComplexMat4& o) const;
    ComplexMat4 operator*(cplx s) const;
    std::array<cplx, 4> operator*(const std::array<cplx, 4>& v) const;

    // Exact comparison; meaningful for integer-valued entries, which are
    // represented exactly in double.
    bool operator==(const ComplexMat4& o) const { return e == o.e; }
    double max_abs_diff(const ComplexMat4& o) const;
};

ComplexMat4 commutator(const ComplexMat4& a, const ComplexMat4& b);

// alpha^0 = I, alpha^1, alpha^2, alpha^3 of the matrix Maxwell equation.
std::array<ComplexMat4, 4> alpha_matrices();

std::array<ComplexMat4, 3> spin_generators();

// Symbol of -i d_0 + alpha^j d_j with d_a -> w_a.
ComplexMat4 flat_operator(const std::array<cplx, 4>& w);
// Same with the spatial part sign-flipped: -i w_0 - alpha^j w_j.
ComplexMat4 flat_operator_conjugate(const std::array<cplx, 4>& w);

struct FieldColumn {
    cplx c0{};
    cvec3 psi{};
};

bool is_physical(const FieldColumn& col, double tol = 1e-12);

using SpacetimePoint = std::array<double, 4>;  // (t, x, y, z)

struct ScalarSolution {
    std::function<cplx(const SpacetimePoint&)> phi;
    // F_a = d_a phi, a = 0..3
    std::function<std::array<cplx, 4>(const SpacetimePoint&)> grad;
};

using ColumnField = std::function<FieldColumn(const SpacetimePoint&)>;

// Columns of (i d_0 + alpha^j d_j) Phi, built from F_a. Throws
// WaveEquationViolated when the box residual of phi is too large at the
// probe points.
std::array<ColumnField, 4> scalar_to_maxwell(const ScalarSolution& phi,
                                             double wave_tol = 1e-6);

// Sum_a lambda_a Psi^a.
ColumnField combine_columns(const std::array<ColumnField, 4>& cols,
                            const std::array<cplx, 4>& lambda);

// |(-i d_0 + alpha^j d_j) Psi| at x by central differences, relative to the
// magnitude of the individual derivative terms.
double flat_maxwell_residual(const ColumnField& col, const SpacetimePoint& x,
                             double h = 1e-5);

// Relative box residual |d0^2 phi - lap phi| from central differences of
// the supplied gradient.
double wave_residual(const ScalarSolution& phi, const SpacetimePoint& x,
                     double h = 1e-5);

// Standard test scalars.
ScalarSolution plane_wave_z();          // exp(-i (t - z))
ScalarSolution constant_scalar(cplx c);
ScalarSolution linear_x();              // phi = x

}  // namespace cmaxwell
