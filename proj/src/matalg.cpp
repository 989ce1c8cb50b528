#include "cmaxwell/matalg.hpp"

#include <algorithm>
#include <cmath>

#include "cmaxwell/errors.hpp"

namespace cmaxwell {

namespace {
constexpr cplx I{0.0, 1.0};

using Vec4 = std::array<cplx, 4>;

Vec4 as_vec(const FieldColumn& c) { return {c.c0, c.psi[0], c.psi[1], c.psi[2]}; }

double norm1(const Vec4& v) {
    double s = 0;
    for (auto x : v) s += std::abs(x);
    return s;
}
}  // namespace

ComplexMat4 ComplexMat4::identity() {
    ComplexMat4 m;
    for (int i = 0; i < 4; ++i) m.e[i][i] = 1.0;
    return m;
}

ComplexMat4 ComplexMat4::from_int(const std::array<std::array<int, 4>, 4>& a) {
    ComplexMat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.e[i][j] = double(a[i][j]);
    return m;
}

ComplexMat4 ComplexMat4::operator+(const ComplexMat4& o) const {
    ComplexMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.e[i][j] = e[i][j] + o.e[i][j];
    return r;
}

ComplexMat4 ComplexMat4::operator-(const ComplexMat4& o) const { return *this + (-o); }

ComplexMat4 ComplexMat4::operator-() const { return *this * cplx(-1.0); }

ComplexMat4 ComplexMat4::operator*(const ComplexMat4& o) const {
    ComplexMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0;
            for (int l = 0; l < 4; ++l) s += e[i][l] * o.e[l][j];
            r.e[i][j] = s;
        }
    return r;
}

ComplexMat4 ComplexMat4::operator*(cplx s) const {
    ComplexMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.e[i][j] = e[i][j] * s;
    return r;
}

std::array<cplx, 4> ComplexMat4::operator*(const std::array<cplx, 4>& v) const {
    std::array<cplx, 4> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i] += e[i][j] * v[j];
    return r;
}

double ComplexMat4::max_abs_diff(const ComplexMat4& o) const {
    double d = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) d = std::max(d, std::abs(e[i][j] - o.e[i][j]));
    return d;
}

ComplexMat4 commutator(const ComplexMat4& a, const ComplexMat4& b) { return a * b - b * a; }

std::array<ComplexMat4, 4> alpha_matrices() {
    return {ComplexMat4::identity(),
            ComplexMat4::from_int({{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}}),
            ComplexMat4::from_int({{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}}),
            ComplexMat4::from_int({{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}})};
}

std::array<ComplexMat4, 3> spin_generators() {
    return {ComplexMat4::from_int({{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}}),
            ComplexMat4::from_int({{{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, -1, 0, 0}}}),
            ComplexMat4::from_int({{{0, 0, 0, 0}, {0, 0, -1, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}}})};
}

ComplexMat4 flat_operator(const std::array<cplx, 4>& w) {
    auto a = alpha_matrices();
    ComplexMat4 r = a[0] * (-I * w[0]);
    for (int j = 1; j < 4; ++j) r = r + a[j] * w[j];
    return r;
}

ComplexMat4 flat_operator_conjugate(const std::array<cplx, 4>& w) {
    return flat_operator({w[0], -w[1], -w[2], -w[3]});
}

bool is_physical(const FieldColumn& col, double tol) { return std::abs(col.c0) < tol; }

double wave_residual(const ScalarSolution& phi, const SpacetimePoint& x, double h) {
    // d_a F_a with signature (+,-,-,-)
    std::array<cplx, 4> second{};
    for (int a = 0; a < 4; ++a) {
        auto xp = x, xm = x;
        xp[a] += h;
        xm[a] -= h;
        second[a] = (phi.grad(xp)[a] - phi.grad(xm)[a]) / (2 * h);
    }
    cplx box = second[0] - second[1] - second[2] - second[3];
    double scale = 0;
    for (auto s : second) scale += std::abs(s);
    if (scale == 0) return 0;
    return std::abs(box) / scale;
}

std::array<ColumnField, 4> scalar_to_maxwell(const ScalarSolution& phi, double wave_tol) {
    static const SpacetimePoint probes[] = {
        {0.1, 0.2, -0.3, 0.4}, {-0.7, 0.5, 0.9, -0.2}, {1.3, -1.1, 0.35, 0.8},
        {0.0, 0.0, 0.0, 0.0},  {2.1, 0.6, -0.45, -1.7}, {-0.25, 1.9, 1.2, 0.05}};
    for (const auto& p : probes)
        if (wave_residual(phi, p) > wave_tol)
            throw WaveEquationViolated("scalar does not satisfy the flat wave equation");

    auto g = phi.grad;
    // Columns of i F_0 I + F_j alpha^j.
    std::array<ColumnField, 4> cols;
    cols[0] = [g](const SpacetimePoint& x) {
        auto F = g(x);
        return FieldColumn{I * F[0], {-F[1], -F[2], -F[3]}};
    };
    cols[1] = [g](const SpacetimePoint& x) {
        auto F = g(x);
        return FieldColumn{F[1], {I * F[0], F[3], -F[2]}};
    };
    cols[2] = [g](const SpacetimePoint& x) {
        auto F = g(x);
        return FieldColumn{F[2], {-F[3], I * F[0], F[1]}};
    };
    cols[3] = [g](const SpacetimePoint& x) {
        auto F = g(x);
        return FieldColumn{F[3], {F[2], -F[1], I * F[0]}};
    };
    return cols;
}

ColumnField combine_columns(const std::array<ColumnField, 4>& cols,
                            const std::array<cplx, 4>& lambda) {
    return [cols, lambda](const SpacetimePoint& x) {
        FieldColumn r;
        for (int a = 0; a < 4; ++a) {
            if (lambda[a] == cplx(0)) continue;
            auto c = cols[a](x);
            r.c0 += lambda[a] * c.c0;
            for (int k = 0; k < 3; ++k) r.psi[k] += lambda[a] * c.psi[k];
        }
        return r;
    };
}

double flat_maxwell_residual(const ColumnField& col, const SpacetimePoint& x, double h) {
    auto a = alpha_matrices();
    Vec4 total{};
    double scale = 0;
    for (int d = 0; d < 4; ++d) {
        auto xp = x, xm = x;
        xp[d] += h;
        xm[d] -= h;
        Vec4 vp = as_vec(col(xp)), vm = as_vec(col(xm)), dv{};
        for (int i = 0; i < 4; ++i) dv[i] = (vp[i] - vm[i]) / (2 * h);
        Vec4 term = d == 0 ? Vec4{-I * dv[0], -I * dv[1], -I * dv[2], -I * dv[3]} : a[d] * dv;
        for (int i = 0; i < 4; ++i) total[i] += term[i];
        scale += norm1(term);
    }
    if (scale == 0) return 0;
    return norm1(total) / scale;
}

ScalarSolution plane_wave_z() {
    ScalarSolution s;
    s.phi = [](const SpacetimePoint& x) { return std::exp(-I * (x[0] - x[3])); };
    s.grad = [](const SpacetimePoint& x) {
        cplx p = std::exp(-I * (x[0] - x[3]));
        return std::array<cplx, 4>{-I * p, 0.0, 0.0, I * p};
    };
    return s;
}

ScalarSolution constant_scalar(cplx c) {
    ScalarSolution s;
    s.phi = [c](const SpacetimePoint&) { return c; };
    s.grad = [](const SpacetimePoint&) { return std::array<cplx, 4>{}; };
    return s;
}

ScalarSolution linear_x() {
    ScalarSolution s;
    s.phi = [](const SpacetimePoint& x) { return cplx(x[1]); };
    s.grad = [](const SpacetimePoint&) { return std::array<cplx, 4>{0.0, 1.0, 0.0, 0.0}; };
    return s;
}

}  // namespace cmaxwell
