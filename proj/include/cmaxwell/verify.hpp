#pragma once

#include <functional>
#include <vector>

#include "cmaxwell/modes.hpp"

namespace cmaxwell {

enum class Method { RK4, RK45 };

struct IntegrationConfig {
    Method method = Method::RK45;
    double abs_tol = 1e-12, rel_tol = 1e-12;
    double r_start = 0.1, r_end = 1.0;
    int max_steps = 200000;
    double step = 1e-3;  // initial step for RK45, fixed step for RK4
};

// Integrates (f2, f3) from init (at cfg.r_start) to cfg.r_end, f1 from the
// algebraic relation. Records every accepted step.
RadialProfile integrate_radial(const ModeSpec& mode, const RadialState& init, const IntegrationConfig& cfg);
RadialProfile integrate_radial(const ModeSpec& mode, const RadialState& init, const IntegrationConfig& cfg,
                               const GeometryContext& ctx);

struct ShootConfig {
    double eps = 1e-3;        // offset from both chart ends in r
    double scan_step = 0.05;  // bracketing scan in omega
    double bisect_tol = 1e-8;
    double abs_tol = 1e-13, rel_tol = 1e-12;
};

struct ShootingResult {
    std::vector<double> omega_found;
    std::function<double(double)> match_determinant;
    int bracket_count = 0;
};

// Eigenfrequencies of the scalar G2 equation on S3 from a regular start at
// the axis and the Wronskian against the regular solution at r = pi/2.
// Throws NoBracket when the range holds no sign change.
ShootingResult shoot_spectrum_s3(int m, int k, Interval omega_range, const ShootConfig& cfg = {});

// Same search on the coupled first-order (F2, F3) system with regularity
// imposed on the vector solution at both ends. Diagnostic only: it does
// not throw on an empty range.
ShootingResult shoot_spectrum_s3_system(int m, int k, Interval omega_range, const ShootConfig& cfg = {});

struct ResidualPair {
    double first_order = 0;   // all four separated equations
    double second_order = 0;  // the family's own second-order equation
};

ResidualPair residual_scan(const ModeSolution& sol, const std::vector<double>& grid);
ResidualPair residual_scan(const ModeSolution& sol, const std::vector<double>& grid, const GeometryContext& ctx);

// Max divergence-equation residual over the grid.
double consistency_scan(const ModeSolution& sol, const std::vector<double>& grid);
double consistency_scan(const ModeSolution& sol, const std::vector<double>& grid, const GeometryContext& ctx);

// Integrate from closed-form data at r0 to r1; max relative deviation of
// (f2, f3) from the closed form over points where |value| > 1e-8.
double oracle_agreement(const ModeSolution& sol, double r0, double r1, const IntegrationConfig& base = {});

// Wraps a profile so that its f is multiplied componentwise; used for
// sensitivity tests.
ModeSolution scaled_component(const ModeSolution& sol, int component, cplx factor);

// Thread budget: CURVED_MAXWELL_THREADS if set and positive, else the
// hardware concurrency.
int thread_budget();

// Runs fn(i) for i in [0, n) on up to thread_budget() threads.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace cmaxwell
