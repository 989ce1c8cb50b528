#include "cmaxwell/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

#include <boost/numeric/odeint.hpp>

#include "cmaxwell/errors.hpp"

namespace cmaxwell {

namespace odeint = boost::numeric::odeint;

namespace {

constexpr double kPi = std::numbers::pi;

bool compact(SpaceKind k) { return k == SpaceKind::Spherical || k == SpaceKind::Elliptic; }

// Adaptive Dormand-Prince drive in either direction; on_step(t, x) after
// every accepted step.
template <class State, class Sys, class OnStep>
void drive_adaptive(Sys sys, State& x, double t0, double t1, double abs_tol, double rel_tol, double h0,
                    int max_steps, OnStep on_step) {
    auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(abs_tol, rel_tol);
    const double dir = t1 >= t0 ? 1.0 : -1.0;
    double t = t0, dt = dir * std::abs(h0);
    int attempts = 0;
    while (dir * (t1 - t) > 0) {
        if (dir * (t + dt - t1) > 0) dt = t1 - t;
        if (++attempts > max_steps) throw StepLimitExceeded("adaptive integration exceeded max_steps");
        double t_before = t;
        if (stepper.try_step(sys, x, t, dt) == odeint::success) {
            if (std::abs(t1 - t) < 1e-14 * std::max(1.0, std::abs(t1))) t = t1;
            on_step(t, x);
        } else if (t == t_before && std::abs(dt) < 1e-15) {
            throw SingularityApproached("step size underflow");
        }
    }
}

template <class State, class Sys, class OnStep>
void drive_fixed(Sys sys, State& x, double t0, double t1, double h, OnStep on_step, int max_steps) {
    odeint::runge_kutta4<State> stepper;
    int n = std::max(1, int(std::ceil(std::abs(t1 - t0) / std::abs(h) - 1e-9)));
    if (n > max_steps) throw StepLimitExceeded("fixed-step integration exceeds max_steps");
    double dt = (t1 - t0) / n;
    for (int i = 0; i < n; ++i) {
        double t = t0 + i * dt;
        stepper.do_step(sys, x, t, dt);
        on_step(i + 1 == n ? t1 : t0 + (i + 1) * dt, x);
    }
}

void guard_interval(const GeometryContext& ctx, double a, double b) {
    double lo = std::min(a, b), hi = std::max(a, b);
    if (lo < kSingularGuard) throw SingularityApproached("integration reaches the axis");
    if (compact(ctx.kind) && hi > kPi / 2 - kSingularGuard)
        throw SingularityApproached("integration reaches r = pi/2");
}

}  // namespace

RadialProfile integrate_radial(const ModeSpec& mode, const RadialState& init, const IntegrationConfig& cfg,
                               const GeometryContext& ctx) {
    if (mode.omega == 0) throw ZeroFrequency("omega = 0");
    if (std::abs(init.r - cfg.r_start) > 1e-14) throw OutOfRange("initial state not at r_start");
    guard_interval(ctx, cfg.r_start, cfg.r_end);

    using State = std::array<cplx, 2>;
    auto sys = [&](const State& x, State& dx, double r) {
        RadialState s{r, {0.0, x[0], x[1]}, {}};
        auto d = radial_rhs(mode, s, ctx);
        dx[0] = d.df2;
        dx[1] = d.df3;
    };
    RadialProfile prof;
    prof.provenance = Provenance::Integrated;
    auto record = [&](double r, const State& x) {
        RadialState s{r, {0.0, x[0], x[1]}, {}};
        auto d = radial_rhs(mode, s, ctx);
        prof.r.push_back(r);
        prof.f.push_back({d.f1, x[0], x[1]});
    };
    State x{init.f[1], init.f[2]};
    record(cfg.r_start, x);
    if (cfg.method == Method::RK4)
        drive_fixed(sys, x, cfg.r_start, cfg.r_end, cfg.step, record, cfg.max_steps);
    else
        drive_adaptive(sys, x, cfg.r_start, cfg.r_end, cfg.abs_tol, cfg.rel_tol, cfg.step, cfg.max_steps, record);
    return prof;
}

RadialProfile integrate_radial(const ModeSpec& mode, const RadialState& init, const IntegrationConfig& cfg) {
    return integrate_radial(mode, init, cfg, default_context(mode.space));
}

// ---------------------------------------------------------------- shooting

namespace {

struct GEquation {
    double lambda, mu, nu;  // (w^2+2w)/4, m^2/4, k^2/4
};

// 2-term Frobenius solution s^{2p}(1 + c s^2) of the y-form equation with
// s^2 the local variable, returned as (value, d/dt) where t is the local
// variable and dt/dr is supplied.
std::array<double, 2> frobenius(double p, double q, double lambda, double t, double dt_dr) {
    // exponent p = sqrt(own square coefficient), q = other end's square coefficient
    double c1 = (p * p + p + q - lambda) / (2 * p + 1);
    double tp = p == 0 ? 1.0 : std::pow(t, p);
    double dtp = p == 0 ? 0.0 : p * std::pow(t, p - 1);
    double val = tp * (1 + c1 * t);
    double der = dtp * (1 + c1 * t) + tp * c1;
    return {val, der * dt_dr};
}

double g2_determinant(int m, int k, double w, const ShootConfig& cfg) {
    GEquation eq{(w * w + 2 * w) / 4, m * m / 4.0, k * k / 4.0};
    const double A = std::abs(m) / 2.0, B = std::abs(k) / 2.0;
    const double r0 = cfg.eps, r1 = kPi / 2 - cfg.eps;

    using State = std::array<double, 2>;
    auto sys = [&](const State& x, State& dx, double r) {
        double s = std::sin(r), c = std::cos(r);
        double V = w * w + 2 * w - m * m / (s * s) - k * k / (c * c);
        dx[0] = x[1];
        dx[1] = -2 * std::cos(2 * r) / std::sin(2 * r) * x[1] - V * x[0];
    };
    double s0 = std::sin(r0);
    auto left = frobenius(A, eq.nu, eq.lambda, s0 * s0, std::sin(2 * r0));
    State x{left[0], left[1]};
    drive_adaptive(sys, x, r0, r1, cfg.abs_tol, cfg.rel_tol, 1e-4, 2000000, [](double, const State&) {});

    double c1 = std::cos(r1);
    auto right = frobenius(B, eq.mu, eq.lambda, c1 * c1, -std::sin(2 * r1));
    double W = x[0] * right[1] - x[1] * right[0];
    double norm = std::hypot(x[0], x[1]) * std::hypot(right[0], right[1]);
    return W / norm;
}

// reject_jumps: drop sign changes where |D| stays finite at the limit point.
std::vector<double> find_roots(const std::function<double(double)>& D, Interval range, const ShootConfig& cfg,
                               int& brackets, bool reject_jumps = false) {
    std::vector<double> roots;
    brackets = 0;
    int n = int(std::floor((range.hi - range.lo) / cfg.scan_step + 1e-9));
    std::vector<double> xs, ds;
    for (int i = 1; i <= n; ++i) xs.push_back(range.lo + i * cfg.scan_step);
    if (xs.empty() || xs.back() < range.hi - 1e-12) xs.push_back(range.hi);
    ds.resize(xs.size());
    parallel_for(int(xs.size()), [&](int i) { ds[i] = D(xs[i]); });
    for (size_t i = 0; i < xs.size(); ++i) {
        if (ds[i] == 0) {
            roots.push_back(xs[i]);
            ++brackets;
            continue;
        }
        if (i + 1 < xs.size() && ds[i + 1] != 0 && (ds[i] < 0) != (ds[i + 1] < 0)) {
            ++brackets;
            double a = xs[i], b = xs[i + 1], fa = ds[i];
            const double scale = std::max(std::abs(ds[i]), std::abs(ds[i + 1]));
            while (b - a > cfg.bisect_tol) {
                double mid = 0.5 * (a + b), fm = D(mid);
                if (fm == 0) {
                    a = b = mid;
                    break;
                }
                if ((fm < 0) == (fa < 0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            double root = 0.5 * (a + b);
            if (!reject_jumps || std::abs(D(root)) <= 1e-4 * scale) roots.push_back(root);
        }
    }
    return roots;
}

}  // namespace

ShootingResult shoot_spectrum_s3(int m, int k, Interval range, const ShootConfig& cfg) {
    if (range.lo < 0 || range.hi <= range.lo) throw OutOfRange("bad omega range");
    ShootingResult res;
    res.match_determinant = [=](double w) { return g2_determinant(m, k, w, cfg); };
    res.omega_found = find_roots(res.match_determinant, range, cfg, res.bracket_count);
    if (res.omega_found.empty()) throw NoBracket("no sign change of the matching determinant in range");
    return res;
}

namespace {

// Regular eigenvector of the residue matrix [[p, q], [s, -p]] for eigenvalue l.
std::array<double, 2> regular_vector(double p, double q, double s, double l) {
    if (std::abs(q) > 1e-14 || std::abs(l - p) > 1e-14) return {q, l - p};
    if (std::abs(s) > 1e-14 || std::abs(l + p) > 1e-14) return {l + p, s};
    return {1.0, 0.0};
}

double system_determinant(int m, int k, double w, const ShootConfig& cfg) {
    using State = std::array<double, 2>;
    const double km = double(k) * m;
    // dF/dr = N(y) F / (w sin r cos r), y = sin^2 r
    auto sys = [&](const State& x, State& dx, double r) {
        double s = std::sin(r), c = std::cos(r), y = s * s;
        double sc = w * s * c;
        dx[0] = (km * x[0] + (w * w * y - m * m) * x[1]) / sc;
        dx[1] = ((k * k - w * w * (1 - y)) * x[0] - km * x[1]) / sc;
    };
    const double r0 = cfg.eps, r1 = kPi / 2 - cfg.eps, rm = kPi / 4;
    const double am = std::abs(m), ak = std::abs(k);
    // y dF/dy -> [[km, -m^2], [k^2 - w^2, -km]] / (2w) at y = 0
    auto vl = regular_vector(km / (2 * w), -m * m / (2 * w), (k * k - w * w) / (2 * w), am / 2);
    // u dF/du -> -[[km, w^2 - m^2], [k^2, -km]] / (2w) at u = 1 - y = 0
    auto vr = regular_vector(-km / (2 * w), -(w * w - m * m) / (2 * w), -k * k / (2 * w), ak / 2);
    double y0 = std::pow(std::sin(r0), 2), u1 = std::pow(std::cos(r1), 2);
    State L{vl[0] * std::pow(y0, am / 2), vl[1] * std::pow(y0, am / 2)};
    State R{vr[0] * std::pow(u1, ak / 2), vr[1] * std::pow(u1, ak / 2)};
    auto nop = [](double, const State&) {};
    drive_adaptive(sys, L, r0, rm, cfg.abs_tol, cfg.rel_tol, 1e-4, 2000000, nop);
    drive_adaptive(sys, R, r1, rm, cfg.abs_tol, cfg.rel_tol, 1e-4, 2000000, nop);
    return (L[0] * R[1] - L[1] * R[0]) / (std::hypot(L[0], L[1]) * std::hypot(R[0], R[1]));
}

}  // namespace

ShootingResult shoot_spectrum_s3_system(int m, int k, Interval range, const ShootConfig& cfg) {
    ShootingResult res;
    res.match_determinant = [=](double w) { return system_determinant(m, k, w, cfg); };
    res.omega_found = find_roots(res.match_determinant, range, cfg, res.bracket_count, true);
    return res;
}

// ---------------------------------------------------------------- residuals

ResidualPair residual_scan(const ModeSolution& sol, const std::vector<double>& grid, const GeometryContext& ctx) {
    ResidualPair out;
    for (double r : grid) {
        auto res = system_residuals(sol.spec, sol.state(r), ctx);
        out.first_order = std::max(out.first_order, *std::max_element(res.begin(), res.end()));
        if (sol.second_order_residual) out.second_order = std::max(out.second_order, sol.second_order_residual(r));
    }
    return out;
}

ResidualPair residual_scan(const ModeSolution& sol, const std::vector<double>& grid) {
    return residual_scan(sol, grid, default_context(sol.spec.space));
}

double consistency_scan(const ModeSolution& sol, const std::vector<double>& grid, const GeometryContext& ctx) {
    double worst = 0;
    for (double r : grid) worst = std::max(worst, consistency_residual(sol.spec, sol.state(r), ctx));
    return worst;
}

double consistency_scan(const ModeSolution& sol, const std::vector<double>& grid) {
    return consistency_scan(sol, grid, default_context(sol.spec.space));
}

double oracle_agreement(const ModeSolution& sol, double r0, double r1, const IntegrationConfig& base) {
    IntegrationConfig cfg = base;
    cfg.r_start = r0;
    cfg.r_end = r1;
    auto prof = integrate_radial(sol.spec, sol.state(r0), cfg);
    double worst = 0;
    for (size_t i = 0; i < prof.r.size(); ++i) {
        auto exact = sol.values(prof.r[i]);
        for (int c = 1; c < 3; ++c) {
            double mag = std::abs(exact[c]);
            if (mag > 1e-8) worst = std::max(worst, std::abs(prof.f[i][c] - exact[c]) / mag);
        }
    }
    return worst;
}

ModeSolution scaled_component(const ModeSolution& sol, int component, cplx factor) {
    ModeSolution out = sol;
    auto f = sol.f;
    out.f = [f, component, factor](double r) {
        auto v = f(r);
        v[component] = factor * v[component];
        return v;
    };
    return out;
}

// ---------------------------------------------------------------- threads

int thread_budget() {
    if (const char* env = std::getenv("CURVED_MAXWELL_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    int nt = std::min(n, thread_budget());
    if (nt <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            for (int i; (i = next++) < n;) {
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace cmaxwell
