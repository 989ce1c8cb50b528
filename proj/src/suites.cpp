#include "cmaxwell/suites.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include "cmaxwell/errors.hpp"
#include "cmaxwell/matalg.hpp"
#include "cmaxwell/verify.hpp"

namespace cmaxwell {

namespace {

constexpr double kPi = std::numbers::pi;

Check exact(std::string name, bool ok) { return {std::move(name), ok ? 0.0 : 1.0, 0.0, ok}; }
Check bounded(std::string name, double v, double tol) { return {std::move(name), v, tol, v < tol}; }

SuiteReport algebra_suite() {
    SuiteReport rep{"algebra", {}};
    auto a = alpha_matrices();
    auto minus_I = -ComplexMat4::identity();
    for (int i = 1; i <= 3; ++i)
        rep.checks.push_back(exact("alpha" + std::to_string(i) + "^2 = -I", a[i] * a[i] == minus_I));
    const int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    for (auto& c : cyc) {
        std::string ij = std::to_string(c[0]) + std::to_string(c[1]), kk = std::to_string(c[2]);
        rep.checks.push_back(exact("alpha" + ij + " = alpha" + kk, a[c[0]] * a[c[1]] == a[c[2]]));
        rep.checks.push_back(exact("alpha" + std::to_string(c[1]) + std::to_string(c[0]) + " = -alpha" + kk,
                                   a[c[1]] * a[c[0]] == -a[c[2]]));
    }
    for (int i = 1; i <= 3; ++i)
        rep.checks.push_back(exact("alpha0 alpha" + std::to_string(i) + " = alpha" + std::to_string(i),
                                   a[0] * a[i] == a[i] && a[i] * a[0] == a[i]));
    return rep;
}

SuiteReport geometry_suite(const SuiteOptions& opt) {
    SuiteReport rep{"geometry", {}};
    for (SpaceKind kind : {SpaceKind::Spherical, SpaceKind::Hyperbolic}) {
        GeometryContext ctx;
        ctx.kind = kind;
        ctx.gamma313_sign = opt.gamma313_sign;
        double hi = kind == SpaceKind::Spherical ? kPi / 2 - 0.05 : 3.0;
        double worst_g = 0, worst_rot = 0;
        for (double r : uniform_grid(0.05, hi, 25)) {
            auto cs = ricci_rotation(ctx, r);
            auto gf = christoffel_fd(ctx, r);
            auto rf = ricci_rotation_fd(ctx, r);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    for (int l = 0; l < 4; ++l) {
                        worst_g = std::max(worst_g, std::abs(cs.christoffel[i][j][l] - gf[i][j][l]));
                        worst_rot = std::max(worst_rot, std::abs(cs.rotation[i][j][l] - rf[i][j][l]));
                    }
        }
        rep.checks.push_back(bounded(to_string(kind) + " christoffel vs finite differences", worst_g, 1e-7));
        rep.checks.push_back(bounded(to_string(kind) + " rotation coefficients vs finite differences", worst_rot, 1e-7));
    }
    return rep;
}

SuiteReport radial_suite(const SuiteOptions& opt) {
    SuiteReport rep{"radial", {}};
    auto run = [&](const std::vector<ModeSolution>& cat, const std::string& label) {
        double worst = 0;
        for (auto& sol : cat) {
            GeometryContext ctx = default_context(sol.spec.space);
            ctx.gamma313_sign = opt.gamma313_sign;
            worst = std::max(worst, consistency_scan(sol, uniform_grid(sol.window.lo, sol.window.hi, 256), ctx));
        }
        rep.checks.push_back(bounded(label + " divergence identity", worst, 1e-9));
    };
    run(s3_catalogue(), "s3 catalogue");
    run(h3_catalogue(), "h3 catalogue");
    return rep;
}

SuiteReport modes_suite(const SuiteOptions& opt) {
    SuiteReport rep{"modes", {}};
    auto run = [&](const std::vector<ModeSolution>& cat, const std::string& label) {
        ResidualPair worst;
        for (auto& sol : cat) {
            GeometryContext ctx = default_context(sol.spec.space);
            ctx.gamma313_sign = opt.gamma313_sign;
            auto r = residual_scan(sol, uniform_grid(sol.window.lo, sol.window.hi, 256), ctx);
            worst.first_order = std::max(worst.first_order, r.first_order);
            worst.second_order = std::max(worst.second_order, r.second_order);
        }
        rep.checks.push_back(bounded(label + " first-order residual", worst.first_order, 1e-9));
        rep.checks.push_back(bounded(label + " second-order residual", worst.second_order, 1e-9));
    };
    run(s3_catalogue(), "s3 catalogue");
    run(h3_catalogue(), "h3 catalogue");
    bool ok = true;
    for (int m = -6; m <= 6; ++m)
        for (int k = -6; k <= 6; ++k)
            for (int n = 0; n <= 2; ++n) {
                int w = 2 * n + std::abs(m) + std::abs(k);
                if (w == 0) continue;
                ok &= elliptic_filter(m, k).accept == (w % 2 == 0);
            }
    rep.checks.push_back(exact("elliptic filter <=> even omega", ok));
    return rep;
}

SuiteReport spectrum_suite() {
    SuiteReport rep{"spectrum", {}};
    std::mutex mu;
    std::vector<std::pair<int, int>> pairs;
    for (int m = -2; m <= 2; ++m)
        for (int k = -2; k <= 2; ++k) pairs.emplace_back(m, k);
    std::vector<Check> checks(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto [m, k] = pairs[i];
        int base = std::abs(m) + std::abs(k);
        std::vector<double> expect;
        for (int n = 0; n <= 2; ++n)
            if (2 * n + base > 0) expect.push_back(2 * n + base);
        double err = 0;
        try {
            auto res = shoot_spectrum_s3(m, k, {0.25, 4.5 + base});
            if (res.omega_found.size() != expect.size()) err = 1;
            else
                for (size_t j = 0; j < expect.size(); ++j) err = std::max(err, std::abs(res.omega_found[j] - expect[j]));
        } catch (const NoBracket&) {
            err = 1;
        }
        checks[i] = bounded("shooting (m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ")", err, 1e-6);
    }
    rep.checks = checks;
    return rep;
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<std::string> suite_names() { return {"algebra", "geometry", "radial", "modes", "spectrum"}; }

std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& opt) {
    auto one = [&](const std::string& s) -> SuiteReport {
        if (s == "algebra") return algebra_suite();
        if (s == "geometry") return geometry_suite(opt);
        if (s == "radial") return radial_suite(opt);
        if (s == "modes") return modes_suite(opt);
        if (s == "spectrum") return spectrum_suite();
        throw OutOfRange("unknown suite '" + s + "'");
    };
    if (name != "all") return {one(name)};
    auto names = suite_names();
    std::vector<SuiteReport> out(names.size());
    parallel_for(int(names.size()), [&](int i) { out[i] = one(names[i]); });
    return out;
}

}  // namespace cmaxwell
