// Acceptance driver: one PASS/FAIL line per criterion. Exit status is 0 iff
// every criterion outside kKnownFailures passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cmaxwell/geometry.hpp"
#include "cmaxwell/matalg.hpp"
#include "cmaxwell/modes.hpp"
#include "cmaxwell/verify.hpp"

using namespace cmaxwell;

namespace {

const cplx I{0, 1};
constexpr double kPi = std::numbers::pi;

// Criterion 6: the H3 amplitude pair in factorised form does not satisfy
// the relation it is derived from (see README).
const std::set<int> kKnownFailures = {6};

struct Outcome {
    bool passed;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double max_seconds;
    std::function<Outcome()> run;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

// ---- 1: algebra

using IntMat = std::array<std::array<int, 4>, 4>;

IntMat imul(const IntMat& a, const IntMat& b) {
    IntMat c{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int l = 0; l < 4; ++l) c[i][j] += a[i][l] * b[l][j];
    return c;
}

IntMat neg_eye() {
    IntMat e{};
    for (int i = 0; i < 4; ++i) e[i][i] = -1;
    return e;
}

Outcome algebra() {
    auto a = alpha_matrices();
    const auto one = ComplexMat4::identity();
    int failed = 0, total = 0;
    auto expect = [&](bool ok) { ++total, failed += !ok; };

    expect(a[0] == one);
    for (int i = 1; i <= 3; ++i) {
        expect(a[i] * a[i] == -one);
        expect(a[0] * a[i] == a[i] && a[i] * a[0] == a[i]);
    }
    for (auto [i, j, k] : {std::array<int, 3>{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}) {
        expect(a[i] * a[j] == a[k]);
        expect(a[j] * a[i] == -a[k]);
    }
    auto s = spin_generators();
    expect(commutator(s[0], s[1]) == s[2]);
    expect(commutator(s[1], s[2]) == s[0]);
    expect(commutator(s[2], s[0]) == s[1]);
    // symbol identity with integer frequencies: L(w) L*(w) = (-w0^2 + |w|^2) I
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> u(-7, 7);
    for (int t = 0; t < 50; ++t) {
        std::array<cplx, 4> w{double(u(rng)), double(u(rng)), double(u(rng)), double(u(rng))};
        double q = -std::norm(w[0]) + std::norm(w[1]) + std::norm(w[2]) + std::norm(w[3]);
        expect(flat_operator(w) * flat_operator_conjugate(w) == one * q);
    }

    // Re-derivation: first columns unknown in {-1,0,1}^4, squares must be -I.
    const IntMat t[3] = {{{{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}},
                         {{{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, -1, 0, 0}}},
                         {{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}}}};
    int unique = 0;
    for (int i = 0; i < 3; ++i) {
        std::vector<IntMat> hits;
        for (int c = 0; c < 81; ++c) {
            IntMat m = t[i];
            int code = c;
            for (int r = 0; r < 4; ++r, code /= 3) m[r][0] = code % 3 - 1;
            if (imul(m, m) == neg_eye()) hits.push_back(m);
        }
        if (hits.size() == 1 && ComplexMat4::from_int(hits[0]) == a[i + 1]) ++unique;
    }
    expect(unique == 3);
    return {failed == 0, std::to_string(total - failed) + "/" + std::to_string(total) + " exact identities"};
}

// ---- 2: geometry

std::array<double, 4> metric(SpaceKind kind, double r) {
    if (kind == SpaceKind::Hyperbolic) return {1, -1, -std::sinh(r) * std::sinh(r), -std::cosh(r) * std::cosh(r)};
    return {1, -1, -std::sin(r) * std::sin(r), -std::cos(r) * std::cos(r)};
}

// Gamma^k_ij for a diagonal metric depending on r only.
Table3 christoffel_oracle(SpaceKind kind, double r) {
    const double h = 1e-5;
    auto gp = metric(kind, r + h), gm = metric(kind, r - h), g = metric(kind, r);
    std::array<double, 4> dg{};
    for (int i = 0; i < 4; ++i) dg[i] = (gp[i] - gm[i]) / (2 * h);
    Table3 G{};
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double s = 0;
                if (k == j && i == 1) s += dg[k];
                if (k == i && j == 1) s += dg[k];
                if (i == j && k == 1) s -= dg[i];
                G[k][i][j] = 0.5 * s / g[k];
            }
    return G;
}

Outcome geometry() {
    std::mt19937_64 rng(11);
    double worst = 0;
    for (auto kind : {SpaceKind::Spherical, SpaceKind::Hyperbolic}) {
        GeometryContext ctx;
        ctx.kind = kind;
        std::uniform_real_distribution<double> ur(0.05, kind == SpaceKind::Hyperbolic ? 3.0 : kPi / 2 - 0.05);
        for (int t = 0; t < 50; ++t) {
            double r = ur(rng);
            auto closed = ricci_rotation(ctx, r);
            auto G = christoffel_oracle(kind, r);
            auto rot = ricci_rotation_fd(ctx, r);
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    for (int c = 0; c < 4; ++c) {
                        worst = std::max(worst, std::abs(closed.christoffel[a][b][c] - G[a][b][c]));
                        worst = std::max(worst, std::abs(closed.rotation[a][b][c] - rot[a][b][c]));
                    }
        }
    }
    return {worst < 1e-7, "max |closed - fd| = " + fmt(worst) + " (tol 1e-7)"};
}

// ---- 3, 4: catalogue residuals

std::vector<ModeSolution> catalogue() {
    auto all = s3_catalogue();
    auto h = h3_catalogue();
    all.insert(all.end(), h.begin(), h.end());
    return all;
}

Outcome consistency() {
    auto modes = catalogue();
    std::vector<double> worst(modes.size());
    parallel_for(int(modes.size()), [&](int i) {
        auto& s = modes[i];
        worst[i] = consistency_scan(s, uniform_grid(s.window.lo, s.window.hi, 256));
    });
    double w = *std::max_element(worst.begin(), worst.end());
    return {w < 1e-9, std::to_string(modes.size()) + " modes, max divergence residual " + fmt(w) + " (tol 1e-9)"};
}

Outcome second_order() {
    auto modes = catalogue();
    std::vector<double> worst(modes.size());
    parallel_for(int(modes.size()), [&](int i) {
        auto& s = modes[i];
        worst[i] = residual_scan(s, uniform_grid(s.window.lo, s.window.hi, 256)).second_order;
    });
    double w = *std::max_element(worst.begin(), worst.end());
    return {w < 1e-9, std::to_string(modes.size()) + " modes, max second-order residual " + fmt(w) + " (tol 1e-9)"};
}

// ---- 5: spectrum

Outcome spectrum() {
    std::vector<std::pair<int, int>> pairs;
    for (int m = -2; m <= 2; ++m)
        for (int k = -2; k <= 2; ++k) pairs.push_back({m, k});
    std::vector<double> err(pairs.size());
    std::vector<int> spurious(pairs.size());
    parallel_for(int(pairs.size()), [&](int i) {
        auto [m, k] = pairs[i];
        int base = std::abs(m) + std::abs(k);
        std::vector<double> expect;
        for (int n = 0; n <= 2; ++n)
            if (2 * n + base > 0) expect.push_back(2 * n + base);
        auto got = shoot_spectrum_s3(m, k, {0.25, 4.5 + base}).omega_found;
        spurious[i] = int(got.size()) - int(expect.size());
        double e = 0;
        if (got.size() == expect.size())
            for (size_t j = 0; j < got.size(); ++j) e = std::max(e, std::abs(got[j] - expect[j]));
        else
            e = INFINITY;
        err[i] = e;
    });
    double w = *std::max_element(err.begin(), err.end());
    int bad = int(std::count_if(spurious.begin(), spurious.end(), [](int s) { return s != 0; }));
    return {w < 1e-6 && bad == 0, "25 (m,k) pairs, max |omega - (2n+|m|+|k|)| = " + fmt(w) +
                                      " (tol 1e-6), pairs with wrong root count: " + std::to_string(bad)};
}

// ---- 6: amplitude relations

// S3 relation at y=0 with F(0)=1; the derivative term carries a factor y.
double s3_relation_at_zero(int m, int k, int n) {
    double w = 2.0 * n + std::abs(m) + std::abs(k), am = std::abs(m);
    double M2 = m > 0 ? w - k + m : m < 0 ? w + k - m : 1.0;
    double M3 = m > 0 ? -(w - k - m) : m < 0 ? -(w + k + m) : -1.0;
    double lhs = (m - k - w) * (m - k + w) * M3;
    double rhs = M2 * (-4 * w * (am / 2) + m * m - k * k + w * w);
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs) + std::abs(rhs));
}

cplx h3_printed_M2(int m, double k, double w) { return I * (-I * w + double(m) - I * k) * (I * w + double(m) - I * k); }
cplx h3_printed_M3(int m, double k, double w) {
    double am = std::abs(m);
    return (-I * w + am - I * k) * (I * w + am + I * k);
}

double h3_relation_at_zero(int m, double k, double w) {
    cplx lhs = (double(m) - I * k - I * w) * (double(m) - I * k + I * w) * h3_printed_M3(m, k, w);
    cplx rhs = h3_printed_M2(m, k, w) * (-2 * w * std::abs(m) + I * (-double(m) * m - k * k + w * w));
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs) + std::abs(rhs));
}

Outcome amplitudes() {
    // S3: (m,k,n) triples with m of both signs, omega > 0
    int s3_count = 0;
    double s3_worst = 0;
    for (int m = -2; m <= 2; ++m)
        for (int k = -1; k <= 1; ++k)
            for (int n = 0; n <= 1; ++n) {
                if (2 * n + std::abs(m) + std::abs(k) == 0) continue;
                s3_worst = std::max(s3_worst, s3_relation_at_zero(m, k, n));
                ++s3_count;
            }

    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> ur(0.05, 2.5);
    double h3_zero = 0, h3_random = 0;
    int h3_count = 0;
    for (int m : {0, 1, 2})
        for (double k : {0.5, 1.0})
            for (double w : {0.7, 1.3, 2.1}) {
                h3_zero = std::max(h3_zero, h3_relation_at_zero(m, k, w));
                AmplitudePair printed{h3_printed_M2(m, k, w), h3_printed_M3(m, k, w)};
                for (int t = 0; t < 10; ++t) {
                    double y = -std::pow(std::sinh(ur(rng)), 2);
                    auto [l, r] = h3_amplitude_relation(m, k, w, printed, y);
                    h3_random = std::max(h3_random, std::abs(l - r) / std::max(1.0, std::abs(l) + std::abs(r)));
                }
                ++h3_count;
            }
    bool ok = s3_count >= 20 && s3_worst < 1e-10 && h3_zero < 1e-10 && h3_random < 1e-10;
    std::ostringstream d;
    d << "S3 " << s3_count << " triples max " << fmt(s3_worst) << "; H3 " << h3_count
      << " cases, y=0 max " << fmt(h3_zero) << ", random y max " << fmt(h3_random) << " (tol 1e-10)";
    return {ok, d.str()};
}

// ---- 7: elliptic filter

Outcome elliptic() {
    int mismatches = 0, total = 0;
    for (int m = -6; m <= 6; ++m)
        for (int k = -6; k <= 6; ++k) {
            bool same_parity = (m - k) % 2 == 0;
            bool accepted = elliptic_filter(m, k).accept;
            bool all_even = true;
            for (int n = 0; n <= 2; ++n) {
                if (2 * n + std::abs(m) + std::abs(k) == 0) continue;
                int w = int(std::lround(construct_s3(m, k, n).spec.omega));
                all_even &= w % 2 == 0;
            }
            mismatches += (accepted != same_parity) || (accepted != all_even);
            ++total;
        }
    return {mismatches == 0, std::to_string(total) + " pairs, mismatches " + std::to_string(mismatches)};
}

// ---- 8: continuous H3 spectrum

Outcome h3_continuum() {
    std::vector<double> res(20), agree(20);
    parallel_for(20, [&](int i) {
        double w = 0.5 + 2.5 * i / 19.0;
        auto sol = construct_h3_general(1, 0.5, w);
        auto rp = residual_scan(sol, uniform_grid(sol.window.lo, sol.window.hi, 256));
        res[i] = std::max(rp.first_order, rp.second_order);
        agree[i] = oracle_agreement(sol, 0.05, 2.5);
    });
    double r = *std::max_element(res.begin(), res.end());
    double a = *std::max_element(agree.begin(), agree.end());
    return {r < 1e-8 && a < 1e-7,
            "20 frequencies, max residual " + fmt(r) + " (tol 1e-8), integration agreement " + fmt(a) + " (tol 1e-7)"};
}

// ---- 9: plane wave

Outcome plane_wave() {
    auto cols = scalar_to_maxwell(plane_wave_z());
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-3, 3);
    double worst = 0;
    for (int t = 0; t < 100; ++t) {
        SpacetimePoint x{u(rng), u(rng), u(rng), u(rng)};
        for (auto& c : cols) worst = std::max(worst, flat_maxwell_residual(c, x));
    }
    return {worst < 1e-9, "100 points x 4 columns, max residual " + fmt(worst) + " (tol 1e-9)"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "matrix algebra", 1, algebra},
        {2, "geometry oracle", 5, geometry},
        {3, "consistency identity", 30, consistency},
        {4, "second-order residuals", 30, second_order},
        {5, "S3 spectrum by shooting", 120, spectrum},
        {6, "amplitude relations", 5, amplitudes},
        {7, "elliptic filter", 1, elliptic},
        {8, "H3 continuous spectrum", 30, h3_continuum},
        {9, "plane wave columns", 2, plane_wave},
    };

    int unexpected_failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs < c.max_seconds;
        bool pass = o.passed && in_time;
        bool known = kKnownFailures.count(c.id) > 0;
        std::printf("%s criterion %d (%s): %s; %.2f s (limit %.0f s)%s\n", pass ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), o.detail.c_str(), secs, c.max_seconds,
                    known ? (pass ? " [listed as known failure but passed]" : " [known failure]") : "");
        if (!pass && !known) ++unexpected_failures;
    }

    double corrected = 0;
    for (int m : {0, 1, 2})
        for (double k : {0.5, 1.0})
            for (double w : {0.7, 1.3, 2.1})
                for (double y : {0.0, -0.3, -4.0, -30.0}) {
                    auto [l, r] = h3_amplitude_relation(m, k, w, h3_amplitudes(m, k, w), y);
                    corrected = std::max(corrected, std::abs(l - r) / std::max(1.0, std::abs(l) + std::abs(r)));
                }
    std::printf("INFO H3 relation with the corrected amplitude pair used by the constructors: max %s\n",
                fmt(corrected).c_str());

    auto opp = shoot_spectrum_s3_system(-1, 1, {0.5, 8.5});
    std::printf("INFO coupled-system shooting (m,k)=(-1,1) over (0.5, 8.5]:");
    for (double w : opp.omega_found) std::printf(" %.6f", w);
    std::printf(" (the scalar oracle also lists omega=2)\n");

    std::printf("%s: %d unexpected failure(s)\n", unexpected_failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE OK",
                unexpected_failures);
    return unexpected_failures ? 1 : 0;
}
