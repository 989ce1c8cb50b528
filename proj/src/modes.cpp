#include "cmaxwell/modes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cmaxwell/errors.hpp"
#include "cmaxwell/special.hpp"

namespace cmaxwell {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
constexpr Interval kS3Window{0.01, kPi / 2 - 0.01};
constexpr Interval kH3Window{0.05, 3.0};

struct Trig {
    Jet s, c;
};

Trig trig(SpaceKind kind, double r) {
    Jet x = Jet::variable(r);
    if (kind == SpaceKind::Hyperbolic) return {sinh(x), cosh(x)};
    return {sin(x), cos(x)};
}

double normalised(std::initializer_list<cplx> terms) {
    cplx s = 0;
    double a = 0;
    for (auto t : terms) {
        s += t;
        a += std::abs(t);
    }
    return a == 0 ? 0.0 : std::abs(s) / a;
}

// Concomitants for m = 0: f2 = E/s, f3 = E'/(w s), f1 = -i k E/(w s c).
JetTriple from_E_m0(SpaceKind kind, cplx k, double w, const Jet& E, double r) {
    auto [s, c] = trig(kind, r);
    return {(-I * k / w) * E / (s * c), E / s, derivative(E) / (w * s)};
}

// Concomitants for k = 0: f3 = E/c, f2 = -(f3' - g313 f3)/w, f1 = i m f3/(w s).
JetTriple from_E_k0(SpaceKind kind, int m, double w, const Jet& E, double r) {
    auto [s, c] = trig(kind, r);
    Jet g313 = kind == SpaceKind::Hyperbolic ? -1.0 * (s / c) : s / c;
    Jet f3 = E / c;
    Jet f2 = -1.0 * (derivative(f3) - g313 * f3) / w;
    return {(I * double(m) / w) * f3 / s, f2, f3};
}

// E'' -+ E'/(s c) + (w^2 - q^2/t^2) E with t = c for the m=0 form, s for k=0.
double e_equation_residual(SpaceKind kind, bool m_zero, cplx q, double w, const Jet& E, double r) {
    auto [s, c] = trig(kind, r);
    cplx sc = s.v * c.v;
    cplx t = m_zero ? c.v : s.v;
    double sign = m_zero ? -1.0 : 1.0;
    return normalised({E.d2, sign * E.d1 / sc, w * w * E.v, -q * q * E.v / (t * t)});
}

double g_equation_residual(const OdeCoeffs& co, const Jet& G, const Jet& y) {
    if (G.v == cplx(0) && G.d1 == cplx(0) && G.d2 == cplx(0)) return 0;
    cplx Gy = G.d1 / y.d1;
    cplx Gyy = (G.d2 - Gy * y.d2) / (y.d1 * y.d1);
    return normalised({co.P * Gyy, co.Q * Gy, co.R * G.v});
}

// Assemble (f1,f2,f3) from (F2,F3) = (s f2, c f3).
JetTriple from_F(cplx k, int m, double w, const Jet& F2, const Jet& F3, const Trig& t) {
    Jet sc = t.s * t.c;
    Jet f1 = (-I / w) * (k * F2 - cplx(double(m)) * F3) / sc;
    return {f1, F2 / t.s, F3 / t.c};
}

ModeSolution make_from_E(ModeSpec spec, std::function<Jet(double)> E, bool m_zero) {
    ModeSolution sol;
    sol.spec = spec;
    sol.E = E;
    const SpaceKind kind = spec.space;
    const double w = spec.omega;
    const cplx k = spec.k;
    const int m = spec.m;
    if (m_zero) {
        sol.f = [=](double r) { return from_E_m0(kind, k, w, E(r), r); };
        sol.second_order_residual = [=](double r) { return e_equation_residual(kind, true, k, w, E(r), r); };
    } else {
        sol.f = [=](double r) { return from_E_k0(kind, m, w, E(r), r); };
        sol.second_order_residual = [=](double r) {
            return e_equation_residual(kind, false, cplx(double(m)), w, E(r), r);
        };
    }
    return sol;
}

}  // namespace

cvec3 ModeSolution::values(double r) const {
    auto j = f(r);
    return {j[0].v, j[1].v, j[2].v};
}

RadialState ModeSolution::state(double r) const {
    auto j = f(r);
    return {r, {j[0].v, j[1].v, j[2].v}, {j[0].d1, j[1].d1, j[2].d1}};
}

// ---------------------------------------------------------------- S3

ModeSolution construct_s3_m0(int k, S3Family family, int index) {
    if (k == 0) throw InvalidQuantumNumbers("m=0 family needs k != 0; use construct_s3_k0");
    if (index < 0) throw InvalidQuantumNumbers("negative family index");
    const int B = std::abs(k);
    ModeSpec spec;
    spec.space = SpaceKind::Spherical;
    spec.m = 0;
    spec.k = double(k);
    std::function<Jet(double)> E;
    std::string conv;
    switch (family) {
        case S3Family::Special:
            spec.omega = B, spec.n = 0, spec.branch = Branch::Special;
            E = [B](double r) { return pow(cos(Jet::variable(r)), B); };
            conv = "E = cos^|k| r";
            break;
        case S3Family::Sin2Cos:
            spec.omega = B + 2, spec.n = 1, spec.branch = Branch::MZero;
            E = [B](double r) {
                Jet x = Jet::variable(r);
                return pow(sin(x), 2) * pow(cos(x), B);
            };
            conv = "E = sin^2 r cos^|k| r";
            break;
        case S3Family::Hypergeometric: {
            spec.omega = B + 2.0 * (index + 1), spec.n = index + 1, spec.branch = Branch::MZero;
            auto p = hyp_params((B + 2 - spec.omega) / 2, (B + 2 + spec.omega) / 2, 1.0 + B);
            E = [B, p](double r) {
                Jet x = Jet::variable(r);
                Jet c = cos(x);
                return pow(sin(x), 2) * pow(c, B) * hyp2f1(p, c * c);
            };
            conv = "E = sin^2 r cos^|k| r F(a,b;1+|k|;x), x = cos^2 r";
            break;
        }
    }
    auto sol = make_from_E(spec, E, true);
    sol.family = "s3-m0";
    sol.convention = conv;
    sol.window = kS3Window;
    sol.regular = family != S3Family::Special;  // f2 ~ 1/r at the axis otherwise
    return sol;
}

ModeSolution construct_s3_k0(int m, S3Family family, int index) {
    if (m == 0) throw InvalidQuantumNumbers("k=0 family needs m != 0; use construct_s3_m0");
    if (index < 0) throw InvalidQuantumNumbers("negative family index");
    const int B = std::abs(m);
    ModeSpec spec;
    spec.space = SpaceKind::Spherical;
    spec.m = m;
    spec.k = 0.0;
    std::function<Jet(double)> E;
    std::string conv;
    switch (family) {
        case S3Family::Special:
            spec.omega = B, spec.n = 0, spec.branch = Branch::Special;
            E = [B](double r) { return pow(sin(Jet::variable(r)), B); };
            conv = "E = sin^|m| r";
            break;
        case S3Family::Sin2Cos:
            spec.omega = B + 2, spec.n = 1, spec.branch = Branch::KZero;
            E = [B](double r) {
                Jet x = Jet::variable(r);
                return pow(cos(x), 2) * pow(sin(x), B);
            };
            conv = "E = cos^2 r sin^|m| r";
            break;
        case S3Family::Hypergeometric: {
            spec.omega = B + 2.0 * (index + 1), spec.n = index + 1, spec.branch = Branch::KZero;
            auto p = hyp_params((B + 2 - spec.omega) / 2, (B + 2 + spec.omega) / 2, 1.0 + B);
            E = [B, p](double r) {
                Jet x = Jet::variable(r);
                Jet s = sin(x);
                return pow(cos(x), 2) * pow(s, B) * hyp2f1(p, s * s);
            };
            conv = "E = cos^2 r sin^|m| r F(a,b;1+|m|;y), y = sin^2 r";
            break;
        }
    }
    auto sol = make_from_E(spec, E, false);
    sol.family = "s3-k0";
    sol.convention = conv;
    sol.window = kS3Window;
    sol.regular = family != S3Family::Special;  // f3 ~ 1/cos r at r = pi/2 otherwise
    return sol;
}

AmplitudePair s3_amplitudes(int m, int k, int n) {
    const double w = 2.0 * n + std::abs(m) + std::abs(k);
    if (m > 0) return {w - k + m, -(w - k - m)};
    if (m < 0) return {w + k - m, -(w + k + m)};
    return {1.0, -1.0};
}

AmplitudePair s3_amplitudes_combined(int m, int k, int n) {
    const double w = 2.0 * n + std::abs(m) + std::abs(k);
    const double am = std::abs(m);
    return {(w + m - k) * (w - m + k), -(w - am - k) * (w - am + k)};
}

namespace {
Hyp2F1Params s3_g2_params(int m, int k, int n) {
    const double am = std::abs(m), ak = std::abs(k);
    return hyp_params(-double(n), n + 1 + am + ak, am + 1);
}
Hyp2F1Params s3_g3_params(int m, int k, int n) {
    const double am = std::abs(m), ak = std::abs(k);
    // n = 0: F(1, |m|+|k|; |m|+1; y) only terminates after the Euler map.
    return hyp_params(1.0 - n, n + am + ak, am + 1, n == 0 ? ArgMap::Euler : ArgMap::Direct);
}
}  // namespace

ModeSolution construct_s3_general(int m, int k, int n) {
    if (n < 0) throw InvalidQuantumNumbers("n must be nonnegative");
    const int am = std::abs(m), ak = std::abs(k);
    const double w = 2.0 * n + am + ak;
    if (w == 0) throw ZeroFrequency("omega=0 excluded");
    auto amp = s3_amplitudes(m, k, n);
    auto comb = s3_amplitudes_combined(m, k, n);
    if (m == 0 && comb.M2 == cplx(0) && comb.M3 == cplx(0) && amp.M3 != cplx(0))
        throw DegenerateElimination(
            "both eliminations degenerate (n=0, m=0); use construct_s3_m0 special family");

    ModeSpec spec;
    spec.space = SpaceKind::Spherical;
    spec.omega = w;
    spec.m = m;
    spec.k = double(k);
    spec.n = n;
    spec.branch = Branch::General;

    auto p2 = s3_g2_params(m, k, n), p3 = s3_g3_params(m, k, n);
    const cplx M2 = amp.M2, M3 = amp.M3;
    auto gjets = [=](double r) {
        Jet x = Jet::variable(r);
        Jet s = sin(x), c = cos(x);
        Jet y = s * s;
        Jet pre = pow(s, am) * pow(c, ak);
        Jet G2 = M2 * pre * hyp2f1(p2, y);
        Jet G3 = M3 == cplx(0) ? Jet(0.0) : M3 * pre * hyp2f1(p3, y);
        return std::array<Jet, 4>{G2, G3, s, c};
    };

    ModeSolution sol;
    sol.spec = spec;
    sol.M2 = M2;
    sol.M3 = M3;
    sol.family = "s3-general";
    sol.convention = "y = sin^2 r; F2 = (G2+G3)/sqrt2, F3 = (G3-G2)/sqrt2";
    sol.window = kS3Window;
    // n = 0 with mk < 0 leaves G3 ~ (1-y)^{-|k|/2}; n = 0, k = 0 leaves f3 ~ 1/cos r.
    sol.regular = !(n == 0 && (m * k < 0 || k == 0));
    const cplx kc = double(k);
    sol.f = [=](double r) {
        auto g = gjets(r);
        Jet F2 = kInvSqrt2 * (g[0] + g[1]);
        Jet F3 = kInvSqrt2 * (g[1] - g[0]);
        return from_F(kc, m, w, F2, F3, {g[2], g[3]});
    };
    auto eqs = gpair_second_order_coeffs(spec, false);
    sol.second_order_residual = [=](double r) {
        auto g = gjets(r);
        Jet y = g[2] * g[2];
        double yv = y.v.real();
        return std::max(g_equation_residual(eqs.g2(yv), g[0], y), g_equation_residual(eqs.g3(yv), g[1], y));
    };
    return sol;
}

ModeSolution construct_s3(int m, int k, int n) {
    if (2 * n + std::abs(m) + std::abs(k) == 0) throw ZeroFrequency("omega=0 excluded");
    if (m == 0 && k == 0) return construct_s3_general(m, k, n);
    if (m == 0) return n == 0 ? construct_s3_m0(k, S3Family::Special) : construct_s3_m0(k, S3Family::Hypergeometric, n - 1);
    if (k == 0) return n == 0 ? construct_s3_k0(m, S3Family::Special) : construct_s3_k0(m, S3Family::Hypergeometric, n - 1);
    return construct_s3_general(m, k, n);
}

std::pair<cplx, cplx> s3_amplitude_relation(int m, int k, int n, const AmplitudePair& amp, double y) {
    const double am = std::abs(m), ak = std::abs(k);
    const double w = 2.0 * n + am + ak;
    auto p2 = s3_g2_params(m, k, n), p3 = s3_g3_params(m, k, n);
    cplx F2 = hyp2f1(p2, y), dF2 = hyp2f1_derivative(p2, y), F3 = hyp2f1(p3, y);
    cplx lhs = (m - k - w) * (m - k + w) * amp.M3 * F3;
    cplx rhs = amp.M2 * (-4 * w * (am / 2 * (1 - y) * F2 - ak / 2 * y * F2 + y * (1 - y) * dF2) +
                         (double(m) * m - double(k) * k + w * w * (1 - 2 * y)) * F2);
    return {lhs, rhs};
}

std::string to_string(SpectrumFamily f) {
    switch (f) {
        case SpectrumFamily::General: return "general";
        case SpectrumFamily::MZeroSpecial: return "m0-special";
        case SpectrumFamily::KZeroSpecial: return "k0-special";
    }
    return "?";
}

std::vector<SpectrumEntry> spectrum_s3(int m_max, int k_max, int n_max) {
    std::vector<SpectrumEntry> out;
    for (int k = 0; k <= k_max; ++k)
        for (int m = 0; m <= m_max; ++m)
            for (int n = 0; n <= n_max; ++n) {
                int w = 2 * n + m + k;
                if (w == 0) continue;
                auto fam = SpectrumFamily::General;
                if (n == 0 && m == 0) fam = SpectrumFamily::MZeroSpecial;
                else if (n == 0 && k == 0) fam = SpectrumFamily::KZeroSpecial;
                out.push_back({double(w), m, k, n, fam});
            }
    std::stable_sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.omega < b.omega; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](auto& a, auto& b) { return a.m == b.m && a.k == b.k && a.n == b.n; }),
              out.end());
    return out;
}

FilterResult elliptic_filter(int m, int k) {
    if ((m - k) % 2 == 0) return {true, "m and k of equal parity: single-valued under the antipodal identification"};
    return {false,
            "m - k odd: e^{i(m phi + k z)} changes sign between antipodally identified boundary points "
            "(1, 1', 1''), so the field is not single-valued"};
}

// ---------------------------------------------------------------- H3

ModeSolution construct_h3_m0(const H3M0Args& a) {
    if (!(a.omega > 0)) throw InvalidQuantumNumbers("omega must be positive");
    if (std::abs(a.k_sign) != 1 || std::abs(a.b_sign) != 1) throw InvalidBranch("signs must be +-1");
    const double w = a.omega;
    ModeSpec spec;
    spec.space = SpaceKind::Hyperbolic;
    spec.omega = w;
    spec.m = 0;
    spec.branch = Branch::MZero;
    std::function<Jet(double)> E;
    std::string conv;
    bool regular = true, nonnorm = false;
    switch (a.branch) {
        case H3M0Branch::Oscillating: {
            spec.k = a.k_sign * w;
            spec.branch = Branch::Special;
            bool sine = a.sine;
            E = [w, sine](double r) {
                Jet u = w * log(cosh(Jet::variable(r)));
                return sine ? sin(u) : cos(u);
            };
            conv = sine ? "E = sin(omega ln cosh r)" : "E = cos(omega ln cosh r)";
            regular = sine;  // the cosine member has f2 ~ 1/r at the axis
            break;
        }
        case H3M0Branch::ExactSinh2Cosh: {
            cplx B = -2.0 + double(a.b_sign) * I * w;
            spec.k = double(a.k_sign) * I * B;
            spec.branch = Branch::Special;
            E = [B](double r) {
                Jet x = Jet::variable(r);
                return pow(sinh(x), 2) * pow(cosh(x), B);
            };
            conv = "E = sinh^2 r cosh^B r, B = -2 +- i omega";
            nonnorm = true;  // e^{ikz} grows like e^{+-2z}
            break;
        }
        case H3M0Branch::Hypergeometric: {
            spec.k = a.k;
            cplx B = double(a.b_sign) * I * a.k;
            auto p = hyp_params((B + 2.0 - I * w) / 2.0, (B + 2.0 + I * w) / 2.0, 2.0, ArgMap::Pfaff);
            E = [B, p](double r) {
                Jet x = Jet::variable(r);
                Jet s = sinh(x);
                return s * s * pow(cosh(x), B) * hyp2f1(p, -1.0 * (s * s));
            };
            conv = "E = sinh^2 r cosh^B r F(a,b;2;Y), Y = -sinh^2 r (Pfaff), B = +-ik";
            break;
        }
        default: throw InvalidBranch("unknown m=0 branch");
    }
    auto sol = make_from_E(spec, E, true);
    sol.family = "h3-m0";
    sol.convention = conv;
    sol.window = kH3Window;
    sol.regular = regular;
    sol.non_normalizable = nonnorm;
    return sol;
}

ModeSolution construct_h3_k0(int m, double omega, int b) {
    if (m == 0) throw InvalidQuantumNumbers("k=0 family needs m != 0");
    if (!(omega > 0)) throw InvalidQuantumNumbers("omega must be positive");
    if (b != 0 && b != 1) throw InvalidBranch("b must be 0 or 1");
    const int am = std::abs(m);
    const double aa = am / 2.0;
    ModeSpec spec;
    spec.space = SpaceKind::Hyperbolic;
    spec.omega = omega;
    spec.m = m;
    spec.k = 0.0;
    spec.branch = Branch::KZero;
    auto p = hyp_params(aa + b - I * omega / 2.0, aa + b + I * omega / 2.0, 1 + 2 * aa, ArgMap::Pfaff);
    auto E = [am, b, p](double r) {
        Jet x = Jet::variable(r);
        Jet s = sinh(x);
        return pow(s, am) * pow(cosh(x), 2 * b) * hyp2f1(p, -1.0 * (s * s));
    };
    auto sol = make_from_E(spec, E, false);
    sol.family = "h3-k0";
    sol.convention = "E = sinh^|m| r cosh^{2b} r F(a,b;1+|m|;Y), Y = -sinh^2 r (Pfaff)";
    sol.window = kH3Window;
    return sol;
}

AmplitudePair h3_amplitudes(int m, double k, double omega) {
    const double w = omega, am = std::abs(m);
    return {I * (-I * w + double(m) - I * k) * (I * w + double(m) - I * k),
            (am - I * w - I * k) * (am - I * w + I * k)};
}

AmplitudePair h3_printed_amplitudes(int m, double k, double omega) {
    const double w = omega, am = std::abs(m);
    return {I * (-I * w + double(m) - I * k) * (I * w + double(m) - I * k),
            (-I * w + am - I * k) * (I * w + am + I * k)};
}

namespace {
struct H3Params {
    cplx A, B;
    Hyp2F1Params p2, p3;
};

H3Params h3_params(int m, double k, double w, int b_sign) {
    cplx A = std::abs(m) / 2.0;
    cplx B = double(b_sign) * I * k / 2.0;
    cplx al = A + B - I * w / 2.0, be = A + B + 1.0 + I * w / 2.0, ga = 1.0 + 2.0 * A;
    return {A, B, hyp_params(al, be, ga, ArgMap::Pfaff), hyp_params(al + 1.0, be - 1.0, ga, ArgMap::Pfaff)};
}
}  // namespace

ModeSolution construct_h3_general(int m, double k, double omega, int b_sign) {
    if (!(omega > 0)) throw InvalidQuantumNumbers("omega must be positive");
    if (std::abs(b_sign) != 1) throw InvalidBranch("b_sign must be +-1");
    ModeSpec spec;
    spec.space = SpaceKind::Hyperbolic;
    spec.omega = omega;
    spec.m = m;
    spec.k = k;
    spec.branch = Branch::General;
    auto [d2, d3] = elimination_divisors(spec);
    if (std::abs(d2) < 1e-12 || std::abs(d3) < 1e-12)
        throw DegenerateElimination("omega^2 + (m -+ ik)^2 = 0; use construct_h3_m0 oscillating branch");

    auto hp = h3_params(m, k, omega, b_sign);
    auto amp = h3_amplitudes(m, k, omega);
    const cplx M2 = amp.M2, M3 = amp.M3;
    const int am = std::abs(m);
    const cplx twoB = 2.0 * hp.B;
    auto gjets = [=](double r) {
        Jet x = Jet::variable(r);
        Jet s = sinh(x), c = cosh(x);
        Jet Y = -1.0 * (s * s);
        // Y^A (1-Y)^B up to the constant phase (-1)^A
        Jet pre = pow(s, am) * pow(c, twoB);
        return std::array<Jet, 5>{M2 * pre * hyp2f1(hp.p2, Y), M3 * pre * hyp2f1(hp.p3, Y), s, c, Y};
    };

    ModeSolution sol;
    sol.spec = spec;
    sol.M2 = M2;
    sol.M3 = M3;
    sol.family = "h3-general";
    sol.convention = "Y = -sinh^2 r (Pfaff); F2 = (G2 + i G3)/sqrt2, F3 = (i G2 + G3)/sqrt2";
    sol.window = {0.05, 2.5};
    const cplx kc = k;
    const double w = omega;
    sol.f = [=](double r) {
        auto g = gjets(r);
        Jet F2 = kInvSqrt2 * (g[0] + I * g[1]);
        Jet F3 = kInvSqrt2 * (I * g[0] + g[1]);
        return from_F(kc, m, w, F2, F3, {g[2], g[3]});
    };
    auto eqs = gpair_second_order_coeffs(spec, false);
    sol.second_order_residual = [=](double r) {
        auto g = gjets(r);
        double Yv = g[4].v.real();
        return std::max(g_equation_residual(eqs.g2(Yv), g[0], g[4]), g_equation_residual(eqs.g3(Yv), g[1], g[4]));
    };
    return sol;
}

std::pair<cplx, cplx> h3_amplitude_relation(int m, double k, double omega, const AmplitudePair& amp,
                                            double y, int b_sign) {
    auto hp = h3_params(m, k, omega, b_sign);
    const double w = omega;
    cplx F2 = hyp2f1(hp.p2, y), dF2 = hyp2f1_derivative(hp.p2, y), F3 = hyp2f1(hp.p3, y);
    cplx lhs = (double(m) - I * k - I * w) * (double(m) - I * k + I * w) * amp.M3 * F3;
    cplx rhs = amp.M2 * (-4 * w * (hp.A * (1 - y) * F2 - hp.B * y * F2 + y * (1 - y) * dF2) +
                         I * (-double(m) * m - k * k + w * w * (1 - 2 * y)) * F2);
    return {lhs, rhs};
}

// ---------------------------------------------------------------- catalogues

std::vector<ModeSolution> s3_catalogue(int mk_max, int n_max) {
    std::vector<ModeSolution> out;
    for (int m = -mk_max; m <= mk_max; ++m)
        for (int k = -mk_max; k <= mk_max; ++k)
            for (int n = 0; n <= n_max; ++n) {
                if (2 * n + std::abs(m) + std::abs(k) == 0) continue;
                out.push_back(construct_s3(m, k, n));
                if (m == 0 && n == 0) continue;  // general form degenerate, covered above
                if ((m == 0) != (k == 0)) out.push_back(construct_s3_general(m, k, n));
            }
    for (int q = -mk_max; q <= mk_max; ++q) {
        if (q == 0) continue;
        out.push_back(construct_s3_m0(q, S3Family::Sin2Cos));
        out.push_back(construct_s3_k0(q, S3Family::Sin2Cos));
    }
    return out;
}

std::vector<ModeSolution> h3_catalogue() {
    std::vector<ModeSolution> out;
    for (int m : {0, 1, 2})
        for (double k : {0.0, 0.5, 1.0})
            for (double w : {0.7, 1.3, 2.1}) {
                for (int sb : {1, -1}) out.push_back(construct_h3_general(m, k, w, sb));
                if (m == 0)
                    for (int sb : {1, -1})
                        out.push_back(construct_h3_m0({H3M0Branch::Hypergeometric, w, k, 1, sb, false}));
                if (k == 0.0 && m != 0)
                    for (int b : {0, 1}) out.push_back(construct_h3_k0(m, w, b));
            }
    for (double w : {0.7, 1.3, 2.1})
        for (int ks : {1, -1})
            for (bool sine : {false, true})
                out.push_back(construct_h3_m0({H3M0Branch::Oscillating, w, 0, ks, 1, sine}));
    for (int bs : {1, -1})
        for (int ks : {1, -1}) out.push_back(construct_h3_m0({H3M0Branch::ExactSinh2Cosh, 1.0, 0, ks, bs, false}));
    return out;
}

}  // namespace cmaxwell
