#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cmaxwell/jet.hpp"
#include "cmaxwell/radial.hpp"

namespace cmaxwell {

using JetTriple = std::array<Jet, 3>;

struct ModeSolution {
    ModeSpec spec;
    std::function<Jet(double)> E;  // scalar profile, empty when not applicable
    // (f1, f2, f3) with their first r-derivatives
    std::function<JetTriple(double)> f;
    // Residual of the family's own second-order equation at r.
    std::function<double(double)> second_order_residual;
    cplx M2 = 1.0, M3 = 0.0;
    std::string family;      // short identifier, e.g. "s3-general"
    std::string convention;  // variable and hypergeometric argument used
    bool regular = true;     // all f components bounded at the chart ends
    bool non_normalizable = false;
    Interval window{0.01, 1.5607963267948966};

    cvec3 values(double r) const;
    RadialState state(double r) const;
};

// ---- S3 ----

enum class S3Family { Special, Sin2Cos, Hypergeometric };

// m = 0. Special: E = cos^|k| r, omega = |k|. Sin2Cos: E = sin^2 r cos^|k| r,
// omega = |k|+2. Hypergeometric(index): E = sin^2 r cos^|k| r F(-index, ..; cos^2 r),
// omega = |k| + 2(index+1). spec.n is the node index on the unified
// spectrum 2n+|m|+|k|.
ModeSolution construct_s3_m0(int k, S3Family family, int index = 0);
// k = 0 with sin and cos roles exchanged.
ModeSolution construct_s3_k0(int m, S3Family family, int index = 0);

struct AmplitudePair {
    cplx M2, M3;
};

// Simple-form pair by sign of m (M = 1).
AmplitudePair s3_amplitudes(int m, int k, int n);
// Combined form (omega+m-k)(omega-m+k), -(omega-|m|-k)(omega-|m|+k).
AmplitudePair s3_amplitudes_combined(int m, int k, int n);

// G2 = M2 y^{|m|/2} (1-y)^{|k|/2} F(-n, n+1+|m|+|k|; |m|+1; y),
// G3 = M3 y^{|m|/2} (1-y)^{|k|/2} F(1-n, n+|m|+|k|; |m|+1; y), y = sin^2 r.
ModeSolution construct_s3_general(int m, int k, int n);

// Dispatches to the m=0 / k=0 families or the general one.
ModeSolution construct_s3(int m, int k, int n);

enum class SpectrumFamily { General, MZeroSpecial, KZeroSpecial };
std::string to_string(SpectrumFamily f);

struct SpectrumEntry {
    double omega;
    int m, k, n;
    SpectrumFamily family;
};

std::vector<SpectrumEntry> spectrum_s3(int m_max, int k_max, int n_max);

struct FilterResult {
    bool accept;
    std::string reason;
};

FilterResult elliptic_filter(int m, int k);

// ---- H3 ----

enum class H3M0Branch { Oscillating, ExactSinh2Cosh, Hypergeometric };

struct H3M0Args {
    H3M0Branch branch = H3M0Branch::Hypergeometric;
    double omega = 1;
    double k = 0;        // hypergeometric branch only
    int k_sign = 1;      // oscillating: k = k_sign*omega; exact: k = k_sign*i*B
    int b_sign = 1;      // exact: B = -2 + b_sign*i*omega; hypergeometric: B = b_sign*i*k
    bool sine = false;   // oscillating: sin instead of cos
};

ModeSolution construct_h3_m0(const H3M0Args& args);

// E = sinh^|m| r cosh^{2b} r F(a+b-i w/2, a+b+i w/2; 1+2a; -sinh^2 r), a=|m|/2.
ModeSolution construct_h3_k0(int m, double omega, int b = 0);

// Amplitude pair solving the G2/G3 elimination relation at y=0.
AmplitudePair h3_amplitudes(int m, double k, double omega);
// The factorised form i(-iw+m-ik)(iw+m-ik),
// (-iw+|m|-ik)(iw+|m|+ik); kept for comparison only.
AmplitudePair h3_printed_amplitudes(int m, double k, double omega);

// B = b_sign * i k / 2 selects one member of the fundamental pair.
ModeSolution construct_h3_general(int m, double k, double omega, int b_sign = 1);

// ---- catalogues ----

// Every constructible S3 mode with |m|,|k| <= mk_max and n <= n_max,
// including the special families and both constructions where they overlap.
std::vector<ModeSolution> s3_catalogue(int mk_max = 2, int n_max = 2);
// H3 modes for m in {0,1,2}, k in {0,0.5,1}, omega in {0.7,1.3,2.1} plus
// the m=0 branches.
std::vector<ModeSolution> h3_catalogue();

// Elimination relation for S3 G-pairs evaluated at y for the given
// amplitude pair, returned as (lhs, rhs).
std::pair<cplx, cplx> s3_amplitude_relation(int m, int k, int n, const AmplitudePair& amp, double y);
// Same for H3 with y = -sinh^2 r in (-inf, 1).
std::pair<cplx, cplx> h3_amplitude_relation(int m, double k, double omega, const AmplitudePair& amp,
                                            double y, int b_sign = 1);

}  // namespace cmaxwell
