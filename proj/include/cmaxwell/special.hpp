#pragma once

#include <complex>
#include <vector>

#include "cmaxwell/jet.hpp"

namespace cmaxwell {

// How the argument is handled before summing the Gauss series.
//   Direct: F(a,b;c;z) summed as is.
//   Pfaff:  (1-z)^{-a} F(a, c-b; c; z/(z-1)); brings z in (-inf, 1/2) into |w| < 1.
//   Euler:  (1-z)^{c-a-b} F(c-a, c-b; c; z); turns some non-terminating
//           series into polynomials.
enum class ArgMap { Direct, Pfaff, Euler };

struct Hyp2F1Params {
    cplx a, b, c;
    bool terminating = false;  // a or b is a nonpositive integer (tolerance 1e-12)
    ArgMap map = ArgMap::Direct;
};

Hyp2F1Params hyp_params(cplx a, cplx b, cplx c, ArgMap map = ArgMap::Direct);

bool is_nonpositive_integer(cplx x, double tol = 1e-12);

struct Hyp2F1Value {
    cplx value;
    double error_estimate = 0;  // 0 for finite sums
    int terms = 0;
};

inline constexpr int kMaxSeriesTerms = 100000;

Hyp2F1Value hyp2f1_eval(const Hyp2F1Params& p, cplx y);
cplx hyp2f1(const Hyp2F1Params& p, cplx y);
inline cplx hyp2f1(const Hyp2F1Params& p, double y) { return hyp2f1(p, cplx(y)); }
// (ab/c) F(a+1, b+1; c+1; y)
cplx hyp2f1_derivative(const Hyp2F1Params& p, cplx y);
cplx hyp2f1_second_derivative(const Hyp2F1Params& p, cplx y);

// F(y(x)) with derivatives in x propagated through the chain rule.
Jet hyp2f1(const Hyp2F1Params& p, const Jet& y);

// Power coefficients c_0..c_N of a terminating series.
std::vector<cplx> hyp2f1_poly_coeffs(const Hyp2F1Params& p);

}  // namespace cmaxwell
