#include "cmaxwell/special.hpp"

#include <cmath>

#include "cmaxwell/errors.hpp"

namespace cmaxwell {

namespace {

// Smallest N with x = -N, if x is a nonpositive integer.
bool terminating_index(cplx x, int& n, double tol = 1e-12) {
    if (!is_nonpositive_integer(x, tol)) return false;
    n = int(std::lround(-x.real()));
    return true;
}

Hyp2F1Value gauss_series(cplx a, cplx b, cplx c, cplx z) {
    int na = 0, nb = 0;
    bool ta = terminating_index(a, na), tb = terminating_index(b, nb);
    int nterm = -1;
    if (ta) nterm = na;
    if (tb) nterm = ta ? std::min(na, nb) : nb;

    int nc = 0;
    if (terminating_index(c, nc) && !(nterm >= 0 && nterm <= nc))
        throw ParameterPole("c is a nonpositive integer");

    Hyp2F1Value out;
    cplx term = 1.0, sum = 1.0;
    if (nterm >= 0) {
        for (int k = 0; k < nterm; ++k) {
            term *= (a + double(k)) * (b + double(k)) / ((c + double(k)) * double(k + 1)) * z;
            sum += term;
        }
        out.value = sum;
        out.terms = nterm + 1;
        return out;
    }

    if (std::abs(z) >= 1.0) throw SeriesDiverged("|y| >= 1 for a non-terminating series");
    if (z == cplx(0)) {
        out.value = 1.0;
        out.terms = 1;
        return out;
    }
    int small = 0;
    double ratio = 0;
    int k = 0;
    for (; k < kMaxSeriesTerms; ++k) {
        cplx next = term * (a + double(k)) * (b + double(k)) / ((c + double(k)) * double(k + 1)) * z;
        if (std::abs(term) > 0) ratio = std::abs(next) / std::abs(term);
        term = next;
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) {
            if (++small >= 2) break;
        } else {
            small = 0;
        }
    }
    out.value = sum;
    out.terms = k + 2;
    out.error_estimate = ratio < 1 ? std::abs(term) * ratio / (1 - ratio) : std::abs(term);
    return out;
}

}  // namespace

bool is_nonpositive_integer(cplx x, double tol) {
    if (std::abs(x.imag()) > tol) return false;
    double re = x.real();
    if (re > tol) return false;
    return std::abs(re - std::round(re)) <= tol;
}

Hyp2F1Params hyp_params(cplx a, cplx b, cplx c, ArgMap map) {
    Hyp2F1Params p{a, b, c, false, map};
    p.terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    return p;
}

Hyp2F1Value hyp2f1_eval(const Hyp2F1Params& p, cplx y) {
    switch (p.map) {
        case ArgMap::Direct: return gauss_series(p.a, p.b, p.c, y);
        case ArgMap::Pfaff: {
            if (y == cplx(1.0)) throw SeriesDiverged("Pfaff map undefined at y = 1");
            auto r = gauss_series(p.a, p.c - p.b, p.c, y / (y - 1.0));
            cplx pre = std::pow(1.0 - y, -p.a);
            r.value *= pre;
            r.error_estimate *= std::abs(pre);
            return r;
        }
        case ArgMap::Euler: {
            auto r = gauss_series(p.c - p.a, p.c - p.b, p.c, y);
            cplx e = p.c - p.a - p.b;
            if (y == cplx(1.0) && e.real() < 0) throw SeriesDiverged("Euler prefactor singular at y = 1");
            cplx pre = (y == cplx(1.0)) ? cplx(e == cplx(0) ? 1.0 : 0.0) : std::pow(1.0 - y, e);
            r.value *= pre;
            r.error_estimate *= std::abs(pre);
            return r;
        }
    }
    return {};
}

cplx hyp2f1(const Hyp2F1Params& p, cplx y) { return hyp2f1_eval(p, y).value; }

cplx hyp2f1_derivative(const Hyp2F1Params& p, cplx y) {
    if (p.a == cplx(0) || p.b == cplx(0)) return 0.0;
    auto q = hyp_params(p.a + 1.0, p.b + 1.0, p.c + 1.0, p.map);
    return p.a * p.b / p.c * hyp2f1(q, y);
}

cplx hyp2f1_second_derivative(const Hyp2F1Params& p, cplx y) {
    if (p.a == cplx(0) || p.b == cplx(0)) return 0.0;
    auto q = hyp_params(p.a + 1.0, p.b + 1.0, p.c + 1.0, p.map);
    return p.a * p.b / p.c * hyp2f1_derivative(q, y);
}

Jet hyp2f1(const Hyp2F1Params& p, const Jet& y) {
    return compose(y, hyp2f1(p, y.v), hyp2f1_derivative(p, y.v), hyp2f1_second_derivative(p, y.v));
}

std::vector<cplx> hyp2f1_poly_coeffs(const Hyp2F1Params& p) {
    int na = 0, nb = 0;
    bool ta = terminating_index(p.a, na), tb = terminating_index(p.b, nb);
    if (!ta && !tb) throw SeriesDiverged("series does not terminate");
    int n = ta ? (tb ? std::min(na, nb) : na) : nb;
    std::vector<cplx> c(n + 1);
    c[0] = 1.0;
    for (int k = 0; k < n; ++k)
        c[k + 1] = c[k] * (p.a + double(k)) * (p.b + double(k)) / ((p.c + double(k)) * double(k + 1));
    return c;
}

}  // namespace cmaxwell
