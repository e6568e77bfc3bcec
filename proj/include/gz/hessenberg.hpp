#pragma once

#include <cmath>
#include <vector>

#include "gz/gzmap.hpp"
#include "gz/matrix.hpp"
#include "gz/numlin.hpp"

namespace gz {

/// Unit-subdiagonal upper Hessenberg matrix: ones on the subdiagonal, zeros
/// below it, free entries on and above the diagonal.
struct HessenbergMatrix {
    ComplexMatrix mat;
};

inline bool is_hessenberg_unit(const ComplexMatrix& m, const Tolerance& tol = {}) {
    const double thresh = tol.effective(std::max(1.0, m.frobenius()), std::max(1, m.n()));
    for (int r = 0; r < m.n(); ++r)
        for (int c = 0; c < m.n(); ++c) {
            if (r == c + 1 && std::abs(m(r, c) - 1.0) > thresh) return false;
            if (r > c + 1 && std::abs(m(r, c)) > thresh) return false;
        }
    return true;
}

/// Inverse of the Kostant-Wallach map on the Hessenberg section.  Given the
/// target monic level polynomials p_1, ..., p_n, the unit-subdiagonal shape
/// forces the recursion
///     p_i(t) = (t - a_{i,i}) p_{i-1}(t) - sum_{k<i} a_{k,i} p_{k-1}(t),
/// so column i is read off by expanding r(t) = t p_{i-1}(t) - p_i(t) in the
/// triangular monic basis {p_0, ..., p_{i-1}} by leading-term division.
inline HessenbergMatrix hessenberg_from_coeffs(const KWPoint& kw) {
    kw.validate();
    if (kw.coords != KWCoords::CharCoeffs)
        throw PreconditionError("hessenberg_from_coeffs: point must be in coefficient coordinates");
    const int n = kw.n;
    if (n < 1) throw PreconditionError("hessenberg_from_coeffs: n must be >= 1");

    ComplexMatrix h(n);
    for (int k = 0; k + 1 < n; ++k) h(k + 1, k) = 1.0;

    std::vector<Polynomial> p;
    p.push_back(Polynomial::constant(1.0));
    for (int i = 1; i <= n; ++i) {
        const Polynomial target = level_polynomial(kw, i);
        Polynomial r = p[static_cast<std::size_t>(i - 1)].shift_up() - target;
        // r = a_{i,i} p_{i-1} + sum_{k=1}^{i-1} a_{k,i} p_{k-1}
        std::vector<cplx> alpha(static_cast<std::size_t>(i), 0.0);
        for (int d = i - 1; d >= 0; --d) {
            const cplx coef = r.coeff(d);
            alpha[static_cast<std::size_t>(d)] = coef;
            if (coef != cplx(0.0)) r = r - p[static_cast<std::size_t>(d)] * coef;
        }
        h(i - 1, i - 1) = alpha[static_cast<std::size_t>(i - 1)];
        for (int k = 1; k < i; ++k) h(k - 1, i - 1) = alpha[static_cast<std::size_t>(k - 1)];
        p.push_back(target);
    }
    return HessenbergMatrix{std::move(h)};
}

/// Build per-level monic polynomials from prescribed Ritz values and invert.
/// No interlacing or disjointness condition is required: any multiset tower
/// of sizes 1, ..., n works.
inline HessenbergMatrix hessenberg_from_ritz(const RitzData& ritz) {
    ritz.validate();
    KWPoint kw;
    kw.n = ritz.n;
    kw.coords = KWCoords::CharCoeffs;
    for (int i = 1; i <= ritz.n; ++i) {
        const Polynomial cp = Polynomial::from_roots(ritz.sigma[static_cast<std::size_t>(i - 1)]);
        std::vector<cplx> level(static_cast<std::size_t>(i));
        for (int j = 1; j <= i; ++j) level[static_cast<std::size_t>(j - 1)] = cp.coeff(j - 1);
        kw.levels.push_back(std::move(level));
    }
    return hessenberg_from_coeffs(kw);
}

/// Relative residual of the round trip Phi(Psi(c)) vs c; a cheap conditioning
/// diagnostic for clustered spectra.
inline double roundtrip_residual(const KWPoint& kw, const HessenbergMatrix& h) {
    const KWPoint back = kw_map(h.mat, KWCoords::CharCoeffs);
    return distance(kw, back) / (1.0 + kw.norm());
}

}  // namespace gz
