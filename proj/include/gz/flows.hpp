#pragma once

#include <string>
#include <vector>

#include "gz/gzmap.hpp"
#include "gz/matrix.hpp"
#include "gz/numlin.hpp"
#include "gz/rng.hpp"
#include "gz/sreg.hpp"

namespace gz {

/// Coordinates on the group A = C^{n(n-1)/2}: t[i-1][j-1] is the time of the
/// (i,j) flow, 1 <= j <= i <= n-1.
struct FlowTimes {
    int n = 0;
    std::vector<std::vector<cplx>> t;

    static FlowTimes zeros(int n) {
        FlowTimes ft;
        ft.n = n;
        for (int i = 1; i < n; ++i) ft.t.emplace_back(static_cast<std::size_t>(i), cplx(0.0));
        return ft;
    }

    static FlowTimes random(int n, Rng& rng, double scale = 1.0) {
        FlowTimes ft = zeros(n);
        for (auto& level : ft.t)
            for (auto& v : level) v = scale * rng.complex_box();
        return ft;
    }

    void validate() const {
        if (static_cast<int>(t.size()) != n - 1)
            throw PreconditionError("FlowTimes: expected " + std::to_string(n - 1) + " levels");
        for (int i = 1; i < n; ++i)
            if (static_cast<int>(t[static_cast<std::size_t>(i - 1)].size()) != i)
                throw PreconditionError("FlowTimes: level " + std::to_string(i) + " malformed");
    }

    FlowTimes negated() const {
        FlowTimes ft = *this;
        for (auto& level : ft.t)
            for (auto& v : level) v = -v;
        return ft;
    }
};

/// One-parameter flow t . x = Ad(exp(t j x_i^{j-1})) . x.
inline ComplexMatrix flow_step(const ComplexMatrix& x, int i, int j, cplx t, const Tolerance& tol = {}) {
    if (i < 1 || i >= x.n() || j < 1 || j > i) throw PreconditionError("flow_step: index out of range");
    ComplexMatrix arg = cutoff(x, i).power(j - 1).pad_zero(x.n());
    arg *= t * cplx(static_cast<double>(j));
    const ComplexMatrix g = expm(arg, tol);
    arg *= cplx(-1.0);
    const ComplexMatrix ginv = expm(arg, tol);
    return g * x * ginv;
}

/// The A-action: compose the one-parameter flows in lexicographic (i,j)
/// order.  The flows commute, so any order gives the same point.
inline ComplexMatrix a_action(const ComplexMatrix& x, const FlowTimes& times, const Tolerance& tol = {}) {
    times.validate();
    if (times.n != x.n()) throw PreconditionError("a_action: dimension mismatch");
    ComplexMatrix y = x;
    for (int i = 1; i < x.n(); ++i)
        for (int j = 1; j <= i; ++j) {
            const cplx t = times.t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            if (t != cplx(0.0)) y = flow_step(y, i, j, t, tol);
        }
    return y;
}

/// dim T_x(A.x) = rank of the n(n-1)/2 Hamiltonian fields at x.
inline int tangent_space_dim(const ComplexMatrix& x, const Tolerance& tol = {}) {
    return is_sreg_tangent(x, tol).second;
}

/// For regular nilpotent M, an invertible g with g^{-1} M g equal to the
/// principal nilpotent Jordan block (unit subdiagonal).  The columns are the
/// Krylov vectors (v, Mv, ..., M^{n-1}v) of a cyclic vector v found by
/// seeded random trials.
inline ComplexMatrix regular_nilpotent_conjugator(const ComplexMatrix& m, Rng& rng, const Tolerance& tol = {}) {
    const int n = m.n();
    const Polynomial cp = charpoly(m);
    const double coeff_thresh = std::max(tol.abs_tol, tol.rel_tol * std::max(1.0, cp.max_abs_coeff()));
    for (int k = 0; k < n; ++k)
        if (std::abs(cp.coeff(k)) > coeff_thresh)
            throw PreconditionError("regular_nilpotent_conjugator: input is not nilpotent");
    if (!is_regular(m, tol))
        throw PreconditionError("regular_nilpotent_conjugator: input is not regular");

    const int max_trials = 32;
    for (int trial = 0; trial < max_trials; ++trial) {
        std::vector<cplx> v(static_cast<std::size_t>(n));
        for (auto& z : v) z = rng.complex_annulus(0.5, 1.5);
        ComplexMatrix g(n);
        std::vector<cplx> w = v;
        for (int c = 0; c < n; ++c) {
            for (int r = 0; r < n; ++r) g(r, c) = w[static_cast<std::size_t>(r)];
            if (c + 1 < n) w = m.apply(w);
        }
        if (rank_tol(g, tol) == n) return g;
    }
    throw NonConvergence("regular_nilpotent_conjugator: no cyclic vector found");
}

/// Parameters of the group Z = Z_1 x ... x Z_{n-1} over the nilfiber:
/// level i is the invertible polynomial c_0 I + c_1 e_i + ... + c_{i-1}
/// e_i^{i-1} in the principal nilpotent of gl(i), with c_0 nonzero.
struct ZParams {
    int n = 0;
    std::vector<std::vector<cplx>> z;

    static ZParams identity(int n) {
        ZParams p;
        p.n = n;
        for (int i = 1; i < n; ++i) {
            std::vector<cplx> level(static_cast<std::size_t>(i), cplx(0.0));
            level[0] = 1.0;
            p.z.push_back(std::move(level));
        }
        return p;
    }

    static ZParams random(int n, Rng& rng) {
        ZParams p;
        p.n = n;
        for (int i = 1; i < n; ++i) {
            std::vector<cplx> level(static_cast<std::size_t>(i));
            level[0] = rng.complex_annulus(0.5, 2.0);
            for (int k = 1; k < i; ++k) level[static_cast<std::size_t>(k)] = rng.complex_box();
            p.z.push_back(std::move(level));
        }
        return p;
    }

    void validate() const {
        if (static_cast<int>(z.size()) != n - 1)
            throw PreconditionError("ZParams: expected " + std::to_string(n - 1) + " levels");
        for (int i = 1; i < n; ++i) {
            const auto& level = z[static_cast<std::size_t>(i - 1)];
            if (static_cast<int>(level.size()) != i)
                throw PreconditionError("ZParams: level " + std::to_string(i) + " malformed");
            if (level[0] == cplx(0.0))
                throw PreconditionError("ZParams: leading coefficient must be nonzero");
        }
    }
};

namespace detail {

/// Inverse of an invertible polynomial in a nilpotent N: write it as
/// c_0 (I + B) with B nilpotent and expand the terminating geometric series.
inline ComplexMatrix invert_unipotent_scaled(const ComplexMatrix& zmat, cplx c0, int n) {
    ComplexMatrix b = zmat;
    b *= cplx(1.0) / c0;
    b -= ComplexMatrix::identity(n);
    ComplexMatrix acc = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k < n; ++k) {
        term = term * b;
        ComplexMatrix signed_term = term;
        signed_term *= cplx((k % 2 == 0) ? 1.0 : -1.0);
        acc += signed_term;
    }
    acc *= cplx(1.0) / c0;
    return acc;
}

}  // namespace detail

/// The Z-action on the strongly regular nilfiber,
/// (z_1, ..., z_{n-1}) . x = Ad(g_1 z_1 g_1^{-1}) ... Ad(g_{n-1} z_{n-1} g_{n-1}^{-1}) . x,
/// where g_i conjugates x_i to the principal nilpotent Jordan block.
inline ComplexMatrix z_action_nilfiber(const ComplexMatrix& x, const ZParams& params, Rng& rng,
                                       const Tolerance& tol = {}) {
    params.validate();
    const int n = x.n();
    if (params.n != n) throw PreconditionError("z_action_nilfiber: dimension mismatch");

    const KWPoint phi = kw_map(x, KWCoords::CharCoeffs);
    const double phi_thresh = std::max(tol.abs_tol * 100.0, tol.rel_tol * (1.0 + std::pow(std::max(1.0, x.frobenius()), n)));
    if (phi.norm() > phi_thresh)
        throw PreconditionError("z_action_nilfiber: x is not in the nilfiber");
    if (!sreg_report(x, tol).is_sreg)
        throw PreconditionError("z_action_nilfiber: x is not strongly regular");

    ComplexMatrix h = ComplexMatrix::identity(n);
    for (int i = 1; i < n; ++i) {
        const ComplexMatrix gi = regular_nilpotent_conjugator(cutoff(x, i), rng, tol);
        const ComplexMatrix e = ComplexMatrix::principal_nilpotent(i);
        const auto& coeffs = params.z[static_cast<std::size_t>(i - 1)];
        ComplexMatrix zi(i);
        ComplexMatrix ek = ComplexMatrix::identity(i);
        for (int k = 0; k < i; ++k) {
            ComplexMatrix term = ek;
            term *= coeffs[static_cast<std::size_t>(k)];
            zi += term;
            if (k + 1 < i) ek = ek * e;
        }
        const ComplexMatrix zi_inv = detail::invert_unipotent_scaled(zi, coeffs[0], i);
        const ComplexMatrix gi_inv = inverse(gi, tol);
        const ComplexMatrix factor = (gi * zi * gi_inv).pad_identity(n);
        // pad with identity so only the top-left i x i block acts
        h = h * factor;
    }
    return h * x * inverse(h, tol);
}

}  // namespace gz
