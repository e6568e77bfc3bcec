#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "gz/matrix.hpp"
#include "gz/numlin.hpp"

namespace gz {

enum class KWCoords { Traces, CharCoeffs };

/// A point of C^{n(n+1)/2} with level structure (1, 2, ..., n).  Level i
/// stores either the trace coordinates (f_{i,1}, ..., f_{i,i}) with
/// f_{i,j} = tr(x_i^j), or the characteristic coefficients
/// (p_{i,1}, ..., p_{i,i}) where p_{i,j} is the coefficient of t^{j-1} in
/// the monic characteristic polynomial of the i-th cutoff.
struct KWPoint {
    int n = 0;
    KWCoords coords = KWCoords::CharCoeffs;
    std::vector<std::vector<cplx>> levels;

    void validate() const {
        if (static_cast<int>(levels.size()) != n)
            throw PreconditionError("KWPoint: expected " + std::to_string(n) + " levels");
        for (int i = 1; i <= n; ++i)
            if (static_cast<int>(levels[static_cast<std::size_t>(i - 1)].size()) != i)
                throw PreconditionError("KWPoint: level " + std::to_string(i) + " must have " +
                                        std::to_string(i) + " entries");
    }

    static KWPoint zeros(int n, KWCoords coords) {
        KWPoint p;
        p.n = n;
        p.coords = coords;
        for (int i = 1; i <= n; ++i) p.levels.emplace_back(static_cast<std::size_t>(i), cplx(0.0));
        return p;
    }

    double norm() const {
        double s = 0.0;
        for (const auto& lev : levels)
            for (const auto& v : lev) s += std::norm(v);
        return std::sqrt(s);
    }
};

inline double distance(const KWPoint& a, const KWPoint& b) {
    if (a.n != b.n || a.coords != b.coords)
        throw PreconditionError("KWPoint distance: incompatible points");
    double s = 0.0;
    for (std::size_t i = 0; i < a.levels.size(); ++i)
        for (std::size_t j = 0; j < a.levels[i].size(); ++j)
            s += std::norm(a.levels[i][j] - b.levels[i][j]);
    return std::sqrt(s);
}

/// The Ritz values: sigma[i-1] is the eigenvalue multiset of the i-th cutoff.
struct RitzData {
    int n = 0;
    std::vector<std::vector<cplx>> sigma;

    void validate() const {
        if (static_cast<int>(sigma.size()) != n)
            throw PreconditionError("RitzData: expected " + std::to_string(n) + " levels");
        for (int i = 1; i <= n; ++i)
            if (static_cast<int>(sigma[static_cast<std::size_t>(i - 1)].size()) != i)
                throw PreconditionError("RitzData: level " + std::to_string(i) + " must have " +
                                        std::to_string(i) + " values");
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& lev : sigma)
            for (const auto& v : lev) m = std::max(m, std::abs(v));
        return m;
    }
};

/// The i-th cutoff x_i: the leading principal i x i submatrix, 1 <= i <= n.
inline ComplexMatrix cutoff(const ComplexMatrix& x, int i) {
    if (i < 1 || i > x.n()) throw PreconditionError("cutoff: level out of range");
    return x.leading_principal(i);
}

/// f_{i,j}(x) = tr((x_i)^j), 1 <= j <= i <= n.
inline cplx gz_value(const ComplexMatrix& x, int i, int j) {
    if (i < 1 || i > x.n() || j < 1 || j > i) throw PreconditionError("gz_value: index out of range");
    return cutoff(x, i).power(j).trace();
}

/// Full Kostant-Wallach map in the requested coordinates.
inline KWPoint kw_map(const ComplexMatrix& x, KWCoords coords = KWCoords::CharCoeffs) {
    KWPoint p;
    p.n = x.n();
    p.coords = coords;
    for (int i = 1; i <= x.n(); ++i) {
        std::vector<cplx> level(static_cast<std::size_t>(i));
        if (coords == KWCoords::Traces) {
            ComplexMatrix xi = cutoff(x, i);
            ComplexMatrix pw = xi;
            for (int j = 1; j <= i; ++j) {
                level[static_cast<std::size_t>(j - 1)] = pw.trace();
                if (j < i) pw = pw * xi;
            }
        } else {
            Polynomial cp = charpoly(cutoff(x, i));
            for (int j = 1; j <= i; ++j) level[static_cast<std::size_t>(j - 1)] = cp.coeff(j - 1);
        }
        p.levels.push_back(std::move(level));
    }
    return p;
}

// ---------------------------------------------------------------------------
// Newton's identities between power sums and characteristic coefficients
// ---------------------------------------------------------------------------

namespace detail {

/// Power sums s_1..s_i -> elementary symmetric e_1..e_i.
inline std::vector<cplx> power_sums_to_elementary(const std::vector<cplx>& s) {
    const int i = static_cast<int>(s.size());
    std::vector<cplx> e(static_cast<std::size_t>(i) + 1, 0.0);
    e[0] = 1.0;
    for (int k = 1; k <= i; ++k) {
        cplx acc = s[static_cast<std::size_t>(k - 1)];
        for (int m = 1; m < k; ++m) {
            const double sign = (m % 2 == 1) ? 1.0 : -1.0;
            acc -= sign * e[static_cast<std::size_t>(m)] * s[static_cast<std::size_t>(k - m - 1)];
        }
        const double sign_k = (k % 2 == 1) ? 1.0 : -1.0;
        e[static_cast<std::size_t>(k)] = sign_k * acc / static_cast<double>(k);
    }
    return e;
}

/// Elementary symmetric e_0..e_i -> power sums s_1..s_i.
inline std::vector<cplx> elementary_to_power_sums(const std::vector<cplx>& e) {
    const int i = static_cast<int>(e.size()) - 1;
    std::vector<cplx> s(static_cast<std::size_t>(i), 0.0);
    for (int k = 1; k <= i; ++k) {
        const double sign_k = (k % 2 == 1) ? 1.0 : -1.0;
        cplx acc = sign_k * static_cast<double>(k) * e[static_cast<std::size_t>(k)];
        for (int m = 1; m < k; ++m) {
            const double sign = (m % 2 == 1) ? 1.0 : -1.0;
            acc += sign * e[static_cast<std::size_t>(m)] * s[static_cast<std::size_t>(k - m - 1)];
        }
        s[static_cast<std::size_t>(k - 1)] = acc;
    }
    return s;
}

}  // namespace detail

/// Per-level conversion between trace coordinates and characteristic
/// coefficients.  An involution up to rounding.
inline KWPoint traces_to_coeffs(const KWPoint& p) {
    p.validate();
    if (p.coords != KWCoords::Traces) throw PreconditionError("traces_to_coeffs: point not in trace coordinates");
    KWPoint q;
    q.n = p.n;
    q.coords = KWCoords::CharCoeffs;
    for (int i = 1; i <= p.n; ++i) {
        const std::vector<cplx> e = detail::power_sums_to_elementary(p.levels[static_cast<std::size_t>(i - 1)]);
        std::vector<cplx> level(static_cast<std::size_t>(i));
        // p_{i,j} = coefficient of t^{j-1} = (-1)^{i-j+1} e_{i-j+1}
        for (int j = 1; j <= i; ++j) {
            const int k = i - j + 1;
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            level[static_cast<std::size_t>(j - 1)] = sign * e[static_cast<std::size_t>(k)];
        }
        q.levels.push_back(std::move(level));
    }
    return q;
}

inline KWPoint coeffs_to_traces(const KWPoint& p) {
    p.validate();
    if (p.coords != KWCoords::CharCoeffs) throw PreconditionError("coeffs_to_traces: point not in coefficient coordinates");
    KWPoint q;
    q.n = p.n;
    q.coords = KWCoords::Traces;
    for (int i = 1; i <= p.n; ++i) {
        std::vector<cplx> e(static_cast<std::size_t>(i) + 1, 0.0);
        e[0] = 1.0;
        for (int k = 1; k <= i; ++k) {
            const int j = i - k + 1;
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            e[static_cast<std::size_t>(k)] = sign * p.levels[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        }
        q.levels.push_back(detail::elementary_to_power_sums(e));
    }
    return q;
}

/// Monic polynomial encoded by level i of a coefficient-coordinate point.
inline Polynomial level_polynomial(const KWPoint& p, int i) {
    if (p.coords != KWCoords::CharCoeffs) throw PreconditionError("level_polynomial: point not in coefficient coordinates");
    std::vector<cplx> c(p.levels[static_cast<std::size_t>(i - 1)]);
    c.push_back(1.0);
    return Polynomial(std::move(c));
}

/// sigma_i = roots of charpoly(x_i) for every level.
inline RitzData ritz_values(const ComplexMatrix& x, const Tolerance& tol = {}) {
    RitzData r;
    r.n = x.n();
    for (int i = 1; i <= x.n(); ++i) r.sigma.push_back(polyroots(charpoly(cutoff(x, i)), tol));
    return r;
}

/// Phi(x) = Phi(y) iff all level spectra agree as multisets.
inline bool fibers_equal(const ComplexMatrix& x, const ComplexMatrix& y, const Tolerance& tol = {}) {
    if (x.n() != y.n()) throw PreconditionError("fibers_equal: dimension mismatch");
    const RitzData rx = ritz_values(x, tol);
    const RitzData ry = ritz_values(y, tol);
    const double radius = cluster_radius(std::max(rx.max_abs(), ry.max_abs()));
    for (int i = 0; i < x.n(); ++i)
        if (!multiset_match(rx.sigma[static_cast<std::size_t>(i)], ry.sigma[static_cast<std::size_t>(i)], radius))
            return false;
    return true;
}

/// nabla f_{i,j}(x) = j (x_i)^{j-1} embedded in gl(n) by zero padding.
inline ComplexMatrix gradient(const ComplexMatrix& x, int i, int j) {
    if (i < 1 || i > x.n() || j < 1 || j > i) throw PreconditionError("gradient: index out of range");
    ComplexMatrix g = cutoff(x, i).power(j - 1);
    g *= cplx(static_cast<double>(j));
    return g.pad_zero(x.n());
}

/// Hamiltonian vector field (xi_{f_{i,j}})_x = [x, nabla f_{i,j}(x)].
inline ComplexMatrix ham_field(const ComplexMatrix& x, int i, int j) {
    return commutator(x, gradient(x, i, j));
}

/// {f_{i,j}, f_{k,l}}(x) = beta(x, [nabla f_{i,j}, nabla f_{k,l}]).
inline cplx poisson_bracket(const ComplexMatrix& x, int i, int j, int k, int l) {
    return trace_form(x, commutator(gradient(x, i, j), gradient(x, k, l)));
}

/// Lie-Poisson bracket of the linear functionals beta(y, .) and beta(w, .).
/// Evaluates to beta(x, [y, w]); used to check that the cutoff projections
/// are Poisson maps.
inline cplx poisson_bracket_linear(const ComplexMatrix& x, const ComplexMatrix& y, const ComplexMatrix& w) {
    return trace_form(x, commutator(y, w));
}

}  // namespace gz
