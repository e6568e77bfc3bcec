#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "gz/errors.hpp"
#include "gz/matrix.hpp"
#include "gz/polynomial.hpp"
#include "gz/tolerance.hpp"

namespace gz {

// ---------------------------------------------------------------------------
// Characteristic polynomial
// ---------------------------------------------------------------------------

namespace detail {

/// In-place unitary (Householder) reduction to upper Hessenberg form.
/// Columns that are already Hessenberg are left untouched, so Hessenberg
/// inputs pass through exactly.
inline void reduce_to_hessenberg(ComplexMatrix& a) {
    const int n = a.n();
    for (int k = 0; k + 2 < n; ++k) {
        double below = 0.0;
        for (int r = k + 2; r < n; ++r) below += std::norm(a(r, k));
        if (below == 0.0) continue;
        double colnorm = std::sqrt(below + std::norm(a(k + 1, k)));
        if (std::sqrt(below) <= 1e-300 * colnorm) continue;

        std::vector<cplx> v(static_cast<std::size_t>(n - k - 1));
        for (int r = k + 1; r < n; ++r) v[static_cast<std::size_t>(r - k - 1)] = a(r, k);
        cplx x0 = v[0];
        double anorm = 0.0;
        for (const auto& z : v) anorm += std::norm(z);
        anorm = std::sqrt(anorm);
        cplx phase = (std::abs(x0) == 0.0) ? cplx(1.0) : x0 / std::abs(x0);
        cplx beta = -phase * anorm;
        v[0] -= beta;
        double vnorm2 = 0.0;
        for (const auto& z : v) vnorm2 += std::norm(z);
        if (vnorm2 == 0.0) continue;

        // A <- P A P with P = I - 2 v v* / (v* v), acting on rows/cols k+1..n-1.
        for (int c = 0; c < n; ++c) {
            cplx s = 0.0;
            for (int r = k + 1; r < n; ++r) s += std::conj(v[static_cast<std::size_t>(r - k - 1)]) * a(r, c);
            s *= 2.0 / vnorm2;
            for (int r = k + 1; r < n; ++r) a(r, c) -= s * v[static_cast<std::size_t>(r - k - 1)];
        }
        for (int r = 0; r < n; ++r) {
            cplx s = 0.0;
            for (int c = k + 1; c < n; ++c) s += a(r, c) * v[static_cast<std::size_t>(c - k - 1)];
            s *= 2.0 / vnorm2;
            for (int c = k + 1; c < n; ++c) a(r, c) -= s * std::conj(v[static_cast<std::size_t>(c - k - 1)]);
        }
        for (int r = k + 2; r < n; ++r) a(r, k) = 0.0;
    }
}

/// Characteristic polynomials of all leading principal submatrices of an
/// upper Hessenberg matrix, by the last-row cofactor recursion
///   p_k(t) = (t - h_kk) p_{k-1}(t) - sum_m h_mk (prod_{l=m..k-1} h_{l+1,l}) p_{m-1}(t).
inline std::vector<Polynomial> hessenberg_charpoly_levels(const ComplexMatrix& h) {
    const int n = h.n();
    std::vector<Polynomial> p;
    p.reserve(static_cast<std::size_t>(n) + 1);
    p.push_back(Polynomial::constant(1.0));
    for (int k = 1; k <= n; ++k) {
        Polynomial pk = p[static_cast<std::size_t>(k - 1)].shift_up() -
                        p[static_cast<std::size_t>(k - 1)] * h(k - 1, k - 1);
        cplx subprod = 1.0;
        for (int m = k - 1; m >= 1; --m) {
            subprod *= h(m, m - 1);
            pk = pk - p[static_cast<std::size_t>(m - 1)] * (h(m - 1, k - 1) * subprod);
        }
        p.push_back(pk);
    }
    return p;
}

}  // namespace detail

/// Monic characteristic polynomial det(tI - M).
inline Polynomial charpoly(const ComplexMatrix& m) {
    if (m.n() == 0) return Polynomial::constant(1.0);
    ComplexMatrix h = m;
    detail::reduce_to_hessenberg(h);
    return detail::hessenberg_charpoly_levels(h).back();
}

// ---------------------------------------------------------------------------
// Polynomial roots (Aberth simultaneous iteration)
// ---------------------------------------------------------------------------

namespace detail {

inline void sort_lex(std::vector<cplx>& v) {
    std::sort(v.begin(), v.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

/// Single-linkage grouping of points at a fixed radius.
inline std::vector<std::vector<cplx>> single_linkage(const std::vector<cplx>& pts, double radius) {
    std::vector<std::vector<cplx>> groups;
    for (const auto& z : pts) groups.push_back({z});
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < groups.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < groups.size() && !merged; ++j) {
                double dist = 1e300;
                for (const auto& a : groups[i])
                    for (const auto& b : groups[j]) dist = std::min(dist, std::abs(a - b));
                if (dist <= radius) {
                    groups[i].insert(groups[i].end(), groups[j].begin(), groups[j].end());
                    groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(j));
                    merged = true;
                }
            }
    }
    return groups;
}

/// An m-fold root of p is a simple root of p^(m-1); polishing the cluster
/// centroid there recovers the multiple root to near machine precision
/// instead of the raw eps^(1/m) approximant spread.
inline cplx refine_on_derivative(const std::vector<Polynomial>& derivs, cplx z0, std::size_t mult) {
    const Polynomial& q = derivs[mult - 1];
    const Polynomial& dq = derivs[mult];
    cplx z = z0;
    for (int iter = 0; iter < 40; ++iter) {
        const cplx dv = dq.eval(z);
        if (std::abs(dv) < 1e-300) break;
        const cplx step = q.eval(z) / dv;
        z -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
    }
    return z;
}

/// Noise floor for evaluating derivs[k] at z.
inline double eval_noise(const Polynomial& q, cplx z) {
    double sc = 0.0, zp = 1.0;
    for (const auto& cv : q.coeffs()) {
        sc += std::abs(cv) * zp;
        zp *= std::abs(z);
    }
    return 1e-16 * (q.degree() + 1) * sc;
}

/// A certified m-fold root must kill p, p', ..., p^(m-1) at noise level
/// while p^(m) stays clearly above it.
inline bool certify_multiplicity(const std::vector<Polynomial>& derivs, cplx z, std::size_t m) {
    constexpr double headroom = 1024.0;
    for (std::size_t k = 0; k < m; ++k)
        if (std::abs(derivs[k].eval(z)) > headroom * eval_noise(derivs[k], z)) return false;
    return std::abs(derivs[m].eval(z)) > headroom * eval_noise(derivs[m], z);
}

/// Merge approximate roots into multiplicity clusters.  The approximants of
/// an m-fold root spread over a disc of radius ~u^(1/m) (u = relative
/// backward error), so the linkage radius must escalate with the candidate
/// multiplicity; spurious large-radius chains are rejected by the
/// derivative certification test.
inline std::vector<cplx> cluster_roots(const Polynomial& p, std::vector<cplx> raw) {
    const int degree = p.degree();
    double scale = 0.0;
    for (const auto& r : raw) scale = std::max(scale, std::abs(r));
    const double base = cluster_radius(scale);
    const double backward = std::max(1, degree) * 8e-15;

    std::vector<Polynomial> derivs{p};
    for (int k = 0; k < degree; ++k) derivs.push_back(derivs.back().derivative());

    std::vector<cplx> out;
    std::vector<cplx> remaining = std::move(raw);
    sort_lex(remaining);

    for (std::size_t m = remaining.size(); m >= 2; --m) {
        if (m > static_cast<std::size_t>(degree)) continue;
        const double radius = std::max(base, 3.0 * (1.0 + scale) * std::pow(backward, 1.0 / static_cast<double>(m)));
        std::vector<cplx> keep;
        for (auto& group : single_linkage(remaining, radius)) {
            if (group.size() < m) {
                keep.insert(keep.end(), group.begin(), group.end());
                continue;
            }
            const std::size_t mult = std::min(group.size(), static_cast<std::size_t>(degree));
            cplx centroid = std::accumulate(group.begin(), group.end(), cplx(0.0)) / static_cast<double>(group.size());
            const cplx refined = refine_on_derivative(derivs, centroid, mult);
            if (std::abs(refined - centroid) <= 4.0 * radius && certify_multiplicity(derivs, refined, mult)) {
                for (std::size_t k = 0; k < group.size(); ++k) out.push_back(refined);
            } else {
                keep.insert(keep.end(), group.begin(), group.end());
            }
        }
        remaining = std::move(keep);
        if (remaining.empty()) break;
    }

    // Leftovers: simple roots, plus near-equal values merged at the base
    // radius without certification.
    for (auto& group : single_linkage(remaining, base)) {
        cplx centroid = std::accumulate(group.begin(), group.end(), cplx(0.0)) / static_cast<double>(group.size());
        for (std::size_t k = 0; k < group.size(); ++k) out.push_back(centroid);
    }
    sort_lex(out);
    return out;
}

}  // namespace detail

/// All complex roots with multiplicity (count = degree), sorted by (re, im).
/// Exact zero roots are deflated first; the rest are found by Aberth-Ehrlich
/// simultaneous iteration and merged into multiplicity clusters.
inline std::vector<cplx> polyroots(const Polynomial& p, const Tolerance& tol = {}) {
    if (p.is_zero()) throw PreconditionError("polyroots: zero polynomial");
    std::vector<cplx> c = p.coeffs();
    const cplx lead = c.back();
    for (auto& v : c) v /= lead;

    int degree = static_cast<int>(c.size()) - 1;
    if (degree == 0) return {};

    double maxc = 0.0;
    for (const auto& v : c) maxc = std::max(maxc, std::abs(v));
    const double strip = std::max(tol.abs_tol, tol.rel_tol * maxc);

    std::vector<cplx> roots;
    int zeros = 0;
    while (zeros < degree && std::abs(c[static_cast<std::size_t>(zeros)]) <= strip) ++zeros;
    for (int k = 0; k < zeros; ++k) roots.push_back(0.0);
    if (zeros > 0) c.erase(c.begin(), c.begin() + zeros);
    degree -= zeros;

    if (degree == 1) {
        roots.push_back(-c[0] / c[1]);
    } else if (degree == 2) {
        const cplx b = c[1] / c[2], a0 = c[0] / c[2];
        const cplx d = std::sqrt(b * b - 4.0 * a0);
        cplx q = (std::norm(b + d) >= std::norm(b - d)) ? -0.5 * (b + d) : -0.5 * (b - d);
        roots.push_back(q);
        roots.push_back(std::abs(q) > 0.0 ? a0 / q : -b - q);
    } else if (degree >= 3) {
        Polynomial q{std::vector<cplx>(c.begin(), c.end())};
        Polynomial dq = q.derivative();
        double bound = 0.0;
        for (int k = 0; k < degree; ++k) bound = std::max(bound, std::abs(c[static_cast<std::size_t>(k)]));
        bound += 1.0;

        // |p(z)| cannot be computed below the evaluation-noise floor; once a
        // residual falls there the approximant is as good as the arithmetic
        // allows and is frozen.
        auto noise_floor = [&](cplx zk) {
            double sc = 0.0, zp = 1.0;
            for (const auto& cv : c) {
                sc += std::abs(cv) * zp;
                zp *= std::abs(zk);
            }
            sc += zp;  // leading monic term
            return 8.0 * 1e-16 * degree * sc;
        };

        std::vector<cplx> z(static_cast<std::size_t>(degree));
        std::vector<bool> done(static_cast<std::size_t>(degree), false);
        for (int k = 0; k < degree; ++k) {
            double phi = 6.283185307179586 * (static_cast<double>(k) + 0.353) / degree;
            z[static_cast<std::size_t>(k)] = 0.5 * bound * cplx(std::cos(phi), std::sin(phi));
        }

        const int max_iter = 600;
        bool converged = false;
        for (int iter = 0; iter < max_iter && !converged; ++iter) {
            converged = true;
            for (int k = 0; k < degree; ++k) {
                if (done[static_cast<std::size_t>(k)]) continue;
                const cplx zk = z[static_cast<std::size_t>(k)];
                const cplx pv = q.eval(zk);
                if (std::abs(pv) <= noise_floor(zk)) {
                    done[static_cast<std::size_t>(k)] = true;
                    continue;
                }
                const cplx dv = dq.eval(zk);
                cplx newton = (dv == cplx(0.0)) ? cplx(1e-12) : pv / dv;
                cplx repel = 0.0;
                for (int m = 0; m < degree; ++m)
                    if (m != k) repel += 1.0 / (zk - z[static_cast<std::size_t>(m)]);
                const cplx denom = 1.0 - newton * repel;
                const cplx step = (std::abs(denom) < 1e-300) ? newton : newton / denom;
                z[static_cast<std::size_t>(k)] = zk - step;
                if (std::abs(step) <= 1e-15 * (1.0 + std::abs(zk)))
                    done[static_cast<std::size_t>(k)] = true;
                else
                    converged = false;
            }
        }
        // Acceptance ceiling: every root must at least meet the requested
        // residual tolerance, scaled by the coefficient magnitudes.
        for (int k = 0; k < degree; ++k) {
            const cplx zk = z[static_cast<std::size_t>(k)];
            double sc = 0.0, zp = 1.0;
            for (const auto& cv : c) {
                sc += std::abs(cv) * zp;
                zp *= std::max(1.0, std::abs(zk));
            }
            sc += zp;
            if (std::abs(q.eval(zk)) > std::max(strip * sc, noise_floor(zk)))
                throw NonConvergence("polyroots: Aberth iteration did not converge");
        }
        roots.insert(roots.end(), z.begin(), z.end());
    }

    return detail::cluster_roots(p, std::move(roots));
}

// ---------------------------------------------------------------------------
// Rank and nullspace with tolerance
// ---------------------------------------------------------------------------

namespace detail {

/// Gauss-Jordan elimination with complete pivoting on a copy of the rows.
/// Stops as soon as the best remaining pivot falls at or below `threshold`,
/// so noise rows never contaminate the reduced system.
struct Echelon {
    std::vector<std::vector<cplx>> rows;
    std::vector<int> pivot_cols;
    std::vector<double> pivots;
};

inline Echelon eliminate(std::vector<std::vector<cplx>> rows, double threshold) {
    Echelon e;
    if (rows.empty()) return e;
    const std::size_t ncols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != ncols) throw PreconditionError("rank/nullspace: ragged rows");
    std::size_t rank = 0;
    std::vector<bool> col_used(ncols, false);
    while (rank < rows.size()) {
        double best = 0.0;
        std::size_t br = rank, bc = 0;
        for (std::size_t r = rank; r < rows.size(); ++r)
            for (std::size_t cidx = 0; cidx < ncols; ++cidx)
                if (!col_used[cidx] && std::abs(rows[r][cidx]) > best) {
                    best = std::abs(rows[r][cidx]);
                    br = r;
                    bc = cidx;
                }
        if (best <= threshold) break;
        std::swap(rows[rank], rows[br]);
        e.pivots.push_back(best);
        e.pivot_cols.push_back(static_cast<int>(bc));
        col_used[bc] = true;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            const cplx f = rows[r][bc] / rows[rank][bc];
            if (f == cplx(0.0)) continue;
            for (std::size_t cidx = 0; cidx < ncols; ++cidx) rows[r][cidx] -= f * rows[rank][cidx];
            rows[r][bc] = 0.0;
        }
        ++rank;
    }
    e.rows = std::move(rows);
    return e;
}

inline double frobenius_of_rows(const std::vector<std::vector<cplx>>& rows) {
    double s = 0.0;
    for (const auto& r : rows)
        for (const auto& v : r) s += std::norm(v);
    return std::sqrt(s);
}

}  // namespace detail

/// Numerical rank of a family of complex vectors; pivots below the effective
/// threshold count as zero.
inline int rank_tol(const std::vector<std::vector<cplx>>& rows, const Tolerance& tol = {}) {
    if (rows.empty()) return 0;
    const double thresh =
        tol.effective(detail::frobenius_of_rows(rows),
                      static_cast<int>(std::max(rows.size(), rows[0].size())));
    return static_cast<int>(detail::eliminate(rows, thresh).pivots.size());
}

inline int rank_tol(const ComplexMatrix& m, const Tolerance& tol = {}) {
    std::vector<std::vector<cplx>> rows;
    rows.reserve(static_cast<std::size_t>(m.n()));
    for (int r = 0; r < m.n(); ++r) {
        std::vector<cplx> row(static_cast<std::size_t>(m.n()));
        for (int c = 0; c < m.n(); ++c) row[static_cast<std::size_t>(c)] = m(r, c);
        rows.push_back(std::move(row));
    }
    return rank_tol(rows, tol);
}

/// Orthonormal basis of the numerical kernel of the linear map given by
/// `rows` (acting on column vectors of length rows[0].size()).
inline std::vector<std::vector<cplx>> nullspace(const std::vector<std::vector<cplx>>& rows,
                                                const Tolerance& tol = {}) {
    if (rows.empty()) return {};
    const std::size_t ncols = rows[0].size();
    const double thresh =
        tol.effective(detail::frobenius_of_rows(rows), static_cast<int>(std::max(rows.size(), ncols)));
    detail::Echelon e = detail::eliminate(rows, thresh);

    const std::vector<int>& pivot_cols = e.pivot_cols;
    std::vector<std::size_t> pivot_rows(pivot_cols.size());
    for (std::size_t k = 0; k < pivot_rows.size(); ++k) pivot_rows[k] = k;

    std::vector<bool> is_pivot(ncols, false);
    for (int cidx : pivot_cols) is_pivot[static_cast<std::size_t>(cidx)] = true;

    std::vector<std::vector<cplx>> basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<cplx> v(ncols, 0.0);
        v[free_col] = 1.0;
        // Rows were fully reduced (Gauss-Jordan), so each pivot variable is
        // determined directly by the free column's entry in its pivot row.
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
            const std::size_t pr = pivot_rows[k];
            const std::size_t pc = static_cast<std::size_t>(pivot_cols[k]);
            v[pc] = -e.rows[pr][free_col] / e.rows[pr][pc];
        }
        basis.push_back(std::move(v));
    }

    // Modified Gram-Schmidt.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            cplx proj = 0.0;
            for (std::size_t k = 0; k < ncols; ++k) proj += std::conj(basis[j][k]) * basis[i][k];
            for (std::size_t k = 0; k < ncols; ++k) basis[i][k] -= proj * basis[j][k];
        }
        double nrm = 0.0;
        for (const auto& v : basis[i]) nrm += std::norm(v);
        nrm = std::sqrt(nrm);
        if (nrm > 0.0)
            for (auto& v : basis[i]) v /= nrm;
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Matrix exponential
// ---------------------------------------------------------------------------

/// e^M.  Nilpotent inputs (||M^n|| below the effective threshold at scale
/// max(1,||M||)^n) take the exact terminating series; everything else is
/// scaling-and-squaring around a Taylor core.
inline ComplexMatrix expm(const ComplexMatrix& m, const Tolerance& tol = {}) {
    const int n = m.n();
    if (!m.is_finite()) throw PreconditionError("expm: non-finite entries");
    const double norm = m.frobenius();
    if (n == 0) return m;

    // Nilpotent inputs take the exact terminating series regardless of norm;
    // the flows over the nilfiber produce large nilpotent exponents.
    if (norm < 1e30) {
        ComplexMatrix power_n = m.power(n);
        const double nil_thresh = tol.effective(std::pow(std::max(1.0, norm), n), n);
        if (power_n.frobenius() <= nil_thresh) {
            ComplexMatrix sum = ComplexMatrix::identity(n);
            ComplexMatrix term = ComplexMatrix::identity(n);
            for (int k = 1; k < n; ++k) {
                term = term * m;
                term *= cplx(1.0 / k);
                sum += term;
            }
            return sum;
        }
    }
    if (norm > 2e4) throw OverflowError("expm: norm too large, result would overflow");

    int squarings = 0;
    double scaled = norm;
    while (scaled > 0.25) {
        scaled *= 0.5;
        ++squarings;
    }
    ComplexMatrix a = m;
    a *= cplx(std::pow(2.0, -squarings));

    ComplexMatrix sum = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k <= 24; ++k) {
        term = term * a;
        term *= cplx(1.0 / k);
        sum += term;
        if (term.frobenius() <= 1e-18 * sum.frobenius()) break;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    if (!sum.is_finite()) throw OverflowError("expm: overflow during squaring");
    return sum;
}

// ---------------------------------------------------------------------------
// Bracket, trace form, inverse
// ---------------------------------------------------------------------------

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.n() != b.n()) throw PreconditionError("commutator: dimension mismatch");
    return a * b - b * a;
}

/// beta(a, b) = tr(ab), the invariant form on gl(n).
inline cplx trace_form(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.n() != b.n()) throw PreconditionError("trace_form: dimension mismatch");
    cplx t = 0.0;
    for (int r = 0; r < a.n(); ++r)
        for (int c = 0; c < a.n(); ++c) t += a(r, c) * b(c, r);
    return t;
}

inline ComplexMatrix inverse(const ComplexMatrix& m, const Tolerance& tol = {}) {
    const int n = m.n();
    ComplexMatrix a = m;
    ComplexMatrix inv = ComplexMatrix::identity(n);
    const double thresh = tol.effective(m.frobenius(), n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (std::abs(a(piv, col)) <= thresh) throw SingularMatrix("inverse: matrix numerically singular");
        if (piv != col)
            for (int c = 0; c < n; ++c) {
                std::swap(a(piv, c), a(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        const cplx d = a(col, col);
        for (int c = 0; c < n; ++c) {
            a(col, c) /= d;
            inv(col, c) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const cplx f = a(r, col);
            if (f == cplx(0.0)) continue;
            for (int c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Multiset matching of spectra
// ---------------------------------------------------------------------------

/// Greedy nearest matching after a lexicographic sort; deterministic and
/// order-independent.
inline bool multiset_match(std::vector<cplx> a, std::vector<cplx> b, double radius) {
    if (a.size() != b.size()) return false;
    detail::sort_lex(a);
    detail::sort_lex(b);
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        double best = 1e300;
        std::size_t bi = b.size();
        for (std::size_t k = 0; k < b.size(); ++k)
            if (!used[k] && std::abs(x - b[k]) < best) {
                best = std::abs(x - b[k]);
                bi = k;
            }
        if (bi == b.size() || best > radius) return false;
        used[bi] = true;
    }
    return true;
}

/// Size of the largest common sub-multiset under tolerant matching.
inline int multiset_intersection_size(std::vector<cplx> a, std::vector<cplx> b, double radius) {
    detail::sort_lex(a);
    detail::sort_lex(b);
    std::vector<bool> used(b.size(), false);
    int count = 0;
    for (const auto& x : a) {
        double best = 1e300;
        std::size_t bi = b.size();
        for (std::size_t k = 0; k < b.size(); ++k)
            if (!used[k] && std::abs(x - b[k]) < best) {
                best = std::abs(x - b[k]);
                bi = k;
            }
        if (bi != b.size() && best <= radius) {
            used[bi] = true;
            ++count;
        }
    }
    return count;
}

/// Collapse a multiset to its distinct values under the cluster radius.
inline std::vector<cplx> distinct_values(std::vector<cplx> a, double radius) {
    detail::sort_lex(a);
    std::vector<cplx> out;
    for (const auto& x : a) {
        bool found = false;
        for (const auto& y : out)
            if (std::abs(x - y) <= radius) {
                found = true;
                break;
            }
        if (!found) out.push_back(x);
    }
    return out;
}

}  // namespace gz
