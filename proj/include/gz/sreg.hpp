#pragma once

#include <cstdint>
#include <vector>

#include "gz/gzmap.hpp"
#include "gz/matrix.hpp"
#include "gz/numlin.hpp"

namespace gz {

namespace detail {

/// Rows of the linear system [Z, M] = 0 in the n^2 unknowns vec(Z).
/// Equation (r,c):  sum_k Z_{r,k} M_{k,c} - M_{r,k} Z_{k,c} = 0.
inline std::vector<std::vector<cplx>> commutation_rows(const ComplexMatrix& m) {
    const int n = m.n();
    std::vector<std::vector<cplx>> rows;
    rows.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            std::vector<cplx> row(static_cast<std::size_t>(n) * n, 0.0);
            for (int k = 0; k < n; ++k) {
                row[static_cast<std::size_t>(r) * n + k] += m(k, c);
                row[static_cast<std::size_t>(k) * n + c] -= m(r, k);
            }
            rows.push_back(std::move(row));
        }
    return rows;
}

/// Rows of [pad(Z), M] = 0 for Z in gl(i) zero-padded into gl(i+1),
/// expressed in the i^2 unknowns vec(Z).
inline std::vector<std::vector<cplx>> padded_commutation_rows(const ComplexMatrix& m, int i) {
    const int n = m.n();
    std::vector<std::vector<cplx>> rows;
    rows.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            std::vector<cplx> row(static_cast<std::size_t>(i) * i, 0.0);
            for (int k = 0; k < i; ++k) {
                if (r < i) row[static_cast<std::size_t>(r) * i + k] += m(k, c);
                if (c < i) row[static_cast<std::size_t>(k) * i + c] -= m(r, k);
            }
            rows.push_back(std::move(row));
        }
    return rows;
}

/// Scale each nonzero vector to unit norm.  Linear independence is a
/// projective condition; without this, gradients of different orders (norms
/// 1 vs ||x||^j) would be ranked against a single global threshold.
inline std::vector<std::vector<cplx>> normalize_rows(std::vector<std::vector<cplx>> rows) {
    for (auto& row : rows) {
        double nrm = 0.0;
        for (const auto& v : row) nrm += std::norm(v);
        nrm = std::sqrt(nrm);
        if (nrm > 0.0)
            for (auto& v : row) v /= nrm;
    }
    return rows;
}

}  // namespace detail

/// Basis of the centralizer {Z : ZM = MZ} in gl(n).
inline std::vector<ComplexMatrix> centralizer(const ComplexMatrix& m, const Tolerance& tol = {}) {
    const int n = m.n();
    std::vector<ComplexMatrix> basis;
    for (const auto& v : nullspace(detail::normalize_rows(detail::commutation_rows(m)), tol)) {
        ComplexMatrix z(n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) z(r, c) = v[static_cast<std::size_t>(r) * n + c];
        basis.push_back(std::move(z));
    }
    return basis;
}

/// Regular means the centralizer has the minimal dimension n.
inline bool is_regular(const ComplexMatrix& m, const Tolerance& tol = {}) {
    return static_cast<int>(centralizer(m, tol).size()) == m.n();
}

/// Criterion 1: the n(n+1)/2 gradients of the GZ functions, flattened into
/// C^{n^2}, have full rank.
inline std::pair<bool, int> is_sreg_differentials(const ComplexMatrix& x, const Tolerance& tol = {}) {
    std::vector<std::vector<cplx>> rows;
    for (int i = 1; i <= x.n(); ++i)
        for (int j = 1; j <= i; ++j) rows.push_back(gradient(x, i, j).flat());
    const int rank = rank_tol(detail::normalize_rows(std::move(rows)), tol);
    return {rank == x.n() * (x.n() + 1) / 2, rank};
}

/// Criterion 2: the Hamiltonian fields for levels i <= n-1 span n(n-1)/2
/// directions.
inline std::pair<bool, int> is_sreg_tangent(const ComplexMatrix& x, const Tolerance& tol = {}) {
    std::vector<std::vector<cplx>> rows;
    for (int i = 1; i < x.n(); ++i)
        for (int j = 1; j <= i; ++j) rows.push_back(ham_field(x, i, j).flat());
    const int rank = rank_tol(detail::normalize_rows(std::move(rows)), tol);
    return {rank == x.n() * (x.n() - 1) / 2, rank};
}

struct CentralizerCriterion {
    bool ok = false;
    std::vector<bool> per_level_regular;       // levels 1..n
    std::vector<int> intersection_dims;        // levels 1..n-1
};

/// Criterion 3: every cutoff regular and adjacent cutoff centralizers meet
/// trivially, dim(z_{g_i}(x_i) cap z_{g_{i+1}}(x_{i+1})) = 0.
inline CentralizerCriterion is_sreg_centralizers(const ComplexMatrix& x, const Tolerance& tol = {}) {
    CentralizerCriterion out;
    const int n = x.n();
    out.ok = true;
    for (int i = 1; i <= n; ++i) {
        const bool reg = is_regular(cutoff(x, i), tol);
        out.per_level_regular.push_back(reg);
        if (!reg) out.ok = false;
    }
    for (int i = 1; i < n; ++i) {
        auto rows = detail::commutation_rows(cutoff(x, i));
        auto upper = detail::padded_commutation_rows(cutoff(x, i + 1), i);
        rows.insert(rows.end(), upper.begin(), upper.end());
        const int dim = i * i - rank_tol(detail::normalize_rows(std::move(rows)), tol);
        out.intersection_dims.push_back(dim);
        if (dim != 0) out.ok = false;
    }
    return out;
}

/// Combined report; the three criteria are equivalent, so the verdicts must
/// agree on well-conditioned input.
struct SregReport {
    bool is_sreg = false;
    bool verdicts_agree = false;
    bool by_differentials = false;
    bool by_tangent = false;
    bool by_centralizers = false;
    int diff_rank = 0;       // target n(n+1)/2
    int tangent_rank = 0;    // target n(n-1)/2
    std::vector<bool> per_level_regular;
    std::vector<int> centralizer_intersection_dims;
};

inline SregReport sreg_report(const ComplexMatrix& x, const Tolerance& tol = {}) {
    SregReport rep;
    auto [d_ok, d_rank] = is_sreg_differentials(x, tol);
    auto [t_ok, t_rank] = is_sreg_tangent(x, tol);
    CentralizerCriterion c = is_sreg_centralizers(x, tol);
    rep.by_differentials = d_ok;
    rep.by_tangent = t_ok;
    rep.by_centralizers = c.ok;
    rep.diff_rank = d_rank;
    rep.tangent_rank = t_rank;
    rep.per_level_regular = c.per_level_regular;
    rep.centralizer_intersection_dims = c.intersection_dims;
    rep.verdicts_agree = (d_ok == t_ok) && (t_ok == c.ok);
    rep.is_sreg = d_ok && t_ok && c.ok;
    return rep;
}

// ---------------------------------------------------------------------------
// The distinguished sets g_Theta and g_Omega
// ---------------------------------------------------------------------------

/// x in g_Theta: adjacent level spectra are disjoint multisets.
inline bool is_in_theta_set(const ComplexMatrix& x, const Tolerance& tol = {}) {
    const RitzData r = ritz_values(x, tol);
    const double radius = cluster_radius(r.max_abs());
    for (int i = 0; i + 1 < x.n(); ++i)
        if (multiset_intersection_size(r.sigma[static_cast<std::size_t>(i)],
                                       r.sigma[static_cast<std::size_t>(i + 1)], radius) > 0)
            return false;
    return true;
}

/// x in g_Omega: every cutoff regular semisimple (i distinct eigenvalues)
/// and adjacent spectra disjoint.
inline bool is_in_omega_set(const ComplexMatrix& x, const Tolerance& tol = {}) {
    const RitzData r = ritz_values(x, tol);
    const double radius = cluster_radius(r.max_abs());
    for (int i = 1; i <= x.n(); ++i)
        if (static_cast<int>(distinct_values(r.sigma[static_cast<std::size_t>(i - 1)], radius).size()) != i)
            return false;
    for (int i = 0; i + 1 < x.n(); ++i)
        if (multiset_intersection_size(r.sigma[static_cast<std::size_t>(i)],
                                       r.sigma[static_cast<std::size_t>(i + 1)], radius) > 0)
            return false;
    return true;
}

/// Shared eigenvalues between adjacent cutoffs.  The 2^j orbit-count formula
/// counts j = sum j_i; the multiset and distinct-value conventions differ on
/// degenerate fibers, so both are reported.
struct SharedEigenvalueCount {
    bool input_sreg = false;
    std::vector<int> per_level_multiset;   // j_i as multiset intersections
    std::vector<int> per_level_distinct;   // j_i counting distinct shared values
    int total_multiset = 0;
    int total_distinct = 0;

    std::uint64_t predicted_orbits_multiset() const { return std::uint64_t(1) << total_multiset; }
    std::uint64_t predicted_orbits_distinct() const { return std::uint64_t(1) << total_distinct; }
};

inline SharedEigenvalueCount shared_eigenvalue_count(const ComplexMatrix& x, const Tolerance& tol = {}) {
    SharedEigenvalueCount out;
    out.input_sreg = sreg_report(x, tol).is_sreg;
    const RitzData r = ritz_values(x, tol);
    const double radius = cluster_radius(r.max_abs());
    for (int i = 0; i + 1 < x.n(); ++i) {
        const auto& lo = r.sigma[static_cast<std::size_t>(i)];
        const auto& hi = r.sigma[static_cast<std::size_t>(i + 1)];
        const int jm = multiset_intersection_size(lo, hi, radius);
        const int jd = multiset_intersection_size(distinct_values(lo, radius), distinct_values(hi, radius), radius);
        out.per_level_multiset.push_back(jm);
        out.per_level_distinct.push_back(jd);
        out.total_multiset += jm;
        out.total_distinct += jd;
    }
    return out;
}

}  // namespace gz
