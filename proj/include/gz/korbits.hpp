#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gz/matrix.hpp"
#include "gz/numlin.hpp"
#include "gz/permutation.hpp"
#include "gz/tolerance.hpp"

namespace gz {

// Orbits of K = GL(n-1,C) x GL(1,C) on the flag variety of gl(n,C).
// K is the fixed-point group of theta = conjugation by c = diag(1,...,1,-1).

/// Q_i (closed, i = j) or Q_{i,j} (i < j).  There are n + n(n-1)/2 orbits.
struct OrbitId {
    int i = 0;
    int j = 0;

    static OrbitId closed(int i) { return {i, i}; }
    static OrbitId mixed(int i, int j) {
        if (i >= j) throw PreconditionError("OrbitId: mixed requires i < j");
        return {i, j};
    }

    bool is_closed() const { return i == j; }
    bool operator==(const OrbitId& o) const { return i == o.i && j == o.j; }
    bool operator!=(const OrbitId& o) const { return !(*this == o); }

    std::string str() const {
        return is_closed() ? "Q_" + std::to_string(i)
                           : "Q_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    }
};

/// Complete flag in C^n: V_k = span of the first k basis vectors.
struct Flag {
    int n = 0;
    std::vector<std::vector<cplx>> basis;

    void validate(const Tolerance& tol = {}) const {
        if (static_cast<int>(basis.size()) != n)
            throw PreconditionError("Flag: expected n basis vectors");
        for (const auto& v : basis)
            if (static_cast<int>(v.size()) != n) throw PreconditionError("Flag: vector length mismatch");
        if (rank_tol(basis, tol) != n) throw PreconditionError("Flag: basis numerically degenerate");
    }
};

/// eps_a - eps_b, 1-based, a != b.
struct Root {
    int a = 0;
    int b = 0;

    bool positive() const { return a < b; }
    Root negated() const { return {b, a}; }
    bool operator==(const Root& o) const { return a == o.a && b == o.b; }
};

enum class RootType { Real, CompactImaginary, NoncompactImaginary, ComplexStable, ComplexUnstable };

inline std::string root_type_name(RootType t) {
    switch (t) {
        case RootType::Real: return "real";
        case RootType::CompactImaginary: return "compact-imaginary";
        case RootType::NoncompactImaginary: return "noncompact-imaginary";
        case RootType::ComplexStable: return "complex-stable";
        case RootType::ComplexUnstable: return "complex-unstable";
    }
    return "?";
}

/// Element of GL(n).  `exact` marks combinatorial representatives whose
/// entries are Gaussian integers, for which the monomial tests below are
/// exact up to a single division.
struct GroupElement {
    ComplexMatrix g;
    bool exact = false;
};

// ---------------------------------------------------------------------------
// The involution, tau, and the Springer invariant
// ---------------------------------------------------------------------------

inline ComplexMatrix theta_lie(const ComplexMatrix& m) {
    ComplexMatrix out = m;
    const int n = m.n();
    for (int k = 0; k + 1 < n; ++k) {
        out(n - 1, k) = -out(n - 1, k);
        out(k, n - 1) = -out(k, n - 1);
    }
    return out;
}

inline GroupElement theta(const GroupElement& g) { return {theta_lie(g.g), g.exact}; }

/// tau(g) = g^{-1} theta(g).
inline GroupElement tau(const GroupElement& g, const Tolerance& tol = {}) {
    return {inverse(g.g, tol) * theta_lie(g.g), false};
}

/// Underlying permutation of a monomial matrix: w(col) = row of the single
/// entry above threshold in each column.  Empty if the matrix is not
/// monomial.
inline std::optional<Permutation> monomial_permutation(const ComplexMatrix& m, const Tolerance& tol = {}) {
    const int n = m.n();
    const double thresh = tol.effective(std::max(1.0, m.frobenius()), n);
    std::vector<int> row_of_col(static_cast<std::size_t>(n), 0);
    std::vector<int> count_in_row(static_cast<std::size_t>(n), 0);
    for (int c = 0; c < n; ++c) {
        int found = 0;
        for (int r = 0; r < n; ++r)
            if (std::abs(m(r, c)) > thresh) {
                ++found;
                row_of_col[static_cast<std::size_t>(c)] = r + 1;
                ++count_in_row[static_cast<std::size_t>(r)];
            }
        if (found != 1) return std::nullopt;
    }
    for (int r = 0; r < n; ++r)
        if (count_in_row[static_cast<std::size_t>(r)] != 1) return std::nullopt;
    return Permutation(std::move(row_of_col));
}

/// g lies in the variety V iff tau(g) is monomial (normalizes the torus).
inline bool in_V(const GroupElement& g, const Tolerance& tol = {}) {
    return monomial_permutation(tau(g, tol).g, tol).has_value();
}

/// phi(v) = tau(v^) T_0 in N/T_0 = W.
inline Permutation springer_invariant(const GroupElement& g, const Tolerance& tol = {}) {
    auto w = monomial_permutation(tau(g, tol).g, tol);
    if (!w) throw PreconditionError("springer_invariant: tau(g) is not monomial, g not in V");
    return *w;
}

// ---------------------------------------------------------------------------
// Representatives
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<cplx> basis_vector(int n, int k) {  // e_k, 1-based
    std::vector<cplx> v(static_cast<std::size_t>(n), 0.0);
    v[static_cast<std::size_t>(k - 1)] = 1.0;
    return v;
}

}  // namespace detail

/// F_i = (e_1, ..., e_{i-1}, e_n, e_i, ..., e_{n-1}): the flag of the i-th
/// closed orbit; F_n is the standard flag.
inline Flag closed_orbit_representative(int i, int n) {
    if (i < 1 || i > n) throw PreconditionError("closed_orbit_representative: index out of range");
    Flag f;
    f.n = n;
    for (int k = 1; k < i; ++k) f.basis.push_back(detail::basis_vector(n, k));
    f.basis.push_back(detail::basis_vector(n, n));
    for (int k = i; k < n; ++k) f.basis.push_back(detail::basis_vector(n, k));
    return f;
}

/// F_{i,j}: slot i holds e_i + e_n and slot j holds e_i.
inline Flag orbit_representative(int i, int j, int n) {
    if (i < 1 || j <= i || j > n) throw PreconditionError("orbit_representative: need 1 <= i < j <= n");
    Flag f;
    f.n = n;
    for (int k = 1; k < i; ++k) f.basis.push_back(detail::basis_vector(n, k));
    std::vector<cplx> vi = detail::basis_vector(n, i);
    vi[static_cast<std::size_t>(n - 1)] = 1.0;
    f.basis.push_back(std::move(vi));  // e_i + e_n at slot i
    for (int k = i + 1; k < j; ++k) f.basis.push_back(detail::basis_vector(n, k));
    f.basis.push_back(detail::basis_vector(n, i));  // e_i at slot j
    for (int k = j; k < n; ++k) f.basis.push_back(detail::basis_vector(n, k));
    return f;
}

/// Classify an arbitrary flag by the K-invariant pair
///   a = min{k : V_k not contained in H},  H = span(e_1, ..., e_{n-1}),
///   b = min{k : e_n in V_k};
/// a = b gives Closed(a), a < b gives Mixed(a, b).
inline OrbitId classify_flag(const Flag& f, const Tolerance& tol = {}) {
    f.validate(tol);
    const int n = f.n;
    int a = 0;
    for (int k = 1; k <= n && a == 0; ++k) {
        const auto& v = f.basis[static_cast<std::size_t>(k - 1)];
        double vnorm = 0.0, last = std::abs(v[static_cast<std::size_t>(n - 1)]);
        for (const auto& z : v) vnorm += std::norm(z);
        vnorm = std::sqrt(vnorm);
        if (last > tol.effective(vnorm, n)) a = k;
    }
    if (a == 0) throw PreconditionError("classify_flag: no vector leaves the hyperplane; flag degenerate");

    int b = 0;
    std::vector<std::vector<cplx>> accum;
    for (int k = 1; k <= n && b == 0; ++k) {
        accum.push_back(f.basis[static_cast<std::size_t>(k - 1)]);
        std::vector<std::vector<cplx>> with_en = accum;
        with_en.push_back(detail::basis_vector(n, n));
        if (rank_tol(with_en, tol) == static_cast<int>(accum.size())) b = k;
    }
    if (b == 0) throw PreconditionError("classify_flag: e_n not reached; flag degenerate");
    return (a == b) ? OrbitId::closed(a) : OrbitId::mixed(a, b);
}

struct OrbitInfo {
    OrbitId id;
    int length = 0;
    int dimension = 0;
};

/// All n + n(n-1)/2 orbits with lengths l(Q_{i,j}) = j - i and dimensions
/// dim B_K + length.
inline std::vector<OrbitInfo> enumerate_orbits(int n) {
    if (n < 2) throw PreconditionError("enumerate_orbits: n must be >= 2");
    const int dim_bk = (n - 1) * (n - 2) / 2;
    std::vector<OrbitInfo> out;
    for (int i = 1; i <= n; ++i) out.push_back({OrbitId::closed(i), 0, dim_bk});
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back({OrbitId::mixed(i, j), j - i, dim_bk + (j - i)});
    return out;
}

// ---------------------------------------------------------------------------
// Root types and the monoid action
// ---------------------------------------------------------------------------

/// Action of the orbit involution theta_v on roots: identity for closed
/// orbits, the transposition (i j) for Q_{i,j}.
inline Root theta_v_on_root(const OrbitId& id, const Root& r) {
    if (id.is_closed()) return r;
    auto swap_ij = [&](int k) { return k == id.i ? id.j : (k == id.j ? id.i : k); };
    return {swap_ij(r.a), swap_ij(r.b)};
}

inline RootType root_type(const OrbitId& id, const Root& r) {
    if (r.a == r.b || r.a < 1 || r.b < 1) throw PreconditionError("root_type: invalid root");
    if (id.is_closed()) {
        // theta_v fixes all eps_k; E_{ab} flips sign iff exactly one index is i.
        const bool touches = (r.a == id.i) != (r.b == id.i);
        return touches ? RootType::NoncompactImaginary : RootType::CompactImaginary;
    }
    const Root image = theta_v_on_root(id, r);
    if (image == r.negated()) return RootType::Real;
    if (image == r) return RootType::CompactImaginary;  // no noncompact roots for Q_{i,j}
    return (image.positive() == r.positive()) ? RootType::ComplexStable : RootType::ComplexUnstable;
}

/// m(s_{alpha_k}) . Q per the monoid update table:
///   m(s_{i-1}) Q_i = Q_{i-1,i},   m(s_i) Q_i = Q_{i,i+1},
///   m(s_{i-1}) Q_{i,j} = Q_{i-1,j},  m(s_j) Q_{i,j} = Q_{i,j+1},
/// all other simple roots fix the orbit.
inline OrbitId monoid_action(const OrbitId& id, int k) {
    if (k < 1) throw PreconditionError("monoid_action: simple root index out of range");
    if (id.is_closed()) {
        if (k == id.i - 1) return OrbitId::mixed(id.i - 1, id.i);
        if (k == id.i) return OrbitId::mixed(id.i, id.i + 1);
        return id;
    }
    if (k == id.i - 1) return OrbitId::mixed(id.i - 1, id.j);
    if (k == id.j) return OrbitId::mixed(id.i, id.j + 1);
    return id;
}

struct ChainStep {
    OrbitId from;
    int root = 0;  // simple root index applied
    OrbitId to;
};

/// Weak-order chain from a closed orbit up to id:
/// Q_{i,j} = m(s_{j-1}) ... m(s_i) . Q_i, of length l(id).
inline std::vector<ChainStep> weak_order_chain(const OrbitId& id) {
    std::vector<ChainStep> chain;
    if (id.is_closed()) return chain;
    OrbitId cur = OrbitId::closed(id.i);
    for (int k = id.i; k < id.j; ++k) {
        const OrbitId next = monoid_action(cur, k);
        chain.push_back({cur, k, next});
        cur = next;
    }
    return chain;
}

// ---------------------------------------------------------------------------
// Group-element representatives and the Cayley transform
// ---------------------------------------------------------------------------

/// Unnormalized Cayley block [[1, i], [i, 1]] at rows/cols (k, k+1).  Differs
/// from u_alpha by a central torus factor, which leaves orbits, the Springer
/// invariant and flag classification unchanged while keeping the entries in
/// the Gaussian integers.
inline GroupElement cayley_matrix(int k, int n) {
    if (k < 1 || k >= n) throw PreconditionError("cayley_matrix: index out of range");
    ComplexMatrix m = ComplexMatrix::identity(n);
    m(k - 1, k - 1) = 1.0;
    m(k - 1, k) = cplx(0.0, 1.0);
    m(k, k - 1) = cplx(0.0, 1.0);
    m(k, k) = 1.0;
    return {std::move(m), true};
}

/// Representative s^._alpha = [[0, i], [i, 0]] at rows/cols (k, k+1).
inline GroupElement reflection_matrix(int k, int n) {
    if (k < 1 || k >= n) throw PreconditionError("reflection_matrix: index out of range");
    ComplexMatrix m = ComplexMatrix::identity(n);
    m(k - 1, k - 1) = 0.0;
    m(k, k) = 0.0;
    m(k - 1, k) = cplx(0.0, 1.0);
    m(k, k - 1) = cplx(0.0, 1.0);
    return {std::move(m), true};
}

/// Permutation-matrix representative of the closed orbit Q_i: the cycle
/// (n n-1 ... i), inverse of w = (i ... n) from the W^theta/W_K coset list.
inline GroupElement closed_orbit_group_element(int i, int n) {
    if (i < 1 || i > n) throw PreconditionError("closed_orbit_group_element: index out of range");
    return {Permutation::descending_cycle(n, n, i).matrix(), true};
}

/// v^_{i,j} = (n n-1 ... i) u_{alpha_i} s^._{i+1} ... s^._{j-1}.
inline GroupElement orbit_rep_group_element(int i, int j, int n) {
    if (i < 1 || j <= i || j > n) throw PreconditionError("orbit_rep_group_element: need 1 <= i < j <= n");
    ComplexMatrix m = closed_orbit_group_element(i, n).g * cayley_matrix(i, n).g;
    for (int k = i + 1; k < j; ++k) m = m * reflection_matrix(k, n).g;
    return {std::move(m), true};
}

/// Flag spanned by the columns of g (the image of the standard flag).
inline Flag flag_of(const GroupElement& g) {
    Flag f;
    f.n = g.g.n();
    for (int c = 0; c < f.n; ++c) f.basis.push_back(g.g.column(c));
    return f;
}

/// Matrix realizing theta_v^ = Ad(tau(v^)) o theta as a single conjugation:
/// theta_v^(M) = (tau(g) c) M (tau(g) c)^{-1}.  Verified to square to the
/// identity on gl(n).
inline ComplexMatrix theta_v_matrix(const GroupElement& g, const Tolerance& tol = {}) {
    const GroupElement t = tau(g, tol);
    if (!monomial_permutation(t.g, tol)) throw PreconditionError("theta_v_matrix: g not in V");
    ComplexMatrix conj = t.g;
    for (int r = 0; r < conj.n(); ++r) conj(r, conj.n() - 1) = -conj(r, conj.n() - 1);
    // involution sanity: conj^2 must be central (a scalar)
    const ComplexMatrix sq = conj * conj;
    const cplx lead = sq(0, 0);
    ComplexMatrix dev = sq - (lead * ComplexMatrix::identity(conj.n()));
    if (std::abs(lead) < 1e-12 || dev.frobenius() > 1e-9 * (1.0 + sq.frobenius()))
        throw NumericError("theta_v_matrix: conjugation does not square to a central element");
    return conj;
}

/// Apply theta_v^ to a Lie algebra element via the conjugation datum.
inline ComplexMatrix theta_v_apply(const ComplexMatrix& conj, const ComplexMatrix& m, const Tolerance& tol = {}) {
    return conj * m * inverse(conj, tol);
}

// ---------------------------------------------------------------------------
// Cross action and twisted conjugation
// ---------------------------------------------------------------------------

/// w x v = K v^ w^{-1} T_0 on representatives: right-multiply by the inverse
/// permutation matrix.
inline GroupElement cross_action(const Permutation& w, const GroupElement& g) {
    if (w.n() != g.g.n()) throw PreconditionError("cross_action: size mismatch");
    return {g.g * w.inverse().matrix(), g.exact};
}

/// Twisted conjugation w' * w = w' w theta(w')^{-1}; theta acts trivially on
/// W for this inner involution, so this is plain conjugation.  The signature
/// keeps theta for generality.
inline Permutation twisted_conjugation(const Permutation& wprime, const Permutation& w) {
    return compose(compose(wprime.inverse(), w), wprime);
}

}  // namespace gz
