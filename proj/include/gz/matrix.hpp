#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "gz/errors.hpp"
#include "gz/rng.hpp"

namespace gz {

using cplx = std::complex<double>;

/// Dense square complex matrix, the ambient object for everything in the
/// library.  Value semantics, row-major storage, 0-based entry access.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
        if (n < 0) throw PreconditionError("ComplexMatrix: negative dimension");
    }

    static ComplexMatrix zero(int n) { return ComplexMatrix(n); }

    static ComplexMatrix identity(int n) {
        ComplexMatrix m(n);
        for (int k = 0; k < n; ++k) m(k, k) = 1.0;
        return m;
    }

    /// E_{rc} (0-based) with a single 1.
    static ComplexMatrix elementary(int n, int r, int c) {
        ComplexMatrix m(n);
        m(r, c) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(const std::vector<cplx>& d) {
        ComplexMatrix m(static_cast<int>(d.size()));
        for (int k = 0; k < m.n(); ++k) m(k, k) = d[static_cast<std::size_t>(k)];
        return m;
    }

    /// Sum of E_{k+1,k}: the principal nilpotent Jordan block with unit
    /// subdiagonal.
    static ComplexMatrix principal_nilpotent(int n) {
        ComplexMatrix m(n);
        for (int k = 0; k + 1 < n; ++k) m(k + 1, k) = 1.0;
        return m;
    }

    static ComplexMatrix random_box(int n, Rng& rng) {
        ComplexMatrix m(n);
        for (auto& v : m.a_) v = rng.complex_box();
        return m;
    }

    int n() const { return n_; }

    cplx& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    const cplx& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    ComplexMatrix& operator*=(cplx s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        a.check_same(b);
        const int n = a.n_;
        ComplexMatrix c(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx(0.0)) continue;
                for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (int k = 0; k < n_; ++k) t += (*this)(k, k);
        return t;
    }

    double frobenius() const {
        double s = 0.0;
        for (const auto& v : a_) s += std::norm(v);
        return std::sqrt(s);
    }

    double max_abs() const {
        double s = 0.0;
        for (const auto& v : a_) s = std::max(s, std::abs(v));
        return s;
    }

    bool is_finite() const {
        for (const auto& v : a_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        return true;
    }

    /// Leading principal k x k submatrix.
    ComplexMatrix leading_principal(int k) const {
        if (k < 0 || k > n_) throw PreconditionError("leading_principal: size out of range");
        ComplexMatrix m(k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) m(r, c) = (*this)(r, c);
        return m;
    }

    /// Embed into gl(n) in the top-left corner, zero elsewhere.
    ComplexMatrix pad_zero(int n) const {
        if (n < n_) throw PreconditionError("pad_zero: target smaller than source");
        ComplexMatrix m(n);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) m(r, c) = (*this)(r, c);
        return m;
    }

    /// Embed into GL(n) in the top-left corner, identity elsewhere.
    ComplexMatrix pad_identity(int n) const {
        ComplexMatrix m = pad_zero(n);
        for (int k = n_; k < n; ++k) m(k, k) = 1.0;
        return m;
    }

    ComplexMatrix transpose() const {
        ComplexMatrix m(n_);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) m(c, r) = (*this)(r, c);
        return m;
    }

    /// M^k by repeated multiplication, k >= 0.
    ComplexMatrix power(int k) const {
        if (k < 0) throw PreconditionError("power: negative exponent");
        ComplexMatrix acc = identity(n_);
        for (int m = 0; m < k; ++m) acc = acc * (*this);
        return acc;
    }

    std::vector<cplx> column(int c) const {
        std::vector<cplx> v(static_cast<std::size_t>(n_));
        for (int r = 0; r < n_; ++r) v[static_cast<std::size_t>(r)] = (*this)(r, c);
        return v;
    }

    std::vector<cplx> apply(const std::vector<cplx>& v) const {
        std::vector<cplx> w(static_cast<std::size_t>(n_), 0.0);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) w[static_cast<std::size_t>(r)] += (*this)(r, c) * v[static_cast<std::size_t>(c)];
        return w;
    }

    /// Row-major flattening, used when ranking families of matrices.
    const std::vector<cplx>& flat() const { return a_; }

private:
    void check_same(const ComplexMatrix& o) const {
        if (n_ != o.n_) throw PreconditionError("ComplexMatrix: dimension mismatch");
    }

    int n_ = 0;
    std::vector<cplx> a_;
};

inline double distance(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).frobenius(); }

}  // namespace gz
