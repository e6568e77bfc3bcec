#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "gz/errors.hpp"

namespace gz {

/// Univariate polynomial with complex coefficients in ascending degree order.
/// The zero polynomial is stored as the single coefficient 0.
class Polynomial {
public:
    Polynomial() : c_{std::complex<double>(0.0)} {}
    explicit Polynomial(std::vector<std::complex<double>> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(0.0);
        trim();
    }

    static Polynomial constant(std::complex<double> v) { return Polynomial({v}); }

    static Polynomial monomial(int degree, std::complex<double> lead = 1.0) {
        std::vector<std::complex<double>> c(static_cast<std::size_t>(degree) + 1, 0.0);
        c.back() = lead;
        return Polynomial(std::move(c));
    }

    /// Monic polynomial with the given roots.
    static Polynomial from_roots(const std::vector<std::complex<double>>& roots) {
        std::vector<std::complex<double>> c{1.0};
        for (const auto& r : roots) {
            c.push_back(0.0);
            for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
            c[0] *= -r;
        }
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::complex<double> leading() const { return c_.back(); }
    const std::vector<std::complex<double>>& coeffs() const { return c_; }

    std::complex<double> coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)]
                                                          : std::complex<double>(0.0);
    }

    bool is_zero() const { return c_.size() == 1 && c_[0] == std::complex<double>(0.0); }

    bool is_monic(double tol = 1e-12) const { return std::abs(leading() - 1.0) <= tol; }

    std::complex<double> eval(std::complex<double> z) const {
        std::complex<double> acc = 0.0;
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<std::complex<double>> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
        return Polynomial(std::move(d));
    }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<std::complex<double>> p(c_.size() + o.c_.size() - 1, 0.0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) p[i + j] += c_[i] * o.c_[j];
        return Polynomial(std::move(p));
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<std::complex<double>> p(std::max(c_.size(), o.c_.size()), 0.0);
        for (std::size_t k = 0; k < p.size(); ++k) p[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
        return Polynomial(std::move(p));
    }

    Polynomial operator-(const Polynomial& o) const {
        std::vector<std::complex<double>> p(std::max(c_.size(), o.c_.size()), 0.0);
        for (std::size_t k = 0; k < p.size(); ++k) p[k] = coeff(static_cast<int>(k)) - o.coeff(static_cast<int>(k));
        return Polynomial(std::move(p));
    }

    Polynomial operator*(std::complex<double> s) const {
        std::vector<std::complex<double>> p = c_;
        for (auto& v : p) v *= s;
        return Polynomial(std::move(p));
    }

    /// Multiply by t (shift all degrees up by one).
    Polynomial shift_up() const {
        if (is_zero()) return Polynomial();
        std::vector<std::complex<double>> p(c_.size() + 1, 0.0);
        std::copy(c_.begin(), c_.end(), p.begin() + 1);
        return Polynomial(std::move(p));
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& v : c_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    void trim() {
        while (c_.size() > 1 && c_.back() == std::complex<double>(0.0)) c_.pop_back();
    }

    std::vector<std::complex<double>> c_;
};

}  // namespace gz
