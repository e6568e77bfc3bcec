#pragma once

#include <algorithm>
#include <cmath>

#include "gz/errors.hpp"

namespace gz {

/// Absolute/relative tolerance pair used by every rank, kernel and spectral
/// decision in the library.  The effective threshold for an object of
/// Frobenius scale s living in dimension n is max(abs_tol, rel_tol * s * n).
struct Tolerance {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;

    Tolerance() = default;
    Tolerance(double abs, double rel) : abs_tol(abs), rel_tol(rel) {
        if (!(abs >= 0.0) || !(rel >= 0.0) || !std::isfinite(abs) || !std::isfinite(rel))
            throw PreconditionError("Tolerance: abs_tol and rel_tol must be finite and >= 0");
    }

    double effective(double frobenius_norm, int n) const {
        return std::max(abs_tol, rel_tol * frobenius_norm * static_cast<double>(n));
    }
};

/// Radius below which two computed eigenvalues are considered the same value
/// when forming multisets.
inline double cluster_radius(double max_abs_value) {
    return 1e-6 * (1.0 + max_abs_value);
}

}  // namespace gz
