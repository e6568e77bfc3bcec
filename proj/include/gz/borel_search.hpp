#pragma once

#include <vector>

#include "gz/matrix.hpp"
#include "gz/numlin.hpp"
#include "gz/rng.hpp"
#include "gz/sreg.hpp"

namespace gz {

/// One random-Borel trial: draw g in GL(n), sample elements of Ad(g) b_+
/// until one is strongly regular.
struct BorelSearchTrial {
    bool success = false;
    int samples_used = 0;
};

struct BorelSearchResult {
    int n = 0;
    int trials = 0;
    int successes = 0;
    int max_samples = 0;
    std::vector<BorelSearchTrial> per_trial;
};

namespace detail {

inline ComplexMatrix random_invertible(int n, Rng& rng, const Tolerance& tol) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        ComplexMatrix g = ComplexMatrix::random_box(n, rng);
        if (rank_tol(g, tol) == n) return g;
    }
    throw NonConvergence("borel_search: could not draw an invertible matrix");
}

}  // namespace detail

/// Single trial on its own RNG stream, so trials can run in any order or in
/// parallel and still reproduce the same report.
inline BorelSearchTrial borel_search_trial(int n, Rng rng, const Tolerance& tol = {}, int max_samples = 64) {
    const ComplexMatrix g = detail::random_invertible(n, rng, tol);
    const ComplexMatrix ginv = inverse(g, tol);
    BorelSearchTrial t;
    for (int s = 1; s <= max_samples; ++s) {
        ComplexMatrix upper(n);
        for (int r = 0; r < n; ++r)
            for (int c = r; c < n; ++c) upper(r, c) = rng.complex_box();
        const ComplexMatrix x = g * upper * ginv;
        t.samples_used = s;
        if (sreg_report(x, tol).is_sreg) {
            t.success = true;
            break;
        }
    }
    return t;
}

/// Every Borel subalgebra contains strongly regular elements; generically a
/// single sample suffices.
inline BorelSearchResult borel_search(int n, int trials, const Rng& master, const Tolerance& tol = {},
                                      int max_samples = 64) {
    BorelSearchResult out;
    out.n = n;
    out.trials = trials;
    for (int trial = 0; trial < trials; ++trial) {
        BorelSearchTrial t = borel_search_trial(n, master.fork(static_cast<std::uint64_t>(trial)), tol, max_samples);
        if (t.success) ++out.successes;
        out.max_samples = std::max(out.max_samples, t.samples_used);
        out.per_trial.push_back(t);
    }
    return out;
}

}  // namespace gz
