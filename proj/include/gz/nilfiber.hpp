#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gz/matrix.hpp"
#include "gz/permutation.hpp"
#include "gz/rng.hpp"
#include "gz/tolerance.hpp"

namespace gz {

/// Sign sequence (s_2, ..., s_n) selecting the closed K_i-orbit per level;
/// indexes one irreducible component of the strongly regular nilfiber.
struct SignSequence {
    int n = 0;
    std::vector<char> signs;  // '+' or '-', length n-1, entry k is s_{k+2}

    char sign_at_level(int level) const {  // 2 <= level <= n
        return signs[static_cast<std::size_t>(level - 2)];
    }

    void validate() const {
        if (static_cast<int>(signs.size()) != n - 1)
            throw PreconditionError("SignSequence: expected " + std::to_string(n - 1) + " signs");
        for (char s : signs)
            if (s != '+' && s != '-') throw PreconditionError("SignSequence: signs must be '+' or '-'");
    }

    static SignSequence from_string(int n, const std::string& s) {
        SignSequence q{n, std::vector<char>(s.begin(), s.end())};
        q.validate();
        return q;
    }

    std::string str() const { return std::string(signs.begin(), signs.end()); }

    bool operator==(const SignSequence& o) const { return n == o.n && signs == o.signs; }
};

/// Support pattern of the Borel subalgebra b_Q: the stabilizer of the flag
/// (e_{sigma(1)}, ..., e_{sigma(n)}).
struct BorelPattern {
    Permutation sigma;                              // flag order
    std::vector<std::pair<int, int>> support;        // (row, col) 0-based, diagonal included
    std::vector<std::pair<int, int>> strict_support; // support minus diagonal
    std::vector<std::pair<int, int>> simple_positions;  // (sigma(k), sigma(k+1)), k = 1..n-1
};

/// Flag order of the component: start with (1); for i = 2..n append i at the
/// back when s_i = '+' (the flag of Q_{+,i} holds the distinguished vector
/// last) and insert at the front when s_i = '-'.
inline Permutation insertion_permutation(const SignSequence& q) {
    q.validate();
    std::vector<int> order{1};
    for (int i = 2; i <= q.n; ++i) {
        if (q.sign_at_level(i) == '+')
            order.push_back(i);
        else
            order.insert(order.begin(), i);
    }
    return Permutation(std::move(order));
}

inline BorelPattern borel_pattern(const SignSequence& q) {
    BorelPattern bp;
    bp.sigma = insertion_permutation(q);
    const int n = q.n;
    for (int k = 1; k <= n; ++k)
        for (int l = k; l <= n; ++l) {
            const int r = bp.sigma.of(k) - 1;
            const int c = bp.sigma.of(l) - 1;
            bp.support.emplace_back(r, c);
            if (k < l) bp.strict_support.emplace_back(r, c);
        }
    for (int k = 1; k < n; ++k)
        bp.simple_positions.emplace_back(bp.sigma.of(k) - 1, bp.sigma.of(k + 1) - 1);
    std::sort(bp.support.begin(), bp.support.end());
    std::sort(bp.strict_support.begin(), bp.strict_support.end());
    return bp;
}

/// Random element of n_Q^reg: entries at the simple positions from C^x
/// (modulus in [0.5, 2]), remaining strict-support entries from the unit box.
inline ComplexMatrix sample_component(const SignSequence& q, Rng& rng) {
    const BorelPattern bp = borel_pattern(q);
    ComplexMatrix x(q.n);
    for (const auto& [r, c] : bp.strict_support) x(r, c) = rng.complex_box();
    for (const auto& [r, c] : bp.simple_positions) x(r, c) = rng.complex_annulus(0.5, 2.0);
    return x;
}

/// All 2^{n-1} components in a fixed order (lexicographic, '+' first).
inline std::vector<std::pair<SignSequence, BorelPattern>> enumerate_components(int n) {
    if (n < 1) throw PreconditionError("enumerate_components: n must be >= 1");
    if (n > 20) throw PreconditionError("enumerate_components: n > 20 not supported (2^(n-1) patterns)");
    std::vector<std::pair<SignSequence, BorelPattern>> out;
    const std::uint64_t count = std::uint64_t(1) << (n - 1);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        SignSequence q;
        q.n = n;
        for (int k = 0; k < n - 1; ++k) q.signs.push_back((mask >> k) & 1 ? '-' : '+');
        BorelPattern bp = borel_pattern(q);
        out.emplace_back(std::move(q), std::move(bp));
    }
    return out;
}

/// Identify the component containing x: x must vanish off some pattern's
/// strict support and be nonzero at all of its simple positions.  The
/// components are disjoint, so at most one pattern matches.
inline std::optional<SignSequence> component_membership(const ComplexMatrix& x, const Tolerance& tol = {}) {
    const int n = x.n();
    const double thresh = tol.effective(std::max(1.0, x.frobenius()), n);
    for (auto& [q, bp] : enumerate_components(n)) {
        bool ok = true;
        std::vector<bool> allowed(static_cast<std::size_t>(n) * n, false);
        for (const auto& [r, c] : bp.strict_support) allowed[static_cast<std::size_t>(r) * n + c] = true;
        for (int r = 0; r < n && ok; ++r)
            for (int c = 0; c < n && ok; ++c)
                if (!allowed[static_cast<std::size_t>(r) * n + c] && std::abs(x(r, c)) > thresh) ok = false;
        for (const auto& [r, c] : bp.simple_positions)
            if (std::abs(x(r, c)) <= thresh) ok = false;
        if (ok) return q;
    }
    return std::nullopt;
}

}  // namespace gz
