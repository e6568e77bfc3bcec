#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "gz/errors.hpp"
#include "gz/matrix.hpp"

namespace gz {

/// Permutation of {1, ..., n}, 1-indexed.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n) : img_(static_cast<std::size_t>(n)) {
        std::iota(img_.begin(), img_.end(), 1);
    }
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 1 || v > static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v - 1)])
                throw PreconditionError("Permutation: images are not a permutation of 1..n");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
    }

    static Permutation transposition(int n, int a, int b) {
        Permutation p(n);
        std::swap(p.img_[static_cast<std::size_t>(a - 1)], p.img_[static_cast<std::size_t>(b - 1)]);
        return p;
    }

    /// The cycle (a a-1 ... b) for a >= b: a -> a-1 -> ... -> b -> a.
    static Permutation descending_cycle(int n, int a, int b) {
        Permutation p(n);
        for (int k = a; k > b; --k) p.img_[static_cast<std::size_t>(k - 1)] = k - 1;
        p.img_[static_cast<std::size_t>(b - 1)] = a;
        return p;
    }

    int n() const { return static_cast<int>(img_.size()); }
    int of(int k) const { return img_[static_cast<std::size_t>(k - 1)]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int k = 1; k <= n(); ++k)
            if (of(k) != k) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(img_.size());
        for (int k = 1; k <= n(); ++k) inv[static_cast<std::size_t>(of(k) - 1)] = k;
        return Permutation(std::move(inv));
    }

    /// Composition "apply a, then b".
    friend Permutation compose(const Permutation& a, const Permutation& b) {
        if (a.n() != b.n()) throw PreconditionError("Permutation: size mismatch");
        std::vector<int> img(a.img_.size());
        for (int k = 1; k <= a.n(); ++k) img[static_cast<std::size_t>(k - 1)] = b.of(a.of(k));
        return Permutation(std::move(img));
    }

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }

    /// Matrix with P e_k = e_{w(k)}.
    ComplexMatrix matrix() const {
        ComplexMatrix p(n());
        for (int k = 1; k <= n(); ++k) p(of(k) - 1, k - 1) = 1.0;
        return p;
    }

    std::string str() const {
        std::string s = "[";
        for (int k = 1; k <= n(); ++k) s += (k > 1 ? " " : "") + std::to_string(of(k));
        return s + "]";
    }

private:
    std::vector<int> img_;
};

}  // namespace gz
