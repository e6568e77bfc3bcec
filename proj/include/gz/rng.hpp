#pragma once

#include <complex>
#include <cstdint>

namespace gz {

/// Deterministic splitmix64-based generator.  We roll our own uniform draws
/// so that runs with the same seed are bit-identical across standard library
/// implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform on the square [-1,1] x [-1,1]i.
    std::complex<double> complex_box() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

    /// Uniform modulus in [lo, hi), uniform argument.
    std::complex<double> complex_annulus(double lo, double hi) {
        double r = uniform(lo, hi);
        double phi = uniform(0.0, 6.283185307179586476925286766559);
        return {r * std::cos(phi), r * std::sin(phi)};
    }

    /// Independent substream; results do not collide with the parent stream.
    Rng fork(std::uint64_t stream) const {
        Rng child(state_ ^ (0xd1342543de82ef95ull * (stream + 0x632be59bd9b4e019ull)));
        child.next_u64();
        return child;
    }

private:
    std::uint64_t state_;
};

}  // namespace gz
