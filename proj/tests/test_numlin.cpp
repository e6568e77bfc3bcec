#include <catch2/catch.hpp>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <complex>

#include "gz/numlin.hpp"
#include "gz/rng.hpp"

using gz::ComplexMatrix;
using gz::cplx;
using gz::Polynomial;
using gz::Tolerance;

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
    Eigen::MatrixXcd e(m.n(), m.n());
    for (int r = 0; r < m.n(); ++r)
        for (int c = 0; c < m.n(); ++c) e(r, c) = m(r, c);
    return e;
}

/// Independent oracle: eigenvalues from Eigen's Schur-based solver.
std::vector<cplx> eigen_spectrum(const ComplexMatrix& m) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), false);
    std::vector<cplx> out;
    for (int k = 0; k < m.n(); ++k) out.push_back(solver.eigenvalues()(k));
    return out;
}

}  // namespace

TEST_CASE("charpoly of small fixed matrices") {
    SECTION("2x2 zero matrix gives t^2") {
        Polynomial p = gz::charpoly(ComplexMatrix::zero(2));
        REQUIRE(p.degree() == 2);
        CHECK(std::abs(p.coeff(0)) == 0.0);
        CHECK(std::abs(p.coeff(1)) == 0.0);
        CHECK(p.coeff(2) == cplx(1.0));
    }
    SECTION("2x2 identity gives t^2 - 2t + 1") {
        Polynomial p = gz::charpoly(ComplexMatrix::identity(2));
        CHECK(std::abs(p.coeff(0) - 1.0) < 1e-14);
        CHECK(std::abs(p.coeff(1) + 2.0) < 1e-14);
        CHECK(std::abs(p.coeff(2) - 1.0) < 1e-14);
    }
    SECTION("3x3 brute-force determinant expansion") {
        gz::Rng rng(7);
        ComplexMatrix m = ComplexMatrix::random_box(3, rng);
        Polynomial p = gz::charpoly(m);
        // det(tI - M) for 3x3 expanded by hand
        const cplx a = m(0, 0), b = m(0, 1), c = m(0, 2);
        const cplx d = m(1, 0), e = m(1, 1), f = m(1, 2);
        const cplx g = m(2, 0), h = m(2, 1), i = m(2, 2);
        const cplx tr = a + e + i;
        const cplx sum2 = (e * i - f * h) + (a * i - c * g) + (a * e - b * d);
        const cplx det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
        CHECK(std::abs(p.coeff(2) + tr) < 1e-13);
        CHECK(std::abs(p.coeff(1) - sum2) < 1e-13);
        CHECK(std::abs(p.coeff(0) + det) < 1e-13);
    }
}

TEST_CASE("charpoly matches eigenvalue-product oracle on random 5x5") {
    gz::Rng rng(42);
    for (int rep = 0; rep < 5; ++rep) {
        ComplexMatrix m = ComplexMatrix::random_box(5, rng);
        Polynomial p = gz::charpoly(m);
        Polynomial q = Polynomial::from_roots(eigen_spectrum(m));
        double scale = std::max(p.max_abs_coeff(), 1.0);
        for (int k = 0; k <= 5; ++k) CHECK(std::abs(p.coeff(k) - q.coeff(k)) <= 1e-9 * scale);
    }
}

TEST_CASE("polyroots on exact and clustered inputs") {
    Tolerance tol;
    SECTION("t^2 gives {0, 0}") {
        auto r = gz::polyroots(Polynomial({0.0, 0.0, 1.0}), tol);
        REQUIRE(r.size() == 2);
        CHECK(std::abs(r[0]) == 0.0);
        CHECK(std::abs(r[1]) == 0.0);
    }
    SECTION("t^2 - 1 gives {-1, 1}") {
        auto r = gz::polyroots(Polynomial({-1.0, 0.0, 1.0}), tol);
        REQUIRE(r.size() == 2);
        CHECK(std::abs(r[0] + 1.0) < 1e-12);
        CHECK(std::abs(r[1] - 1.0) < 1e-12);
    }
    SECTION("(t-2)^3 (t+i) expanded and re-solved") {
        Polynomial p = Polynomial::from_roots({2.0, 2.0, 2.0, cplx(0.0, -1.0)});
        auto r = gz::polyroots(p, tol);
        REQUIRE(r.size() == 4);
        int twos = 0, is = 0;
        for (const auto& z : r) {
            if (std::abs(z - 2.0) < 1e-8) ++twos;
            if (std::abs(z - cplx(0.0, -1.0)) < 1e-8) ++is;
        }
        CHECK(twos == 3);
        CHECK(is == 1);
    }
    SECTION("degree-7 random roots recovered") {
        gz::Rng rng(3);
        std::vector<cplx> roots;
        for (int k = 0; k < 7; ++k) roots.push_back(rng.complex_annulus(0.3, 2.0));
        auto r = gz::polyroots(Polynomial::from_roots(roots), tol);
        REQUIRE(r.size() == 7);
        for (const auto& want : roots) {
            double best = 1e300;
            for (const auto& got : r) best = std::min(best, std::abs(want - got));
            CHECK(best < 1e-8);
        }
    }
}

TEST_CASE("polyroots residual invariant on random 6x6 charpolys") {
    gz::Rng rng(11);
    Tolerance tol;
    for (int rep = 0; rep < 10; ++rep) {
        ComplexMatrix m = ComplexMatrix::random_box(6, rng);
        Polynomial p = gz::charpoly(m);
        const double bound = 1e-6 * std::pow(1.0 + m.frobenius(), 6);
        for (const auto& z : gz::polyroots(p, tol)) CHECK(std::abs(p.eval(z)) <= bound);
    }
}

TEST_CASE("rank_tol") {
    Tolerance tol;
    CHECK(gz::rank_tol({{1.0, 0.0}, {0.0, 1.0}}, tol) == 2);
    CHECK(gz::rank_tol({{1.0, 1.0}, {2.0, 2.0}}, tol) == 1);

    SECTION("10 random vectors in C^4 have rank 4") {
        gz::Rng rng(5);
        std::vector<std::vector<cplx>> rows;
        for (int k = 0; k < 10; ++k) {
            std::vector<cplx> row(4);
            for (auto& v : row) v = rng.complex_box();
            rows.push_back(row);
        }
        CHECK(gz::rank_tol(rows, tol) == 4);
    }
    SECTION("permutation and scaling invariance") {
        gz::Rng rng(6);
        std::vector<std::vector<cplx>> rows;
        for (int k = 0; k < 4; ++k) {
            std::vector<cplx> row(6);
            for (auto& v : row) v = rng.complex_box();
            rows.push_back(row);
        }
        rows.push_back(rows[0]);  // duplicate forces rank 4
        const int base = gz::rank_tol(rows, tol);
        REQUIRE(base == 4);
        std::vector<double> scales{1e-3, 0.37, 1.0, 64.0, 1e3};
        for (std::size_t k = 0; k < rows.size(); ++k)
            for (auto& v : rows[k]) v *= scales[k % scales.size()];
        std::swap(rows[0], rows[3]);
        std::swap(rows[1], rows[4]);
        CHECK(gz::rank_tol(rows, tol) == base);
    }
}

TEST_CASE("nullspace") {
    Tolerance tol;
    SECTION("identity has empty kernel") {
        CHECK(gz::nullspace({{1.0, 0.0}, {0.0, 1.0}}, tol).empty());
    }
    SECTION("zero 3x3 has full kernel") {
        std::vector<std::vector<cplx>> zero(3, std::vector<cplx>(3, 0.0));
        CHECK(gz::nullspace(zero, tol).size() == 3);
    }
    SECTION("commutant equations of a regular nilpotent 3x3 give a 3-dim kernel") {
        // [Z, e] = 0 as 9 equations in vec(Z); the centralizer of a regular
        // element is spanned by I, e, e^2.
        ComplexMatrix e = ComplexMatrix::principal_nilpotent(3);
        std::vector<std::vector<cplx>> rows;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                std::vector<cplx> row(9, 0.0);
                for (int k = 0; k < 3; ++k) {
                    row[static_cast<std::size_t>(r) * 3 + k] += e(k, c);
                    row[static_cast<std::size_t>(k) * 3 + c] -= e(r, k);
                }
                rows.push_back(row);
            }
        auto basis = gz::nullspace(rows, tol);
        REQUIRE(basis.size() == 3);
        // basis vectors actually solve the system and are orthonormal
        for (const auto& v : basis) {
            for (const auto& row : rows) {
                cplx acc = 0.0;
                for (std::size_t k = 0; k < 9; ++k) acc += row[k] * v[k];
                CHECK(std::abs(acc) < 1e-10);
            }
        }
        cplx dot01 = 0.0;
        for (std::size_t k = 0; k < 9; ++k) dot01 += std::conj(basis[0][k]) * basis[1][k];
        CHECK(std::abs(dot01) < 1e-10);
    }
}

TEST_CASE("expm") {
    Tolerance tol;
    SECTION("exp(0) = I") {
        ComplexMatrix e = gz::expm(ComplexMatrix::zero(3), tol);
        CHECK(gz::distance(e, ComplexMatrix::identity(3)) < 1e-14);
    }
    SECTION("diagonal") {
        ComplexMatrix m = ComplexMatrix::diagonal({cplx(1.0, 0.5), cplx(-2.0, 0.0)});
        ComplexMatrix e = gz::expm(m, tol);
        CHECK(std::abs(e(0, 0) - std::exp(cplx(1.0, 0.5))) < 1e-12);
        CHECK(std::abs(e(1, 1) - std::exp(cplx(-2.0, 0.0))) < 1e-12);
        CHECK(std::abs(e(0, 1)) == 0.0);
    }
    SECTION("nilpotent E_21 is exact: I + N") {
        ComplexMatrix n = ComplexMatrix::elementary(2, 1, 0);
        ComplexMatrix e = gz::expm(n, tol);
        CHECK(e(0, 0) == cplx(1.0));
        CHECK(e(1, 1) == cplx(1.0));
        CHECK(e(1, 0) == cplx(1.0));
        CHECK(e(0, 1) == cplx(0.0));
    }
    SECTION("expm(A) expm(-A) = I for random norm <= 3") {
        gz::Rng rng(9);
        for (int rep = 0; rep < 5; ++rep) {
            ComplexMatrix a = ComplexMatrix::random_box(4, rng);
            ComplexMatrix b = a;
            b *= cplx(-1.0);
            CHECK(gz::distance(gz::expm(a, tol) * gz::expm(b, tol), ComplexMatrix::identity(4)) < 1e-8);
        }
    }
    SECTION("rel error <= 1e-10 against the diagonalized oracle at norm ~ 10") {
        ComplexMatrix m = ComplexMatrix::diagonal({cplx(5.0, 1.0), cplx(-4.0, 2.0), cplx(0.0, -7.0)});
        ComplexMatrix e = gz::expm(m, tol);
        for (int k = 0; k < 3; ++k)
            CHECK(std::abs(e(k, k) - std::exp(m(k, k))) <= 1e-10 * std::abs(std::exp(m(k, k))));
    }
    SECTION("extreme norm fails loudly") {
        ComplexMatrix big = ComplexMatrix::identity(2);
        big *= cplx(1e4);
        CHECK_THROWS_AS(gz::expm(big, tol), gz::OverflowError);
    }
}

TEST_CASE("commutator and trace form") {
    gz::Rng rng(13);
    ComplexMatrix m = ComplexMatrix::random_box(4, rng);
    SECTION("commutator with the identity vanishes") {
        CHECK(gz::commutator(ComplexMatrix::identity(4), m).frobenius() == 0.0);
    }
    SECTION("tr(E_12 E_21) = 1") {
        CHECK(gz::trace_form(ComplexMatrix::elementary(2, 0, 1), ComplexMatrix::elementary(2, 1, 0)) == cplx(1.0));
    }
    SECTION("symmetry on random pairs") {
        ComplexMatrix a = ComplexMatrix::random_box(4, rng);
        CHECK(std::abs(gz::trace_form(a, m) - gz::trace_form(m, a)) < 1e-12);
    }
    SECTION("invariance: beta([a,b],c) + beta(b,[a,c]) = 0") {
        for (int rep = 0; rep < 5; ++rep) {
            ComplexMatrix a = ComplexMatrix::random_box(3, rng);
            ComplexMatrix b = ComplexMatrix::random_box(3, rng);
            ComplexMatrix c = ComplexMatrix::random_box(3, rng);
            cplx lhs = gz::trace_form(gz::commutator(a, b), c) + gz::trace_form(b, gz::commutator(a, c));
            CHECK(std::abs(lhs) < 1e-8);
        }
    }
    SECTION("dimension mismatch is an error") {
        CHECK_THROWS_AS(gz::commutator(ComplexMatrix::zero(2), ComplexMatrix::zero(3)), gz::PreconditionError);
        CHECK_THROWS_AS(gz::trace_form(ComplexMatrix::zero(2), ComplexMatrix::zero(3)), gz::PreconditionError);
    }
}

TEST_CASE("inverse round trip and singular detection") {
    gz::Rng rng(15);
    Tolerance tol;
    ComplexMatrix m = ComplexMatrix::random_box(5, rng);
    CHECK(gz::distance(gz::inverse(m, tol) * m, ComplexMatrix::identity(5)) < 1e-10);
    CHECK_THROWS_AS(gz::inverse(ComplexMatrix::zero(3), tol), gz::SingularMatrix);
}

TEST_CASE("multiset matching") {
    const double radius = gz::cluster_radius(2.0);
    CHECK(gz::multiset_match({1.0, 2.0}, {2.0, 1.0}, radius));
    CHECK(!gz::multiset_match({1.0, 1.0}, {1.0, 2.0}, radius));
    CHECK(gz::multiset_intersection_size({0.0, 0.0}, {0.0, 0.0, 0.0}, radius) == 2);
    CHECK(gz::distinct_values({1.0, 1.0 + 1e-9, 2.0}, radius).size() == 2);
}
