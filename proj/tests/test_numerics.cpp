#include <catch2/catch_amalgamated.hpp>

#include "barymin/numerics.hpp"
#include "oracles.hpp"

using namespace barymin;
using oracles::TestRng;

namespace {

CMatrix random_matrix(TestRng& rng, Index rows, Index cols) {
    CMatrix a(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) a(i, j) = rng.complex_in_box();
    return a;
}

CVector random_unit(TestRng& rng, Index n) {
    CVector u(n);
    for (Index i = 0; i < n; ++i) u(i) = rng.complex_in_box();
    return u / u.norm();
}

}  // namespace

TEST_CASE("smallest_singular_vector: identity") {
    const SvdResult r = smallest_singular_vector(CMatrix::Identity(2, 2));
    CHECK(r.sigma_min == Catch::Approx(1.0).margin(1e-14));
    CHECK(std::abs(r.vector.norm() - 1.0) < 1e-14);
    CHECK(std::abs((CMatrix::Identity(2, 2) * r.vector).norm() - r.sigma_min) < 1e-14);
}

TEST_CASE("smallest_singular_vector: exact null vector of diag(1,0)") {
    CMatrix a = CMatrix::Zero(2, 2);
    a(0, 0) = 1.0;
    const SvdResult r = smallest_singular_vector(a);
    CHECK(r.sigma_min == Catch::Approx(0.0).margin(1e-15));
    CHECK(std::abs(r.vector(0)) < 1e-14);
    CHECK(std::abs(r.vector(1) - Complex(1.0, 0.0)) < 1e-14);
}

TEST_CASE("smallest_singular_vector: matches the one-sided Jacobi oracle") {
    TestRng rng(101);
    const CMatrix a = random_matrix(rng, 10, 4);
    const SvdResult got = smallest_singular_vector(a);
    const oracles::JacobiSvd ref = oracles::jacobi_svd(a);

    CHECK(std::abs(got.sigma_min - ref.sigma[3]) <= 1e-12 * a.norm());
    // vectors agree up to a unit phase
    const Complex overlap = ref.v.col(3).dot(got.vector);
    CHECK(std::abs(std::abs(overlap) - 1.0) < 1e-10);
}

TEST_CASE("smallest_singular_vector: phase pin and determinism") {
    TestRng rng(7);
    const CMatrix a = random_matrix(rng, 12, 5);
    const SvdResult r1 = smallest_singular_vector(a);
    const SvdResult r2 = smallest_singular_vector(a);
    for (Index i = 0; i < r1.vector.size(); ++i) {
        CHECK(r1.vector(i).real() == r2.vector(i).real());
        CHECK(r1.vector(i).imag() == r2.vector(i).imag());
    }
    Index pivot = 0;
    for (Index i = 1; i < r1.vector.size(); ++i)
        if (std::abs(r1.vector(i)) > std::abs(r1.vector(pivot))) pivot = i;
    CHECK(r1.vector(pivot).imag() == 0.0);
    CHECK(r1.vector(pivot).real() > 0.0);
}

TEST_CASE("smallest_singular_vector: optimality against random probes") {
    TestRng rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const Index cols = 1 + static_cast<Index>(rng.uniform() * 19.999);
        const Index rows = cols + static_cast<Index>(rng.uniform() * (50 - cols));
        const CMatrix a = random_matrix(rng, rows, cols);
        const SvdResult r = smallest_singular_vector(a);
        const double bound = (a * r.vector).norm();
        for (int probe = 0; probe < 100; ++probe) {
            const CVector u = random_unit(rng, cols);
            CHECK((a * u).norm() >= bound - 1e-12 * a.norm());
        }
    }
}

TEST_CASE("smallest_singular_vector: input errors") {
    CHECK_THROWS_AS(smallest_singular_vector(CMatrix(2, 3)), error);
    CMatrix bad = CMatrix::Zero(3, 2);
    bad(1, 1) = Complex(std::numeric_limits<double>::quiet_NaN(), 0);
    CHECK_THROWS_AS(smallest_singular_vector(bad), error);
}

TEST_CASE("generalized_eigenvalues: diagonal pencil") {
    CMatrix a = CMatrix::Zero(2, 2);
    a(0, 0) = 2.0;
    a(1, 1) = 3.0;
    const GevResult r = generalized_eigenvalues(a, CMatrix::Identity(2, 2));
    REQUIRE(r.finite.size() == 2);
    CHECK(r.infinite_count == 0);
    CVector want(2);
    want << Complex(2, 0), Complex(3, 0);
    CHECK(oracles::multiset_match_distance(r.finite, want) < 1e-12);
}

TEST_CASE("generalized_eigenvalues: rank-deficient B") {
    const CMatrix a = CMatrix::Identity(2, 2);
    CMatrix b = CMatrix::Zero(2, 2);
    b(0, 0) = 1.0;
    const GevResult r = generalized_eigenvalues(a, b);
    REQUIRE(r.finite.size() == 1);
    CHECK(r.infinite_count == 1);
    CHECK(std::abs(r.finite(0) - Complex(1, 0)) < 1e-12);
}

TEST_CASE("generalized_eigenvalues: matches the determinant-root oracle") {
    TestRng rng(55);
    const CMatrix a = random_matrix(rng, 6, 6);
    const CMatrix b = random_matrix(rng, 6, 6);
    const GevResult got = generalized_eigenvalues(a, b);
    const CVector roots = oracles::companion_roots(oracles::pencil_charpoly(a, b), 1e-12);
    REQUIRE(got.finite.size() == roots.size());
    double scale = 0.0;
    for (Index i = 0; i < roots.size(); ++i) scale = std::max(scale, std::abs(roots(i)));
    CHECK(oracles::multiset_match_distance(got.finite, roots) <= 1e-8 * scale);
}

TEST_CASE("generalized_eigenvalues: residual contract") {
    TestRng rng(56);
    const CMatrix a = random_matrix(rng, 6, 6);
    const CMatrix b = random_matrix(rng, 6, 6);
    const GevResult got = generalized_eigenvalues(a, b);
    for (Index i = 0; i < got.finite.size(); ++i) {
        const Complex lam = got.finite(i);
        // sigma_min(A - lambda B) bounds ||(A - lambda B) x|| for the implicit
        // eigenvector x
        const double resid = smallest_singular_vector(a - lam * b).sigma_min;
        CHECK(resid <= 1e-10 * (a.norm() + std::abs(lam) * b.norm()));
    }
}

TEST_CASE("generalized_eigenvalues: finite plus infinite counts are m") {
    TestRng rng(57);
    for (int trial = 0; trial < 40; ++trial) {
        const Index m = 2 + static_cast<Index>(rng.uniform() * 6.999);
        const CMatrix a = random_matrix(rng, m, m);
        CMatrix b = random_matrix(rng, m, m);
        const Index deficiency = static_cast<Index>(rng.uniform() * double(m));
        for (Index k = 0; k < deficiency; ++k) b.col(k) = b.col(k) * 0.0;
        const GevResult r = generalized_eigenvalues(a, b);
        CHECK(r.finite.size() + r.infinite_count == m);
    }
}

TEST_CASE("generalized_eigenvalues: determinism and dimension errors") {
    TestRng rng(58);
    const CMatrix a = random_matrix(rng, 5, 5);
    const CMatrix b = random_matrix(rng, 5, 5);
    const GevResult r1 = generalized_eigenvalues(a, b);
    const GevResult r2 = generalized_eigenvalues(a, b);
    REQUIRE(r1.finite.size() == r2.finite.size());
    for (Index i = 0; i < r1.finite.size(); ++i) {
        CHECK(r1.finite(i).real() == r2.finite(i).real());
        CHECK(r1.finite(i).imag() == r2.finite(i).imag());
    }
    CHECK_THROWS_AS(generalized_eigenvalues(CMatrix::Zero(2, 3), CMatrix::Zero(2, 3)), error);
    CHECK_THROWS_AS(generalized_eigenvalues(CMatrix::Zero(3, 3), CMatrix::Zero(2, 2)), error);
    CHECK_THROWS_AS(generalized_eigenvalues(CMatrix::Zero(65, 65), CMatrix::Zero(65, 65)), error);
}
