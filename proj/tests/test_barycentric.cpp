#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "barymin/barycentric.hpp"
#include "oracles.hpp"

using namespace barymin;
using oracles::TestRng;

namespace {

CVector random_cvector(TestRng& rng, Index n, double half_width = 1.0) {
    CVector v(n);
    for (Index i = 0; i < n; ++i) v(i) = rng.complex_in_box(half_width);
    return v;
}

/// Random support points kept pairwise well separated.
CVector random_support(TestRng& rng, Index m) {
    CVector t(m);
    Index placed = 0;
    while (placed < m) {
        const Complex cand = rng.complex_in_box(2.0);
        bool ok = true;
        for (Index i = 0; i < placed; ++i) ok = ok && std::abs(cand - t(i)) > 0.05;
        if (ok) t(placed++) = cand;
    }
    return t;
}

}  // namespace

TEST_CASE("node polynomial expands monically") {
    NodePolynomial ell;
    ell.roots = CVector(2);
    ell.roots << Complex(1, 0), Complex(2, 0);
    const CVector c = ell.coefficients();  // (z-1)(z-2) = 2 - 3z + z^2
    REQUIRE(c.size() == 3);
    CHECK(std::abs(c(0) - Complex(2, 0)) < 1e-15);
    CHECK(std::abs(c(1) - Complex(-3, 0)) < 1e-15);
    CHECK(std::abs(c(2) - Complex(1, 0)) < 1e-15);
}

TEST_CASE("evaluate: alpha proportional to beta gives a constant") {
    TestRng rng(11);
    const CVector t = random_support(rng, 5);
    const CVector beta = random_cvector(rng, 5);

    SECTION("binary scaling constant, exact") {
        const Complex c(2.0, 0.0);
        const BarycentricRational r(t, c * beta, beta, BaryMode::alpha_beta);
        for (int k = 0; k < 20; ++k) {
            const EvalValue v = evaluate(r, rng.complex_in_box(3.0));
            REQUIRE_FALSE(v.infinite);
            CHECK(v.value == c);
        }
    }
    SECTION("general complex constant, tight tolerance") {
        const Complex c(0.3, -0.7);
        CVector alpha(5);
        for (Index i = 0; i < 5; ++i) alpha(i) = c * beta(i);
        const BarycentricRational r(t, alpha, beta, BaryMode::alpha_beta);
        for (int k = 0; k < 20; ++k) {
            const EvalValue v = evaluate(r, rng.complex_in_box(3.0));
            REQUIRE_FALSE(v.infinite);
            CHECK(std::abs(v.value - c) <= 8e-16 * std::abs(c));
        }
    }
}

TEST_CASE("evaluate: support-point branches") {
    CVector t(2);
    t << Complex(0, 0), Complex(1, 0);

    SECTION("interpolatory mode returns the stored value bit-exactly") {
        CVector f(2);
        f << Complex(0.123456789, -0.5), Complex(3.25, 0.7);
        CVector w(2);
        w << Complex(0.37, 0.11), Complex(-0.9, 0.41);
        const BarycentricRational r = BarycentricRational::make_interpolatory(t, f, w);
        for (Index k = 0; k < 2; ++k) {
            const EvalValue v = evaluate(r, t(k));
            CHECK(v.value.real() == f(k).real());
            CHECK(v.value.imag() == f(k).imag());
        }
    }
    SECTION("alpha-beta mode returns the coefficient ratio") {
        CVector alpha(2), beta(2);
        alpha << Complex(3, 1), Complex(1, 0);
        beta << Complex(2, 0), Complex(1, 1);
        const BarycentricRational r(t, alpha, beta, BaryMode::alpha_beta);
        const EvalValue v = evaluate(r, t(0));
        CHECK(std::abs(v.value - alpha(0) / beta(0)) == 0.0);
    }
    SECTION("pole at a support point is a tagged infinity") {
        CVector alpha(2), beta(2);
        alpha << Complex(1, 0), Complex(1, 0);
        beta << Complex(0, 0), Complex(1, 0);
        const BarycentricRational r(t, alpha, beta, BaryMode::alpha_beta);
        const EvalValue v = evaluate(r, t(0));
        CHECK(v.infinite);
    }
    SECTION("0/0 support point falls back to the reduced sums, flagged") {
        CVector alpha(2), beta(2);
        alpha << Complex(0, 0), Complex(2, 0);
        beta << Complex(0, 0), Complex(1, 0);
        const BarycentricRational r(t, alpha, beta, BaryMode::alpha_beta);
        const EvalValue v = evaluate(r, t(0));
        CHECK(v.degenerate);
        CHECK_FALSE(v.infinite);
        CHECK(std::abs(v.value - Complex(2, 0)) < 1e-15);  // reduced quotient is constant 2
    }
}

TEST_CASE("evaluate: exactly-cancelling denominator gives a tagged infinity") {
    CVector t(2), alpha(2), beta(2);
    t << Complex(-1, 0), Complex(1, 0);
    alpha << Complex(1, 0), Complex(-1, 0);
    beta << Complex(1, 0), Complex(1, 0);  // d(0) = 1 + (-1) = 0 exactly
    const BarycentricRational r(t, alpha, beta, BaryMode::alpha_beta);
    const EvalValue v = evaluate(r, Complex(0, 0));
    CHECK(v.infinite);

    SampleSet s;
    s.points = CVector(2);
    s.points << Complex(0, 0), Complex(2, 0);
    s.values = CVector::Zero(2);
    const MaxErrorResult m = max_error(r, s);
    CHECK(m.has_infinite);
    CHECK(std::isinf(m.max));
    CHECK(m.argmax == 0);
}

TEST_CASE("from_quotient: hand-checked 2x2 system") {
    CVector support(2);
    support << Complex(0, 0), Complex(1, 0);
    CVector p(2), q(1);
    p << Complex(0, 0), Complex(1, 0);  // p(z) = z
    q << Complex(1, 0);                 // q = 1
    const BarycentricRational r = from_quotient(p, q, support);
    CHECK(std::abs(r.beta()(0) - Complex(-1, 0)) < 1e-14);
    CHECK(std::abs(r.beta()(1) - Complex(1, 0)) < 1e-14);
    CHECK(std::abs(r.alpha()(0) - Complex(0, 0)) < 1e-14);
    CHECK(std::abs(r.alpha()(1) - Complex(1, 0)) < 1e-14);
}

TEST_CASE("from_quotient: constant one has alpha equal to beta") {
    TestRng rng(13);
    const CVector support = random_support(rng, 4);
    CVector one(1);
    one << Complex(1, 0);
    const BarycentricRational r = from_quotient(one, one, support);
    for (Index k = 0; k < 4; ++k) {
        CHECK(r.alpha()(k).real() == r.beta()(k).real());
        CHECK(r.alpha()(k).imag() == r.beta()(k).imag());
    }
}

TEST_CASE("from_quotient: 200 random round-trips against Horner evaluation") {
    TestRng rng(17);
    int tested_points = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Index n = 1 + static_cast<Index>(rng.uniform() * 7.999);
        const CVector support = random_support(rng, n + 1);
        const CVector p = random_cvector(rng, 1 + static_cast<Index>(rng.uniform() * double(n + 1)));
        const CVector q = random_cvector(rng, 1 + static_cast<Index>(rng.uniform() * double(n + 1)));
        if (q.norm() == 0.0) continue;
        const BarycentricRational r = from_quotient(p, q, support);
        for (int probe = 0; probe < 10; ++probe) {
            const Complex z = rng.complex_in_box(3.0);
            const Complex qz = oracles::poly_eval(q, z);
            if (std::abs(qz) < 1e-2 * q.norm()) continue;  // stay away from poles
            const Complex want = oracles::poly_eval(p, z) / qz;
            const EvalValue got = evaluate(r, z);
            REQUIRE_FALSE(got.infinite);
            CHECK(std::abs(got.value - want) <= 1e-10 * std::max(1.0, std::abs(want)));
            ++tested_points;
        }
    }
    CHECK(tested_points > 1000);
}

TEST_CASE("from_quotient: input errors") {
    CVector support(2);
    support << Complex(0, 0), Complex(1, 0);
    CVector zero(2);
    zero << Complex(0, 0), Complex(0, 0);
    CVector okpoly(1);
    okpoly << Complex(1, 0);
    CVector overflow(4);
    overflow << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0);  // degree 3 > n = 1
    CHECK_THROWS_AS(from_quotient(okpoly, zero, support), error);
    CHECK_THROWS_AS(from_quotient(overflow, okpoly, support), error);
}

TEST_CASE("poles: hand-factorable case") {
    // beta = e_0 on support {0, 1, 2}: the denominator's node-multiplied form
    // is beta_0 (z-1)(z-2), so the poles are 1 and 2
    CVector t(3), alpha(3), beta(3);
    t << Complex(0, 0), Complex(1, 0), Complex(2, 0);
    alpha << Complex(1, 0), Complex(1, 0), Complex(1, 0);
    beta << Complex(1, 0), Complex(0, 0), Complex(0, 0);
    const PoleReport rep = poles(BarycentricRational(t, alpha, beta, BaryMode::alpha_beta));
    REQUIRE(rep.poles.size() == 2);
    CVector want(2);
    want << Complex(1, 0), Complex(2, 0);
    CHECK(oracles::multiset_match_distance(rep.poles, want) < 1e-12);
}

TEST_CASE("poles and zeros: random instances against the companion-root oracle") {
    TestRng rng(19);
    for (int trial = 0; trial < 25; ++trial) {
        const Index n = 6;
        const CVector t = random_support(rng, n + 1);
        const CVector alpha = random_cvector(rng, n + 1);
        const CVector beta = random_cvector(rng, n + 1);
        const BarycentricRational r(t, alpha, beta, BaryMode::alpha_beta);
        const PoleReport rep = poles(r);

        const CVector pole_want =
            oracles::companion_roots(oracles::weighted_node_derivative_coeffs(t, beta), 1e-12);
        REQUIRE(rep.poles.size() == pole_want.size());
        CHECK(oracles::multiset_match_distance(rep.poles, pole_want) < 1e-9);

        const CVector zero_want =
            oracles::companion_roots(oracles::weighted_node_derivative_coeffs(t, alpha), 1e-12);
        REQUIRE(rep.zeros.size() == zero_want.size());
        CHECK(oracles::multiset_match_distance(rep.zeros, zero_want) < 1e-9);

        CHECK(rep.poles.size() <= n);
        CHECK(rep.zeros.size() <= n);
    }
}

TEST_CASE("poles: residue sum matches a contour integral") {
    TestRng rng(23);
    int done = 0;
    for (int trial = 0; trial < 40 && done < 10; ++trial) {
        const Index n = 2 + static_cast<Index>(rng.uniform() * 4.999);
        const CVector t = random_support(rng, n + 1);
        const CVector alpha = random_cvector(rng, n + 1);
        const CVector beta = random_cvector(rng, n + 1);
        const BarycentricRational r(t, alpha, beta, BaryMode::alpha_beta);
        const PoleReport rep = poles(r);

        double extent = 0.0;
        for (Index i = 0; i < rep.poles.size(); ++i) extent = std::max(extent, std::abs(rep.poles(i)));
        for (Index i = 0; i < t.size(); ++i) extent = std::max(extent, std::abs(t(i)));
        if (extent > 25.0) continue;  // skip near-degenerate draws with far-flung poles

        const double radius = 2.0 * extent + 3.0;
        const int quad_points = 4096;
        Complex contour_sum(0, 0);
        bool hit_pole = false;
        for (int k = 0; k < quad_points; ++k) {
            const Complex z =
                radius * std::exp(Complex(0, 2.0 * std::numbers::pi * k / double(quad_points)));
            const EvalValue v = evaluate(r, z);
            hit_pole = hit_pole || v.infinite;
            if (v.infinite) break;
            contour_sum += v.value * z;  // r(z) dz = r(z) i z dtheta; the i/2pi cancels below
        }
        if (hit_pole) continue;
        contour_sum /= double(quad_points);

        const Complex residue_sum = rep.residues.sum();
        CHECK(std::abs(residue_sum - contour_sum) <=
              1e-8 * std::max(1.0, std::abs(residue_sum)));
        ++done;
    }
    CHECK(done == 10);
}

TEST_CASE("max_error: trivial cases and the definition oracle") {
    CVector t(2), alpha(2), beta(2);
    t << Complex(5, 0), Complex(7, 0);
    alpha << Complex(0, 0), Complex(0, 0);  // r identically zero
    beta << Complex(1, 0), Complex(1, 0);
    const BarycentricRational zero(t, alpha, beta, BaryMode::alpha_beta);

    SampleSet s;
    s.points = CVector(2);
    s.points << Complex(0, 0), Complex(1, 0);
    s.values = CVector(2);
    s.values << Complex(1, 0), Complex(0, -2);
    const MaxErrorResult m = max_error(zero, s);
    CHECK(m.max == Catch::Approx(2.0));
    CHECK(m.argmax == 1);

    TestRng rng(29);
    const CVector t2 = random_support(rng, 4);
    const BarycentricRational r(t2, random_cvector(rng, 4), random_cvector(rng, 4),
                                BaryMode::alpha_beta);
    SampleSet s2;
    s2.points = random_cvector(rng, 30, 3.0);
    s2.values = random_cvector(rng, 30);
    const MaxErrorResult got = max_error(r, s2);
    double naive = 0.0;
    Index naive_arg = 0;
    for (Index j = 0; j < 30; ++j) {
        const double e = std::abs(s2.values(j) - evaluate(r, s2.points(j)).value);
        if (e > naive) {
            naive = e;
            naive_arg = j;
        }
    }
    CHECK(got.max == naive);
    CHECK(got.argmax == naive_arg);
}

TEST_CASE("winding_number") {
    SECTION("unit circle traversal") {
        CVector e(4);
        e << Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1);
        const WindingResult w = winding_number(e);
        REQUIRE(w.status == WindingResult::Status::resolved);
        CHECK(w.value == 1);
    }
    SECTION("reverse traversal winds negatively") {
        CVector e(4);
        e << Complex(1, 0), Complex(0, -1), Complex(-1, 0), Complex(0, 1);
        const WindingResult w = winding_number(e);
        REQUIRE(w.status == WindingResult::Status::resolved);
        CHECK(w.value == -1);
    }
    SECTION("near-zero sample is undefined") {
        CVector e(4);
        e << Complex(1, 0), Complex(1e-5, 0), Complex(-1, 0), Complex(0, -1);
        CHECK(winding_number(e).status == WindingResult::Status::undefined);
    }
    SECTION("half-turn jumps are unresolved") {
        CVector e(4);
        e << Complex(1, 0), Complex(-1, 0), Complex(1, 0), Complex(-1, 0);
        CHECK(winding_number(e).status == WindingResult::Status::unresolved);
    }
}

TEST_CASE("scale invariance: binary scalings leave evaluation bit-identical") {
    TestRng rng(31);
    const CVector t = random_support(rng, 6);
    const CVector alpha = random_cvector(rng, 6);
    const CVector beta = random_cvector(rng, 6);
    const BarycentricRational r(t, alpha, beta, BaryMode::alpha_beta);

    for (const double c : {2.0, 0.5, 1024.0, 0x1.0p-30, -8.0}) {
        const BarycentricRational scaled(t, c * alpha, c * beta, BaryMode::alpha_beta);
        for (int k = 0; k < 50; ++k) {
            const Complex z = rng.complex_in_box(3.0);
            const EvalValue a = evaluate(r, z);
            const EvalValue b = evaluate(scaled, z);
            CHECK(a.infinite == b.infinite);
            if (!a.infinite) {
                CHECK(a.value.real() == b.value.real());
                CHECK(a.value.imag() == b.value.imag());
            }
        }
    }
}

TEST_CASE("construction rejects invariant violations") {
    CVector t(2), good(2), zero(2);
    t << Complex(0, 0), Complex(0, 0);  // coincident support
    good << Complex(1, 0), Complex(1, 0);
    zero << Complex(0, 0), Complex(0, 0);
    CHECK_THROWS_AS(BarycentricRational(t, good, good, BaryMode::alpha_beta), error);
    CVector t2(2);
    t2 << Complex(0, 0), Complex(1, 0);
    CHECK_THROWS_AS(BarycentricRational(t2, good, zero, BaryMode::alpha_beta), error);
}
