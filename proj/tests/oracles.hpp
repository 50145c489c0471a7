// Test-only reference implementations. Everything here is independent of the
// library's computational paths: the SVD oracle runs one-sided Jacobi
// rotations, the pencil oracle expands det(A - lambda B) by interpolation and
// roots it through a companion matrix, and polynomial quotients are evaluated
// by Horner's rule.

#ifndef BARYMIN_TESTS_ORACLES_HPP
#define BARYMIN_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "barymin/types.hpp"

namespace oracles {

using barymin::CMatrix;
using barymin::Complex;
using barymin::CVector;
using barymin::Index;

/// Deterministic test-data generator (xorshift64*).
class TestRng {
  public:
    explicit TestRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    double uniform() {  // [0, 1)
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return static_cast<double>((state_ * 2685821657736338717ULL) >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    Complex complex_in_box(double half_width = 1.0) {
        const double re = uniform(-half_width, half_width);
        const double im = uniform(-half_width, half_width);
        return {re, im};
    }

  private:
    std::uint64_t state_;
};

/// One-sided Jacobi SVD: orthogonalizes the columns of A by complex plane
/// rotations. Returns singular values (descending) and right singular
/// vectors as columns of V.
struct JacobiSvd {
    std::vector<double> sigma;
    CMatrix v;
};

inline JacobiSvd jacobi_svd(const CMatrix& a_in) {
    CMatrix a = a_in;
    const Index n = a.cols();
    CMatrix v = CMatrix::Identity(n, n);

    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (Index p = 0; p < n - 1; ++p) {
            for (Index q = p + 1; q < n; ++q) {
                const Complex apq = a.col(p).dot(a.col(q));  // conj(col p) . col q
                const double app = a.col(p).squaredNorm();
                const double aqq = a.col(q).squaredNorm();
                off = std::max(off, std::abs(apq) / std::max(std::sqrt(app * aqq), 1e-300));
                if (std::abs(apq) == 0.0) continue;
                // rotate the (p,q) column pair to zero their inner product
                const Complex phase = apq / std::abs(apq);
                const double tau = (aqq - app) / (2.0 * std::abs(apq));
                const double t = (tau >= 0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (Index i = 0; i < a.rows(); ++i) {
                    const Complex ap = a(i, p), aq = a(i, q);
                    a(i, p) = c * ap - s * std::conj(phase) * aq;
                    a(i, q) = s * phase * ap + c * aq;
                }
                for (Index i = 0; i < n; ++i) {
                    const Complex vp = v(i, p), vq = v(i, q);
                    v(i, p) = c * vp - s * std::conj(phase) * vq;
                    v(i, q) = s * phase * vp + c * vq;
                }
            }
        }
        if (off < 1e-15) break;
    }

    std::vector<Index> order(static_cast<size_t>(n));
    for (Index i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::vector<double> norms(static_cast<size_t>(n));
    for (Index i = 0; i < n; ++i) norms[static_cast<size_t>(i)] = a.col(i).norm();
    std::sort(order.begin(), order.end(),
              [&norms](Index x, Index y) { return norms[static_cast<size_t>(x)] > norms[static_cast<size_t>(y)]; });

    JacobiSvd out;
    out.sigma.resize(static_cast<size_t>(n));
    out.v.resize(n, n);
    for (Index i = 0; i < n; ++i) {
        out.sigma[static_cast<size_t>(i)] = norms[static_cast<size_t>(order[static_cast<size_t>(i)])];
        out.v.col(i) = v.col(order[static_cast<size_t>(i)]);
    }
    return out;
}

/// Coefficients of det(A - lambda B), ascending degree, recovered by
/// evaluating the determinant at scaled roots of unity and inverting the DFT.
inline CVector pencil_charpoly(const CMatrix& a, const CMatrix& b) {
    const Index m = a.rows();
    const Index npts = m + 1;
    const double radius = 1.0 + a.norm() / std::max(b.norm(), 1e-30);
    CVector values(npts);
    for (Index k = 0; k < npts; ++k) {
        const Complex x =
            radius * std::exp(Complex(0, 2.0 * std::numbers::pi * double(k) / double(npts)));
        values(k) = Eigen::FullPivLU<CMatrix>(a - x * b).determinant();
    }
    CVector coeffs(npts);
    for (Index j = 0; j < npts; ++j) {
        Complex sum(0, 0);
        for (Index k = 0; k < npts; ++k) {
            const Complex x =
                std::exp(Complex(0, -2.0 * std::numbers::pi * double(j * k) / double(npts)));
            sum += values(k) * x;
        }
        coeffs(j) = sum / (double(npts) * std::pow(radius, double(j)));
    }
    return coeffs;
}

/// Roots of a polynomial (ascending coefficients) via the companion matrix.
/// Leading zero coefficients are trimmed; the trimmed degree is the root count.
inline CVector companion_roots(const CVector& coeffs_in, double trim_tol = 0.0) {
    double scale = 0.0;
    for (Index i = 0; i < coeffs_in.size(); ++i) scale = std::max(scale, std::abs(coeffs_in(i)));
    Index deg = -1;
    for (Index i = 0; i < coeffs_in.size(); ++i)
        if (std::abs(coeffs_in(i)) > trim_tol * scale) deg = i;
    if (deg <= 0) return CVector(0);
    CMatrix companion = CMatrix::Zero(deg, deg);
    for (Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (Index i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs_in(i) / coeffs_in(deg);
    Eigen::ComplexEigenSolver<CMatrix> es(companion);
    return es.eigenvalues();
}

/// Horner evaluation, ascending coefficients.
inline Complex poly_eval(const CVector& coeffs, Complex z) {
    Complex acc(0, 0);
    for (Index i = coeffs.size() - 1; i >= 0; --i) acc = acc * z + coeffs(i);
    return acc;
}

/// Coefficients of sum_k w_k prod_{j != k} (z - t_j), ascending degree.
inline CVector weighted_node_derivative_coeffs(const CVector& t, const CVector& w) {
    const Index m = t.size();
    CVector total = CVector::Zero(m);
    for (Index k = 0; k < m; ++k) {
        CVector c = CVector::Zero(m);
        c(0) = 1.0;
        Index deg = 0;
        for (Index j = 0; j < m; ++j) {
            if (j == k) continue;
            for (Index i = deg + 1; i > 0; --i) c(i) = c(i - 1) - t(j) * c(i);
            c(0) *= -t(j);
            ++deg;
        }
        total += w(k) * c;
    }
    return total;
}

/// Greedy multiset match: every element of `got` pairs with a distinct
/// element of `want` within `tol` (absolute). Returns the worst pair distance
/// or +inf if matching fails.
inline double multiset_match_distance(const CVector& got, const CVector& want) {
    if (got.size() != want.size()) return std::numeric_limits<double>::infinity();
    std::vector<bool> used(static_cast<size_t>(want.size()), false);
    double worst = 0.0;
    for (Index i = 0; i < got.size(); ++i) {
        Index best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (Index j = 0; j < want.size(); ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            const double d = std::abs(got(i) - want(j));
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best < 0) return std::numeric_limits<double>::infinity();
        used[static_cast<size_t>(best)] = true;
        worst = std::max(worst, best_d);
    }
    return worst;
}

}  // namespace oracles

#endif
