#ifndef BARYMIN_NUMERICS_HPP
#define BARYMIN_NUMERICS_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "barymin/types.hpp"

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace barymin {

/// Result of a smallest-singular-pair computation.
struct SvdResult {
    CVector vector;    ///< unit right singular vector for sigma_min
    double sigma_min;  ///< smallest singular value
};

/// Smallest singular value and the matching right singular vector of a tall
/// dense complex matrix. The vector's phase is pinned so that its
/// largest-magnitude entry (smallest index on ties) is real and positive;
/// results are deterministic for identical inputs.
inline SvdResult smallest_singular_vector(const CMatrix& a) {
    if (a.cols() < 1 || a.rows() < a.cols())
        fail(errc::dimension, "smallest_singular_vector: need rows >= cols >= 1, got " +
                                  std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    require_all_finite(a, "smallest_singular_vector");

    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeThinV);
    const Index last = a.cols() - 1;
    CVector v = svd.matrixV().col(last);
    const double sigma = svd.singularValues()(last);

    Index pivot = 0;
    double pivot_abs = -1.0;
    for (Index i = 0; i < v.size(); ++i) {
        const double m = std::abs(v(i));
        if (m > pivot_abs) {
            pivot_abs = m;
            pivot = i;
        }
    }
    if (pivot_abs > 0.0) {
        const Complex phase = std::conj(v(pivot)) / pivot_abs;
        v *= phase;
        v(pivot) = Complex(pivot_abs, 0.0);  // rotation leaves |entry| unchanged
    }
    return {std::move(v), sigma};
}

/// Finite generalized eigenvalues of the pencil (A, B).
struct GevResult {
    CVector finite;      ///< finite eigenvalues, solver order
    int infinite_count;  ///< eigenvalues at infinity (rank deficiency of B)
};

/// All lambda with det(A - lambda B) = 0, counted with multiplicity.
/// Eigenvalues at infinity are detected by |beta_i| <= 1e-13 * max|beta| in
/// the QZ output and reported as a count. Sizes are capped at 64; this kernel
/// backs pole extraction, where m = n + 2 with n <= 50.
inline GevResult generalized_eigenvalues(const CMatrix& a, const CMatrix& b) {
    const Index m = a.rows();
    if (a.cols() != m || b.rows() != m || b.cols() != m)
        fail(errc::dimension, "generalized_eigenvalues: A, B must be square of equal size");
    if (m > 64)
        fail(errc::dimension, "generalized_eigenvalues: size " + std::to_string(m) + " exceeds 64");
    if (m == 0) return {CVector(0), 0};
    require_all_finite(a, "generalized_eigenvalues A");
    require_all_finite(b, "generalized_eigenvalues B");

    CMatrix wa = a;  // zggev overwrites its inputs
    CMatrix wb = b;
    std::vector<Complex> alpha(static_cast<size_t>(m));
    std::vector<Complex> beta(static_cast<size_t>(m));
    const lapack_int info = LAPACKE_zggev(
        LAPACK_COL_MAJOR, 'N', 'N', static_cast<lapack_int>(m), wa.data(),
        static_cast<lapack_int>(m), wb.data(), static_cast<lapack_int>(m), alpha.data(),
        beta.data(), nullptr, 1, nullptr, 1);
    if (info != 0)
        fail(errc::internal, "generalized_eigenvalues: zggev failed with info=" + std::to_string(info));

    double beta_scale = 0.0;
    for (const Complex& bi : beta) beta_scale = std::max(beta_scale, std::abs(bi));
    const double thresh = 1e-13 * beta_scale;

    std::vector<Complex> finite;
    int infinite = 0;
    for (Index i = 0; i < m; ++i) {
        if (std::abs(beta[static_cast<size_t>(i)]) <= thresh)
            ++infinite;
        else
            finite.push_back(alpha[static_cast<size_t>(i)] / beta[static_cast<size_t>(i)]);
    }
    CVector out(static_cast<Index>(finite.size()));
    for (Index i = 0; i < out.size(); ++i) out(i) = finite[static_cast<size_t>(i)];
    return {std::move(out), infinite};
}

}  // namespace barymin

#endif
