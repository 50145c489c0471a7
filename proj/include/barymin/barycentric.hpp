#ifndef BARYMIN_BARYCENTRIC_HPP
#define BARYMIN_BARYCENTRIC_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "barymin/numerics.hpp"
#include "barymin/sample_set.hpp"
#include "barymin/types.hpp"

namespace barymin {

enum class BaryMode { interpolatory, alpha_beta };

/// Monic node polynomial with the support points as its roots.
struct NodePolynomial {
    CVector roots;

    /// Monomial coefficients, ascending degree; leading coefficient is 1.
    CVector coefficients() const {
        CVector c = CVector::Zero(roots.size() + 1);
        c(0) = 1.0;
        for (Index k = 0; k < roots.size(); ++k) {
            for (Index j = k + 1; j > 0; --j) c(j) = c(j - 1) - roots(k) * c(j);
            c(0) *= -roots(k);
        }
        return c;
    }
};

/// Degree-n rational function written as a quotient of two partial-fraction
/// sums over n+1 shared support points. In interpolatory mode alpha_k is tied
/// to f_k * beta_k and evaluation at a support point returns the stored f_k;
/// alpha-beta mode decouples the coefficient vectors.
class BarycentricRational {
  public:
    BarycentricRational(CVector support, CVector alpha, CVector beta, BaryMode mode)
        : support_(std::move(support)), alpha_(std::move(alpha)), beta_(std::move(beta)),
          mode_(mode) {
        check_common();
        if (mode_ == BaryMode::interpolatory)
            fail(errc::invariant,
                 "BarycentricRational: interpolatory mode requires stored values; "
                 "use make_interpolatory()");
    }

    /// Interpolatory construction from support values and weights:
    /// alpha_k = f_k * beta_k, and the stored f_k are returned exactly at t_k.
    static BarycentricRational make_interpolatory(CVector support, CVector values,
                                                  CVector weights) {
        BarycentricRational r;
        r.support_ = std::move(support);
        r.values_ = std::move(values);
        r.beta_ = std::move(weights);
        if (r.values_.size() != r.support_.size())
            fail(errc::invariant, "BarycentricRational: values length mismatch");
        require_all_finite(r.values_, "BarycentricRational values");
        r.alpha_ = r.values_.cwiseProduct(r.beta_);
        r.mode_ = BaryMode::interpolatory;
        r.check_common();
        return r;
    }

    Index degree() const { return support_.size() - 1; }
    const CVector& support_points() const { return support_; }
    const CVector& alpha() const { return alpha_; }
    const CVector& beta() const { return beta_; }
    BaryMode mode() const { return mode_; }

    /// Stored interpolation values; only meaningful in interpolatory mode.
    const CVector& values() const { return values_; }

    /// Same coefficients, alpha-beta tag. Evaluation away from support points
    /// is unchanged; at a support point the L'Hopital ratio replaces the
    /// stored value.
    BarycentricRational to_alpha_beta() const {
        return BarycentricRational(support_, alpha_, beta_, BaryMode::alpha_beta);
    }

  private:
    BarycentricRational() = default;

    void check_common() const {
        const Index m = support_.size();
        if (m < 1) fail(errc::invariant, "BarycentricRational: no support points");
        if (alpha_.size() != m || beta_.size() != m)
            fail(errc::invariant, "BarycentricRational: coefficient length mismatch");
        require_all_finite(support_, "BarycentricRational support");
        require_all_finite(alpha_, "BarycentricRational alpha");
        require_all_finite(beta_, "BarycentricRational beta");
        for (Index i = 0; i < m; ++i)
            for (Index j = i + 1; j < m; ++j)
                if (support_(i) == support_(j))
                    fail(errc::invariant, "BarycentricRational: support points " +
                                              std::to_string(i) + " and " + std::to_string(j) +
                                              " coincide");
        bool any_beta = false;
        for (Index i = 0; i < m; ++i) any_beta = any_beta || (beta_(i) != Complex(0.0, 0.0));
        if (!any_beta) fail(errc::invariant, "BarycentricRational: all beta coefficients are zero");
    }

    CVector support_, alpha_, beta_, values_;
    BaryMode mode_ = BaryMode::alpha_beta;
};

/// Evaluation result. A pole hit is reported as a tagged infinity, never as a
/// raw floating Inf; `degenerate` marks the 0/0 support-point case resolved by
/// dropping the offending term.
struct EvalValue {
    Complex value{0.0, 0.0};
    bool infinite = false;
    bool degenerate = false;
};

/// Evaluates r at z. Support-point coincidence is detected by exact complex
/// equality; elsewhere the two partial-fraction sums are formed directly and
/// an exactly-zero denominator yields a tagged infinity.
inline EvalValue evaluate(const BarycentricRational& r, Complex z) {
    const CVector& t = r.support_points();
    const CVector& alpha = r.alpha();
    const CVector& beta = r.beta();
    const Index m = t.size();

    for (Index k = 0; k < m; ++k) {
        if (z == t(k)) {
            if (r.mode() == BaryMode::interpolatory) return {r.values()(k), false, false};
            if (beta(k) != Complex(0.0, 0.0)) return {alpha(k) / beta(k), false, false};
            if (alpha(k) != Complex(0.0, 0.0)) return {Complex(0.0, 0.0), true, false};
            // alpha_k = beta_k = 0: the limit is the value of the reduced sums
            Complex num(0.0, 0.0), den(0.0, 0.0);
            for (Index j = 0; j < m; ++j) {
                if (j == k) continue;
                const Complex w = 1.0 / (z - t(j));
                num += alpha(j) * w;
                den += beta(j) * w;
            }
            if (den == Complex(0.0, 0.0)) return {Complex(0.0, 0.0), true, true};
            return {num / den, false, true};
        }
    }

    Complex num(0.0, 0.0), den(0.0, 0.0);
    for (Index k = 0; k < m; ++k) {
        const Complex w = 1.0 / (z - t(k));
        num += alpha(k) * w;
        den += beta(k) * w;
    }
    if (den == Complex(0.0, 0.0)) return {Complex(0.0, 0.0), true, false};
    return {num / den, false, false};
}

/// Converts p/q (monomial coefficients, ascending degree) to barycentric form
/// on the given support points by solving the two (n+1)-square systems in the
/// basis of monic degree-n polynomials l(z)/(z - t_k). A conversion oracle:
/// conditioning is the caller's concern.
inline BarycentricRational from_quotient(const CVector& p_coeffs, const CVector& q_coeffs,
                                         const CVector& support) {
    const Index n = support.size() - 1;
    if (n < 0) fail(errc::input, "from_quotient: empty support");

    auto trimmed_degree = [](const CVector& c) {
        Index d = -1;
        for (Index i = 0; i < c.size(); ++i)
            if (c(i) != Complex(0.0, 0.0)) d = i;
        return d;
    };
    const Index dp = trimmed_degree(p_coeffs);
    const Index dq = trimmed_degree(q_coeffs);
    if (dq < 0) fail(errc::input, "from_quotient: q is identically zero");
    if (dp > n || dq > n)
        fail(errc::input, "from_quotient: polynomial degree exceeds n = " + std::to_string(n));

    // Column k holds the monomial coefficients of l(z)/(z - t_k).
    CMatrix basis(n + 1, n + 1);
    for (Index k = 0; k <= n; ++k) {
        CVector c = CVector::Zero(n + 1);
        c(0) = 1.0;
        Index deg = 0;
        for (Index j = 0; j <= n; ++j) {
            if (j == k) continue;
            for (Index i = deg + 1; i > 0; --i) c(i) = c(i - 1) - support(j) * c(i);
            c(0) *= -support(j);
            ++deg;
        }
        basis.col(k) = c;
    }

    CVector rhs_p = CVector::Zero(n + 1);
    CVector rhs_q = CVector::Zero(n + 1);
    for (Index i = 0; i <= std::min<Index>(dp, n); ++i) rhs_p(i) = p_coeffs(i);
    for (Index i = 0; i <= std::min<Index>(dq, n); ++i) rhs_q(i) = q_coeffs(i);

    Eigen::PartialPivLU<CMatrix> lu(basis);
    CVector alpha = lu.solve(rhs_p);
    CVector beta = lu.solve(rhs_q);
    if (!alpha.allFinite() || !beta.allFinite())
        fail(errc::internal, "from_quotient: singular basis system (support points not distinct?)");
    return BarycentricRational(support, std::move(alpha), std::move(beta), BaryMode::alpha_beta);
}

/// Poles with residues, plus zeros, of a barycentric rational.
struct PoleReport {
    CVector poles;
    CVector residues;              ///< aligned with poles
    std::vector<bool> confluent;   ///< residue computation degenerated at a support point
    CVector zeros;
};

namespace detail {

/// Finite eigenvalues of the (m+1)-square arrowhead pencil with first row
/// [0, w_0..w_n], unit first column, diagonal tail t, against the
/// identity-with-zero-corner mass matrix. Exactly two eigenvalues are at
/// infinity for generic w; any shortfall in the detected infinite count is
/// made up by discarding the largest-magnitude entries.
inline CVector arrowhead_eigenvalues(const CVector& t, const CVector& w) {
    const Index m = t.size();
    CMatrix e = CMatrix::Zero(m + 1, m + 1);
    CMatrix b = CMatrix::Identity(m + 1, m + 1);
    b(0, 0) = 0.0;
    for (Index k = 0; k < m; ++k) {
        e(0, k + 1) = w(k);
        e(k + 1, 0) = 1.0;
        e(k + 1, k + 1) = t(k);
    }
    GevResult gev = generalized_eigenvalues(e, b);

    std::vector<Complex> lam(gev.finite.data(), gev.finite.data() + gev.finite.size());
    auto drop_largest = [&lam]() {
        size_t worst = 0;
        for (size_t i = 1; i < lam.size(); ++i)
            if (std::abs(lam[i]) > std::abs(lam[worst])) worst = i;
        lam.erase(lam.begin() + static_cast<std::ptrdiff_t>(worst));
    };
    for (int d = gev.infinite_count; d < 2 && !lam.empty(); ++d) drop_largest();
    while (static_cast<Index>(lam.size()) > m - 1 && !lam.empty()) drop_largest();

    CVector out(static_cast<Index>(lam.size()));
    for (Index i = 0; i < out.size(); ++i) out(i) = lam[static_cast<size_t>(i)];
    return out;
}

}  // namespace detail

/// Pole, residue, and zero extraction. Poles are the finite eigenvalues of
/// the arrowhead pencil built from beta; zeros use alpha in its place.
/// Residues are n(z)/d'(z) evaluated at each pole.
inline PoleReport poles(const BarycentricRational& r) {
    const CVector& t = r.support_points();
    const CVector& alpha = r.alpha();
    const CVector& beta = r.beta();

    PoleReport report;
    report.poles = detail::arrowhead_eigenvalues(t, beta);
    report.zeros = detail::arrowhead_eigenvalues(t, alpha);

    report.residues.resize(report.poles.size());
    report.confluent.assign(static_cast<size_t>(report.poles.size()), false);
    for (Index i = 0; i < report.poles.size(); ++i) {
        const Complex p = report.poles(i);
        bool confluent = false;
        Complex num(0.0, 0.0), dden(0.0, 0.0);
        for (Index k = 0; k < t.size(); ++k) {
            const Complex d = p - t(k);
            const double scale = std::max({std::abs(p), std::abs(t(k)), 1.0});
            if (std::abs(d) <= 8.0 * std::numeric_limits<double>::epsilon() * scale)
                confluent = true;
            num += alpha(k) / d;
            dden -= beta(k) / (d * d);
        }
        report.residues(i) = num / dden;
        report.confluent[static_cast<size_t>(i)] = confluent;
    }
    return report;
}

/// Pointwise errors f_j - r(z_j) with the max and its first attaining index.
struct MaxErrorResult {
    double max = 0.0;
    Index argmax = 0;
    CVector errors;
    bool has_infinite = false;  ///< an evaluation hit a tagged infinity
};

inline MaxErrorResult max_error(const BarycentricRational& r, const SampleSet& samples) {
    if (samples.size() < 1) fail(errc::input, "max_error: empty sample set");
    MaxErrorResult res;
    res.errors.resize(samples.size());
    res.max = -1.0;
    constexpr double inf = std::numeric_limits<double>::infinity();
    for (Index j = 0; j < samples.size(); ++j) {
        const EvalValue v = evaluate(r, samples.points(j));
        if (v.infinite) {
            res.errors(j) = Complex(inf, 0.0);
            if (!res.has_infinite) {
                res.has_infinite = true;
                res.argmax = j;
                res.max = inf;
            }
            continue;
        }
        const Complex e = samples.values(j) - v.value;
        res.errors(j) = e;
        if (!res.has_infinite && std::abs(e) > res.max) {
            res.max = std::abs(e);
            res.argmax = j;
        }
    }
    if (res.max < 0.0) res.max = 0.0;
    return res;
}

/// Winding number of an error curve sampled along a closed contour.
struct WindingResult {
    enum class Status { resolved, undefined, unresolved };
    Status status = Status::resolved;
    int value = 0;
};

/// Sum of branch-cut-corrected phase increments between consecutive samples
/// (wrapping around), divided by 2*pi and rounded. Requires |e_j| above
/// 1e-3 * max|e| at every sample and consecutive phase jumps below pi.
inline WindingResult winding_number(const CVector& errors) {
    using Status = WindingResult::Status;
    const Index n = errors.size();
    if (n < 2) return {Status::undefined, 0};
    double maxmag = 0.0;
    for (Index j = 0; j < n; ++j) maxmag = std::max(maxmag, std::abs(errors(j)));
    if (!(maxmag > 0.0) || !std::isfinite(maxmag)) return {Status::undefined, 0};
    for (Index j = 0; j < n; ++j)
        if (std::abs(errors(j)) <= 1e-3 * maxmag) return {Status::undefined, 0};

    constexpr double pi = std::numbers::pi;
    double total = 0.0;
    for (Index j = 0; j < n; ++j) {
        const Complex ratio = errors((j + 1) % n) / errors(j);
        const double jump = std::arg(ratio);
        if (std::abs(jump) >= pi * (1.0 - 1e-9)) return {Status::unresolved, 0};
        total += jump;
    }
    return {Status::resolved, static_cast<int>(std::lround(total / (2.0 * pi)))};
}

}  // namespace barymin

#endif
