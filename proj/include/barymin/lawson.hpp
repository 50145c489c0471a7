#ifndef BARYMIN_LAWSON_HPP
#define BARYMIN_LAWSON_HPP

#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "barymin/barycentric.hpp"
#include "barymin/numerics.hpp"
#include "barymin/sample_set.hpp"
#include "barymin/types.hpp"

namespace barymin {

struct LawsonConfig {
    int nsteps = 20;
    double update_exponent = 1.0;               ///< 1 = standard update, 2 = squared variant, (0,1) = underrelaxation
    std::optional<RVector> initial_weights;     ///< defaults to all ones
    bool keep_best = true;                      ///< return the best iterate rather than the final one
};

/// IRLS state: per-sample weights (max-normalized), the current unit-norm
/// coefficient vector gamma = [alpha; beta], and the per-step history of
/// nonlinear max errors.
struct LawsonState {
    RVector weights;
    CVector gamma;
    int step = 0;
    std::vector<double> history;
    bool converged_exactly = false;  ///< all weighted errors vanished
    int divergent_steps = 0;         ///< steps whose max error was non-finite
    CVector last_finite_errors;      ///< most recent finite nonlinear error vector
};

namespace detail {

inline std::vector<Index> locate_support(const SampleSet& samples, const CVector& support) {
    std::vector<Index> idx;
    idx.reserve(static_cast<size_t>(support.size()));
    for (Index k = 0; k < support.size(); ++k) {
        Index found = -1;
        for (Index j = 0; j < samples.size(); ++j)
            if (samples.points(j) == support(k)) {
                found = j;
                break;
            }
        if (found < 0)
            fail(errc::consistency,
                 "lawson: support point " + std::to_string(k) + " not found among samples");
        idx.push_back(found);
    }
    return idx;
}

}  // namespace detail

/// The M x (2n+2) weighted linearized least-squares matrix
/// diag(W^{1/2}) [C, -diag(F) C], where C is the Cauchy matrix with entries
/// 1/(z_j - t_k). The n+1 rows whose sample coincides with a support point
/// carry [e_{k_j}, -f_j e_{k_j}] instead, so row . gamma gives
/// w_j^{1/2} (alpha_{k_j} - f_j beta_{k_j}).
inline CMatrix lawson_matrix(const SampleSet& samples, const CVector& support_points,
                             std::span<const Index> support_indices, const RVector& weights) {
    const Index M = samples.size();
    const Index m = support_points.size();
    if (static_cast<Index>(support_indices.size()) != m)
        fail(errc::dimension, "lawson_matrix: support index count mismatch");
    if (weights.size() != M) fail(errc::dimension, "lawson_matrix: weight count mismatch");
    for (Index j = 0; j < M; ++j)
        if (!(weights(j) >= 0.0)) fail(errc::input, "lawson_matrix: negative or NaN weight");

    std::vector<Index> special(static_cast<size_t>(M), -1);
    for (Index k = 0; k < m; ++k) {
        const Index idx = support_indices[static_cast<size_t>(k)];
        if (idx < 0 || idx >= M || samples.points(idx) != support_points(k))
            fail(errc::consistency, "lawson_matrix: support point not found among samples");
        special[static_cast<size_t>(idx)] = k;
    }

    CMatrix a = CMatrix::Zero(M, 2 * m);
    for (Index j = 0; j < M; ++j) {
        const double sw = std::sqrt(weights(j));
        const Index k_j = special[static_cast<size_t>(j)];
        if (k_j >= 0) {
            a(j, k_j) = sw;
            a(j, m + k_j) = -sw * samples.values(j);
            continue;
        }
        for (Index k = 0; k < m; ++k) {
            const Complex c = 1.0 / (samples.points(j) - support_points(k));
            a(j, k) = sw * c;
            a(j, m + k) = -sw * (samples.values(j) * c);
        }
    }
    return a;
}

/// Nonlinear residuals e_j = f_j - r_gamma(z_j); at the n+1 support samples
/// the ratio alpha_{k_j}/beta_{k_j} replaces the two-sum quotient. Tagged
/// infinities propagate as +inf magnitudes.
inline CVector nonlinear_errors(const SampleSet& samples, const CVector& support_points,
                                std::span<const Index> support_indices, const CVector& gamma) {
    const Index M = samples.size();
    const Index m = support_points.size();
    if (gamma.size() != 2 * m) fail(errc::dimension, "nonlinear_errors: gamma length mismatch");
    bool any_beta = false;
    for (Index k = 0; k < m; ++k) any_beta = any_beta || (gamma(m + k) != Complex(0.0, 0.0));
    if (!any_beta) fail(errc::input, "nonlinear_errors: beta part of gamma is identically zero");

    std::vector<Index> special(static_cast<size_t>(M), -1);
    for (Index k = 0; k < m; ++k)
        special[static_cast<size_t>(support_indices[static_cast<size_t>(k)])] = k;

    constexpr double inf = std::numeric_limits<double>::infinity();
    CVector e(M);
    for (Index j = 0; j < M; ++j) {
        const Index k_j = special[static_cast<size_t>(j)];
        if (k_j >= 0) {
            const Complex b = gamma(m + k_j);
            if (b == Complex(0.0, 0.0)) {
                e(j) = Complex(inf, 0.0);
                continue;
            }
            e(j) = samples.values(j) - gamma(k_j) / b;
            continue;
        }
        Complex num(0.0, 0.0), den(0.0, 0.0);
        for (Index k = 0; k < m; ++k) {
            const Complex c = 1.0 / (samples.points(j) - support_points(k));
            num += gamma(k) * c;
            den += gamma(m + k) * c;
        }
        if (den == Complex(0.0, 0.0)) {
            e(j) = Complex(inf, 0.0);
            continue;
        }
        e(j) = samples.values(j) - num / den;
    }
    return e;
}

/// One IRLS step: solve the weighted linearized problem for a fresh gamma,
/// measure the nonlinear errors, update w_j <- w_j |e_j|^p and renormalize to
/// max 1. A step whose max error is non-finite keeps the previous gamma and
/// drives the weight update from the last finite error vector.
inline LawsonState lawson_step(LawsonState state, const SampleSet& samples,
                               const CVector& support_points,
                               std::span<const Index> support_indices,
                               const LawsonConfig& config) {
    const CMatrix a = lawson_matrix(samples, support_points, support_indices, state.weights);
    const CVector gamma_new = smallest_singular_vector(a).vector;
    const CVector e = nonlinear_errors(samples, support_points, support_indices, gamma_new);

    double emax = 0.0;
    for (Index j = 0; j < e.size(); ++j) emax = std::max(emax, std::abs(e(j)));

    ++state.step;
    state.history.push_back(emax);

    const CVector* update_source = nullptr;
    if (std::isfinite(emax)) {
        state.gamma = gamma_new;
        state.last_finite_errors = e;
        update_source = &state.last_finite_errors;
    } else {
        ++state.divergent_steps;
        if (state.last_finite_errors.size() == samples.size())
            update_source = &state.last_finite_errors;
    }

    if (update_source != nullptr) {
        RVector wnew(state.weights.size());
        double wmax = 0.0;
        for (Index j = 0; j < state.weights.size(); ++j) {
            const double w = state.weights(j);
            // a zero weight stays zero regardless of the local error
            wnew(j) = (w == 0.0)
                          ? 0.0
                          : w * std::pow(std::abs((*update_source)(j)), config.update_exponent);
            wmax = std::max(wmax, wnew(j));
        }
        if (wmax == 0.0) {
            state.converged_exactly = true;
        } else {
            state.weights = wnew / wmax;
        }
    }
    return state;
}

struct LawsonRun {
    BarycentricRational r;  ///< returned approximant, alpha-beta mode
    LawsonState state;
    bool reverted = false;  ///< Lawson made no improvement; r reproduces the AAA fit
};

/// Phase (II): run the configured number of IRLS steps starting from the AAA
/// support set with unit weights. With keep_best the iterate with the
/// smallest recorded nonlinear max error is returned; if even that does not
/// improve on r0, the AAA fit is returned unchanged with reverted = true.
inline LawsonRun lawson_run(const SampleSet& samples, const BarycentricRational& r0,
                            const LawsonConfig& config) {
    validate(samples);
    if (r0.mode() != BaryMode::interpolatory)
        fail(errc::input, "lawson_run: r0 must be an interpolatory AAA fit");
    if (config.nsteps < 0) fail(errc::input, "lawson_run: negative step count");
    if (!(config.update_exponent > 0.0)) fail(errc::input, "lawson_run: exponent must be positive");

    const CVector& t = r0.support_points();
    const Index m = t.size();
    const std::vector<Index> support_indices = detail::locate_support(samples, t);

    LawsonState state;
    if (config.initial_weights.has_value()) {
        const RVector& w0 = *config.initial_weights;
        if (w0.size() != samples.size())
            fail(errc::input, "lawson_run: initial weight count mismatch");
        double wmax = 0.0;
        for (Index j = 0; j < w0.size(); ++j) {
            if (!(w0(j) >= 0.0)) fail(errc::input, "lawson_run: negative initial weight");
            wmax = std::max(wmax, w0(j));
        }
        if (wmax == 0.0) fail(errc::input, "lawson_run: all initial weights are zero");
        state.weights = w0 / wmax;
    } else {
        state.weights = RVector::Ones(samples.size());
    }

    {
        CVector gamma0(2 * m);
        gamma0.head(m) = r0.alpha();
        gamma0.tail(m) = r0.beta();
        state.gamma = gamma0 / gamma0.norm();
    }

    if (config.nsteps == 0) return {r0.to_alpha_beta(), std::move(state), false};

    double best_err = std::numeric_limits<double>::infinity();
    CVector best_gamma;
    for (int s = 0; s < config.nsteps; ++s) {
        const bool had_finite = state.last_finite_errors.size() > 0;
        state = lawson_step(std::move(state), samples, t, support_indices, config);
        const double err = state.history.back();
        if (std::isfinite(err) && err < best_err) {
            best_err = err;
            best_gamma = state.gamma;
        }
        if (state.converged_exactly) break;
        if (!std::isfinite(err) && !had_finite && state.last_finite_errors.size() == 0)
            break;  // no finite iterate yet and no error vector to update from
    }

    const double aaa_err = max_error(r0, samples).max;

    CVector candidate;
    double candidate_err = std::numeric_limits<double>::infinity();
    if (config.keep_best) {
        candidate = best_gamma;
        candidate_err = best_err;
    } else if (!state.history.empty() && std::isfinite(state.history.back())) {
        candidate = state.gamma;
        candidate_err = state.history.back();
    } else {
        candidate = best_gamma;
        candidate_err = best_err;
    }

    if (!(candidate_err < aaa_err) || candidate.size() != 2 * m)
        return {r0.to_alpha_beta(), std::move(state), true};

    BarycentricRational r(t, candidate.head(m), candidate.tail(m), BaryMode::alpha_beta);
    return {std::move(r), std::move(state), false};
}

}  // namespace barymin

#endif
