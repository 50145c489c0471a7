#ifndef BARYMIN_APPROX_HPP
#define BARYMIN_APPROX_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "barymin/aaa.hpp"
#include "barymin/barycentric.hpp"
#include "barymin/catalog.hpp"
#include "barymin/domains.hpp"
#include "barymin/functions.hpp"
#include "barymin/lawson.hpp"
#include "barymin/types.hpp"

namespace barymin {

/// Diagnosable failure classes for a completed run. `reverted` means the
/// Lawson phase made no improvement and the AAA fit was returned; the other
/// classes refine what went wrong when they can be measured.
enum class FailureClass {
    none,
    near_machine_precision,  ///< AAA already sits at the double-precision floor
    degeneracy,              ///< divergent tail plus a pole essentially on the domain
    oscillation,             ///< history tail well above the best iterate
    divergent,               ///< steps with non-finite errors occurred
    reverted,                ///< no improvement over the AAA fit
};

inline const char* to_string(FailureClass c) {
    switch (c) {
        case FailureClass::none: return "none";
        case FailureClass::near_machine_precision: return "near-machine-precision";
        case FailureClass::degeneracy: return "degeneracy";
        case FailureClass::oscillation: return "oscillation";
        case FailureClass::divergent: return "divergent";
        case FailureClass::reverted: return "reverted";
    }
    return "unknown";
}

struct ApproxOptions {
    int degree = 0;
    LawsonConfig lawson;
};

/// Everything a run produces: the approximant, per-phase errors, pole data,
/// winding, the convergence history, and informational timings.
struct ApproxReport {
    std::string problem;  ///< catalog name or input path
    int degree = 0;
    Index sample_count = 0;
    double aaa_max_error = 0.0;
    double lawson_max_error = 0.0;
    bool reverted = false;
    CVector support_points, alpha, beta;
    CVector poles, residues, zeros;
    std::optional<int> winding;
    std::string winding_status = "not-applicable";
    std::vector<double> history;
    FailureClass failure = FailureClass::none;
    std::string failure_detail;
    double aaa_seconds = 0.0;     ///< informational only
    double lawson_seconds = 0.0;  ///< informational only
    SampleSet samples;
    CVector errors;  ///< final error curve f_j - r(z_j)
};

namespace detail {

inline double domain_scale(const SampleSet& s) {
    double scale = 0.0;
    for (Index j = 0; j < s.size(); ++j) scale = std::max(scale, std::abs(s.points(j)));
    return scale > 0.0 ? scale : 1.0;
}

inline void classify_failure(ApproxReport& rep, const LawsonState& state, double f_scale) {
    double best = std::numeric_limits<double>::infinity();
    for (double h : state.history)
        if (std::isfinite(h)) best = std::min(best, h);
    const bool tail_diverged =
        !state.history.empty() && std::isfinite(best) && state.history.back() > 1.1 * best;
    const bool near_floor = rep.aaa_max_error <= 1e-12 * f_scale;

    if (near_floor && (rep.reverted || tail_diverged)) {
        rep.failure = FailureClass::near_machine_precision;
        rep.failure_detail =
            "the AAA phase already reached the double-precision floor; reweighting from such a "
            "point behaves erratically";
        return;
    }
    if (tail_diverged) {
        // A pole essentially on the sample set alongside a divergent tail
        // points at a degenerate (or nonanalytic) request.
        double pole_dist = std::numeric_limits<double>::infinity();
        for (Index i = 0; i < rep.poles.size(); ++i)
            for (Index j = 0; j < rep.samples.size(); ++j)
                pole_dist = std::min(pole_dist, std::abs(rep.poles(i) - rep.samples.points(j)));
        if (pole_dist < 1e-2 * domain_scale(rep.samples)) {
            rep.failure = FailureClass::degeneracy;
            rep.failure_detail = "the iteration diverged after its best step and the returned "
                                 "approximant carries a pole essentially on the domain";
        } else {
            rep.failure = FailureClass::oscillation;
            rep.failure_detail = "the error history climbed more than 10% above its best entry; "
                                 "the iteration is cycling or diverging";
        }
        return;
    }
    if (state.divergent_steps > 0 && !rep.reverted) {
        rep.failure = FailureClass::divergent;
        rep.failure_detail = std::to_string(state.divergent_steps) +
                             " step(s) produced non-finite errors; their coefficient vectors "
                             "were discarded";
        return;
    }
    if (rep.reverted) {
        rep.failure = FailureClass::reverted;
        bool all_real = true;
        for (Index j = 0; j < rep.samples.size(); ++j)
            all_real = all_real && rep.samples.points(j).imag() == 0.0;
        rep.failure_detail = all_real ? "no improvement over the AAA fit (real-domain runs are "
                                        "the least robust)"
                                      : "no improvement over the AAA fit";
    }
}

}  // namespace detail

/// Runs AAA then Lawson on validated samples and assembles the full report.
inline ApproxReport approximate(const SampleSet& samples, const ApproxOptions& options,
                                const std::string& problem_name) {
    using clock = std::chrono::steady_clock;
    validate(samples);

    ApproxReport rep;
    rep.problem = problem_name;
    rep.degree = options.degree;
    rep.sample_count = samples.size();
    rep.samples = samples;

    const auto t0 = clock::now();
    AaaResult aaa = aaa_fit(samples, options.degree);
    const auto t1 = clock::now();
    rep.aaa_seconds = std::chrono::duration<double>(t1 - t0).count();
    rep.aaa_max_error = max_error(aaa.r0, samples).max;

    LawsonRun run = lawson_run(samples, aaa.r0, options.lawson);
    const auto t2 = clock::now();
    rep.lawson_seconds = std::chrono::duration<double>(t2 - t1).count();

    rep.reverted = run.reverted;
    rep.history = run.state.history;
    rep.support_points = run.r.support_points();
    rep.alpha = run.r.alpha();
    rep.beta = run.r.beta();

    const MaxErrorResult final_err = max_error(run.r, samples);
    rep.lawson_max_error = final_err.max;
    rep.errors = final_err.errors;

    const PoleReport pole_report = poles(run.r);
    rep.poles = pole_report.poles;
    rep.residues = pole_report.residues;
    rep.zeros = pole_report.zeros;

    if (samples.closed_curve && !final_err.has_infinite) {
        const WindingResult w = winding_number(final_err.errors);
        switch (w.status) {
            case WindingResult::Status::resolved:
                rep.winding = w.value;
                rep.winding_status = "resolved";
                break;
            case WindingResult::Status::undefined: rep.winding_status = "undefined"; break;
            case WindingResult::Status::unresolved: rep.winding_status = "unresolved"; break;
        }
    }

    double f_scale = 0.0;
    for (Index j = 0; j < samples.size(); ++j)
        f_scale = std::max(f_scale, std::abs(samples.values(j)));
    detail::classify_failure(rep, run.state, f_scale);
    return rep;
}

/// Builds a catalog entry's sample set, including random-point grids.
inline SampleSet build_entry_samples(const ProblemEntry& entry,
                                     std::optional<std::uint64_t> seed_override = {}) {
    if (entry.stub) fail(errc::catalog_stub, entry.name + ": " + entry.stub_reason);
    SampleSet s;
    if (entry.random_grid.has_value()) {
        const RandomGrid& g = *entry.random_grid;
        s = random_rectangle(g.count, g.corner_lo, g.corner_hi,
                             seed_override.value_or(g.seed));
    } else {
        s = build(entry.spec);
    }
    const FunctionHandle f = make_function(entry.f);
    for (Index j = 0; j < s.size(); ++j) {
        const Complex v = f(s.points(j));
        if (!is_finite(v))
            fail(errc::numerical, entry.name + ": function value non-finite at sample " +
                                      std::to_string(j));
        s.values(j) = v;
    }
    return s;
}

struct RunOverrides {
    std::optional<int> degree;
    std::optional<int> nsteps;
    std::optional<double> exponent;
    std::optional<std::uint64_t> seed;
};

/// Catalog front end: builds the entry's grid, evaluates its function, and
/// runs the two phases with the entry's documented configuration unless
/// overridden.
inline ApproxReport run_problem(const std::string& name, const RunOverrides& overrides = {}) {
    const ProblemEntry& entry = catalog_get(name);
    const SampleSet samples = build_entry_samples(entry, overrides.seed);
    ApproxOptions options;
    options.degree = overrides.degree.value_or(entry.degree);
    options.lawson.nsteps = overrides.nsteps.value_or(entry.nsteps);
    options.lawson.update_exponent = overrides.exponent.value_or(1.0);
    return approximate(samples, options, name);
}

/// Function descriptor backed by a resolvent: f(z) = c^T (zI - A)^{-1} b,
/// evaluated by a dense solve per sample.
inline FunctionHandle load_resolvent(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                                     const Eigen::VectorXd& c) {
    if (a.rows() != a.cols()) fail(errc::dimension, "load_resolvent: matrix must be square");
    if (b.size() != a.rows() || c.size() != a.rows())
        fail(errc::dimension, "load_resolvent: vector lengths must match the matrix size");
    return [a, b, c](Complex z) {
        CMatrix shifted = (-a).cast<Complex>();
        shifted.diagonal().array() += z;
        Eigen::PartialPivLU<CMatrix> lu(shifted);
        const CVector x = lu.solve(b.cast<Complex>());
        if (!x.allFinite())
            fail(errc::numerical, "resolvent evaluation failed: z coincides with an eigenvalue");
        return c.cast<Complex>().dot(x);
    };
}

}  // namespace barymin

#endif
