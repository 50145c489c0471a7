#ifndef BARYMIN_AAA_HPP
#define BARYMIN_AAA_HPP

#include <span>
#include <string>
#include <vector>

#include "barymin/barycentric.hpp"
#include "barymin/numerics.hpp"
#include "barymin/sample_set.hpp"
#include "barymin/types.hpp"

namespace barymin {

struct AaaIteration {
    Index support_index;  ///< greedy pick, an index into the sample set
    double max_error;     ///< interpolation-phase max error after this pick
};

struct AaaTrace {
    std::vector<AaaIteration> iterations;
    bool early_exact = false;  ///< data reproduced exactly before n+1 supports were placed
};

struct AaaResult {
    BarycentricRational r0;  ///< interpolatory near-best approximant
    AaaTrace trace;
    std::vector<Index> support_indices;
};

/// Divided-difference matrix over the non-support rows j (sample order,
/// support rows deleted) and support columns k, with entries
/// (f_j - f_{t_k}) / (z_j - t_k).
inline CMatrix loewner_matrix(const SampleSet& samples, std::span<const Index> support_indices,
                              const CVector& support_values) {
    const Index m = static_cast<Index>(support_indices.size());
    if (support_values.size() != m)
        fail(errc::dimension, "loewner_matrix: support value count mismatch");
    std::vector<bool> is_support(static_cast<size_t>(samples.size()), false);
    for (Index k = 0; k < m; ++k) {
        const Index idx = support_indices[static_cast<size_t>(k)];
        if (idx < 0 || idx >= samples.size())
            fail(errc::input, "loewner_matrix: support index out of range");
        if (is_support[static_cast<size_t>(idx)])
            fail(errc::input, "loewner_matrix: repeated support index");
        is_support[static_cast<size_t>(idx)] = true;
    }

    CMatrix a(samples.size() - m, m);
    Index row = 0;
    for (Index j = 0; j < samples.size(); ++j) {
        if (is_support[static_cast<size_t>(j)]) continue;
        for (Index k = 0; k < m; ++k) {
            const Index idx = support_indices[static_cast<size_t>(k)];
            a(row, k) = (samples.values(j) - support_values(k)) /
                        (samples.points(j) - samples.points(idx));
        }
        ++row;
    }
    return a;
}

/// Greedy AAA fit of the requested degree: n+1 support placements, each at
/// the current max-error sample (smallest index on ties), with interpolation
/// weights from the smallest singular vector of the Loewner matrix. Stops
/// early, flagged, if the data is matched to 1e-13 * max|F| beforehand.
inline AaaResult aaa_fit(const SampleSet& samples, int degree) {
    validate(samples);
    if (degree < 0) fail(errc::input, "aaa_fit: negative degree");
    const Index m_target = static_cast<Index>(degree) + 1;
    if (samples.size() < 2 * m_target)
        fail(errc::insufficient_samples,
             "aaa_fit: need at least " + std::to_string(2 * m_target) + " samples for degree " +
                 std::to_string(degree) + ", got " + std::to_string(samples.size()));

    const Index M = samples.size();
    double f_scale = 0.0;
    for (Index j = 0; j < M; ++j) f_scale = std::max(f_scale, std::abs(samples.values(j)));

    AaaTrace trace;
    std::vector<Index> support;
    std::vector<bool> is_support(static_cast<size_t>(M), false);
    CVector w;

    CVector r = CVector::Constant(M, samples.values.mean());
    for (Index it = 0; it < m_target; ++it) {
        Index pick = -1;
        double worst = -1.0;
        for (Index j = 0; j < M; ++j) {
            if (is_support[static_cast<size_t>(j)]) continue;
            const double resid = std::abs(samples.values(j) - r(j));
            if (resid > worst) {
                worst = resid;
                pick = j;
            }
        }
        support.push_back(pick);
        is_support[static_cast<size_t>(pick)] = true;
        const Index m = static_cast<Index>(support.size());

        CVector support_values(m);
        for (Index k = 0; k < m; ++k) support_values(k) = samples.values(support[static_cast<size_t>(k)]);
        const CMatrix loewner = loewner_matrix(samples, support, support_values);
        w = smallest_singular_vector(loewner).vector;

        double err = 0.0;
        for (Index j = 0; j < M; ++j) {
            if (is_support[static_cast<size_t>(j)]) {
                r(j) = samples.values(j);
                continue;
            }
            Complex num(0.0, 0.0), den(0.0, 0.0);
            for (Index k = 0; k < m; ++k) {
                const Complex c = 1.0 / (samples.points(j) - samples.points(support[static_cast<size_t>(k)]));
                num += c * (w(k) * support_values(k));
                den += c * w(k);
            }
            r(j) = num / den;
            err = std::max(err, std::abs(samples.values(j) - r(j)));
        }
        trace.iterations.push_back({pick, err});

        if (m < m_target && err <= 1e-13 * f_scale) {
            trace.early_exact = true;
            break;
        }
    }

    const Index m = static_cast<Index>(support.size());
    CVector t(m), f(m);
    for (Index k = 0; k < m; ++k) {
        t(k) = samples.points(support[static_cast<size_t>(k)]);
        f(k) = samples.values(support[static_cast<size_t>(k)]);
    }
    return {BarycentricRational::make_interpolatory(std::move(t), std::move(f), w),
            std::move(trace), std::move(support)};
}

}  // namespace barymin

#endif
