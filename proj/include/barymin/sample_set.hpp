#ifndef BARYMIN_SAMPLE_SET_HPP
#define BARYMIN_SAMPLE_SET_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "barymin/types.hpp"

namespace barymin {

/// Discrete approximation domain: sample points z_j with paired values f_j.
/// `closed_curve` marks sample order as tracing a closed contour, which makes
/// the error curve eligible for winding-number evaluation.
struct SampleSet {
    CVector points;
    CVector values;
    bool closed_curve = false;

    Index size() const { return points.size(); }
};

/// Enforces the SampleSet invariants: equal nonzero lengths, finite values,
/// pairwise-distinct points (exact complex comparison).
inline void validate(const SampleSet& s) {
    if (s.points.size() != s.values.size())
        fail(errc::invariant, "SampleSet: points/values length mismatch");
    if (s.points.size() < 1) fail(errc::invariant, "SampleSet: empty");
    require_all_finite(s.points, "SampleSet points");
    require_all_finite(s.values, "SampleSet values");

    std::vector<std::pair<Complex, Index>> sorted(static_cast<size_t>(s.points.size()));
    for (Index i = 0; i < s.points.size(); ++i) sorted[static_cast<size_t>(i)] = {s.points(i), i};
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
        return a.first.imag() < b.first.imag();
    });
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i].first == sorted[i - 1].first)
            fail(errc::invariant, "SampleSet: duplicate point at indices " +
                                      std::to_string(sorted[i - 1].second) + " and " +
                                      std::to_string(sorted[i].second));
}

}  // namespace barymin

#endif
