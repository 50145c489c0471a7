#ifndef BARYMIN_DOMAINS_HPP
#define BARYMIN_DOMAINS_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "barymin/sample_set.hpp"
#include "barymin/types.hpp"

namespace barymin {

enum class GridLaw { equispaced, chebyshev, tanh_clustered };

/// Circular arc c + rho * exp(i theta), theta in [theta_from, theta_to]. A
/// full circle (the default window) under the equispaced law places points at
/// c + rho * exp(2 pi i k / N), k = 1..N; arcs distribute theta by the law,
/// endpoints included.
struct CirclePiece {
    Complex center;
    double radius = 1.0;
    int npts = 0;
    GridLaw law = GridLaw::equispaced;
    double tanh_strength = 12.0;
    double theta_from = 0.0;
    double theta_to = 2.0 * std::numbers::pi;
    bool full = true;
    bool drop_first = false;  ///< omit the first generated point (shared corners in loops)
};

struct SegmentPiece {
    Complex a, b;
    int npts = 0;
    GridLaw law = GridLaw::equispaced;
    double tanh_strength = 12.0;
    bool drop_first = false;
};

/// Geometric spacing of |coordinates| between |a| and |b| along the ray
/// through a; a and b must lie on the same ray from the origin.
struct LoglinePiece {
    Complex a, b;
    int npts = 0;
};

struct RawPiece {
    std::vector<Complex> points;
};

using DomainPiece = std::variant<CirclePiece, SegmentPiece, LoglinePiece, RawPiece>;

/// Declarative sample-grid description. closed_override forces the
/// closed-curve flag for multi-piece closed contours (e.g. a polygon
/// traversed by several segment pieces).
struct DomainSpec {
    std::vector<DomainPiece> pieces;
    std::optional<bool> closed_override;
};

namespace detail {

/// Law-distributed coordinates on the canonical interval [-1, 1], endpoints
/// included for the equispaced and chebyshev laws. tanh coordinates are
/// mirror-symmetric about 0 by construction (the upper half is computed and
/// negated) and never reach the endpoints.
inline std::vector<double> unit_parameters(int npts, GridLaw law, double strength) {
    std::vector<double> t(static_cast<size_t>(npts));
    switch (law) {
        case GridLaw::equispaced:
            for (int k = 0; k < npts; ++k)
                t[static_cast<size_t>(k)] = -1.0 + 2.0 * k / double(npts - 1);
            t[0] = -1.0;
            t[static_cast<size_t>(npts - 1)] = 1.0;
            break;
        case GridLaw::chebyshev:
            for (int k = 0; k < npts; ++k)
                t[static_cast<size_t>(k)] = -std::cos(std::numbers::pi * k / double(npts - 1));
            t[0] = -1.0;
            t[static_cast<size_t>(npts - 1)] = 1.0;
            break;
        case GridLaw::tanh_clustered: {
            if (!(strength > 0.0)) fail(errc::input, "grid law: tanh strength must be positive");
            for (int k = 0; k < npts / 2; ++k) {
                const double s = strength - 2.0 * strength * k / double(npts - 1);
                const double th = std::tanh(s);
                t[static_cast<size_t>(npts - 1 - k)] = th;
                t[static_cast<size_t>(k)] = -th;
            }
            if (npts % 2 == 1) t[static_cast<size_t>(npts / 2)] = 0.0;
            break;
        }
    }
    return t;
}

inline void append_circle(std::vector<Complex>& out, const CirclePiece& p) {
    if (p.npts < 2) fail(errc::input, "circle piece: npts must be at least 2");
    if (!(p.radius > 0.0)) fail(errc::input, "circle piece: radius must be positive");
    if (p.full && p.law == GridLaw::equispaced) {
        for (int k = 1; k <= p.npts; ++k) {
            if (p.drop_first && k == 1) continue;
            const double theta = 2.0 * std::numbers::pi * k / double(p.npts);
            out.push_back(p.center + p.radius * std::exp(Complex(0.0, theta)));
        }
        return;
    }
    const std::vector<double> t = unit_parameters(p.npts, p.law, p.tanh_strength);
    const double mid = 0.5 * (p.theta_from + p.theta_to);
    const double half = 0.5 * (p.theta_to - p.theta_from);
    for (size_t i = p.drop_first ? 1 : 0; i < t.size(); ++i)
        out.push_back(p.center + p.radius * std::exp(Complex(0.0, mid + half * t[i])));
}

inline void append_segment(std::vector<Complex>& out, const SegmentPiece& p) {
    if (p.npts < 2) fail(errc::input, "segment piece: npts must be at least 2");
    if (p.a == p.b) fail(errc::input, "segment piece: endpoints coincide");
    const std::vector<double> t = unit_parameters(p.npts, p.law, p.tanh_strength);
    const Complex mid = 0.5 * (p.a + p.b);
    const Complex half = 0.5 * (p.b - p.a);
    for (size_t i = p.drop_first ? 1 : 0; i < t.size(); ++i)
        out.push_back(mid + half * t[i]);
}

inline void append_logline(std::vector<Complex>& out, const LoglinePiece& p) {
    if (p.npts < 2) fail(errc::input, "logline piece: npts must be at least 2");
    const double ra = std::abs(p.a);
    const double rb = std::abs(p.b);
    if (!(ra > 0.0) || !(rb > 0.0)) fail(errc::input, "logline piece: endpoints must be nonzero");
    const Complex dir_a = p.a / ra;
    const Complex dir_b = p.b / rb;
    if (std::abs(dir_a - dir_b) > 1e-12)
        fail(errc::input, "logline piece: endpoints not on a common ray from the origin");
    const double la = std::log(ra);
    const double lb = std::log(rb);
    for (int k = 0; k < p.npts; ++k) {
        const double r = std::exp(la + (lb - la) * k / double(p.npts - 1));
        out.push_back(dir_a * r);
    }
}

}  // namespace detail

/// Builds the concatenated grid declared by the spec. Values are zero-filled
/// for the caller to overwrite. Duplicate points across pieces are a build
/// error listing the collisions.
inline SampleSet build(const DomainSpec& spec) {
    if (spec.pieces.empty()) fail(errc::input, "DomainSpec: no pieces");
    std::vector<Complex> pts;
    for (const DomainPiece& piece : spec.pieces) {
        std::visit(
            [&pts](const auto& p) {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, CirclePiece>) detail::append_circle(pts, p);
                else if constexpr (std::is_same_v<T, SegmentPiece>) detail::append_segment(pts, p);
                else if constexpr (std::is_same_v<T, LoglinePiece>) detail::append_logline(pts, p);
                else {
                    if (p.points.empty()) fail(errc::input, "raw piece: empty");
                    pts.insert(pts.end(), p.points.begin(), p.points.end());
                }
            },
            piece);
    }

    SampleSet s;
    s.points.resize(static_cast<Index>(pts.size()));
    for (Index i = 0; i < s.points.size(); ++i) s.points(i) = pts[static_cast<size_t>(i)];
    s.values = CVector::Zero(s.points.size());
    if (spec.closed_override.has_value()) {
        s.closed_curve = *spec.closed_override;
    } else {
        s.closed_curve = spec.pieces.size() == 1 &&
                         std::holds_alternative<CirclePiece>(spec.pieces.front()) &&
                         std::get<CirclePiece>(spec.pieces.front()).full;
    }
    try {
        validate(s);
    } catch (const error& e) {
        fail(errc::input, std::string("DomainSpec build: ") + e.what());
    }
    return s;
}

/// 64-bit linear congruential generator (Knuth's MMIX multiplier), pinned so
/// random-point grids are reproducible across implementations. Each draw maps
/// the top 53 state bits to [0, 1).
class Lcg64 {
  public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    double next_uniform() {
        state_ = 6364136223846793005ULL * state_ + 1442695040888963407ULL;
        return static_cast<double>(state_ >> 11) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
};

/// `count` points uniform over the axis-aligned rectangle [lo, hi], drawn as
/// (re, im) pairs from the pinned generator. Deterministic for a fixed seed.
inline SampleSet random_rectangle(int count, Complex corner_lo, Complex corner_hi,
                                  std::uint64_t seed) {
    if (count < 1) fail(errc::input, "random_rectangle: count must be at least 1");
    if (!(corner_lo.real() < corner_hi.real()) || !(corner_lo.imag() < corner_hi.imag()))
        fail(errc::input, "random_rectangle: degenerate rectangle");
    Lcg64 rng(seed);
    SampleSet s;
    s.points.resize(count);
    for (Index i = 0; i < count; ++i) {
        const double x = corner_lo.real() + rng.next_uniform() * (corner_hi.real() - corner_lo.real());
        const double y = corner_lo.imag() + rng.next_uniform() * (corner_hi.imag() - corner_lo.imag());
        s.points(i) = Complex(x, y);
    }
    s.values = CVector::Zero(count);
    validate(s);
    return s;
}

}  // namespace barymin

#endif
