#ifndef BARYMIN_CATALOG_HPP
#define BARYMIN_CATALOG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "barymin/domains.hpp"
#include "barymin/functions.hpp"
#include "barymin/types.hpp"

namespace barymin {

/// An expected scalar with an acceptance band and a provenance tag
/// ("paper" = published value, "derived" = computed by an independent oracle).
struct Expectation {
    double value = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    std::string provenance;
};

/// Published pole geometry attached to an entry. `kind` is one of
/// "in_disk_real_pairs", "outer_real_pairs", "radii_shells", "imag_pairs",
/// "distances_to_point", "locations", "all_inside_unit".
struct PoleExpectation {
    std::string kind;
    std::vector<double> values;
    double reference = 0.0;  ///< anchor point for "distances_to_point"
    std::string provenance;
    std::string note;
};

struct RandomGrid {
    int count = 0;
    Complex corner_lo, corner_hi;
    std::uint64_t seed = 0;
};

struct ProblemEntry {
    std::string name;
    std::string title;
    FunctionDescriptor f;
    DomainSpec spec;                        ///< unused when random_grid or stub is set
    std::optional<RandomGrid> random_grid;  ///< random-point domains
    int degree = 0;
    int nsteps = 20;  ///< documented per-entry step count
    std::optional<Expectation> aaa_error;
    std::optional<Expectation> lawson_error;
    std::optional<Expectation> error_lower_bound;       ///< best-approximation floor
    std::optional<Expectation> error_ratio_components;  ///< max-error ratio between domain components
    std::optional<int> winding;
    std::string winding_provenance;
    std::vector<PoleExpectation> pole_data;
    bool negative_test = false;  ///< the run is expected to fail or revert
    bool stub = false;
    std::string stub_reason;
};

namespace detail {

inline DomainSpec unit_circle(int npts) {
    DomainSpec s;
    s.pieces.push_back(CirclePiece{Complex(0, 0), 1.0, npts});
    return s;
}

inline ProblemEntry make_expz_n5() {
    ProblemEntry e;
    e.name = "expz_circle_n5";
    e.title = "exp(z) on 500 equispaced unit-circle points, degree 5";
    e.f = {"exp", {}};
    e.spec = unit_circle(500);
    e.degree = 5;
    e.aaa_error = Expectation{3.83e-10, 1e-10, 8e-10, "paper"};
    e.lawson_error = Expectation{9.944364e-11, 9.944144081e-11, 1.01e-10, "paper"};
    e.error_lower_bound = Expectation{9.944144081e-11, 0, 0, "paper"};
    e.winding = 11;
    e.winding_provenance = "paper";
    return e;
}

inline ProblemEntry make_expz_n3() {
    ProblemEntry e;
    e.name = "expz_circle_n3";
    e.title = "exp(z) on 500 equispaced unit-circle points, degree 3";
    e.f = {"exp", {}};
    e.spec = unit_circle(500);
    e.degree = 3;
    e.lawson_error = Expectation{9.9318e-6, 9.9318e-6 * 0.999, 9.9318e-6 * 1.001, "paper"};
    return e;
}

inline ProblemEntry make_tan2pi() {
    ProblemEntry e;
    e.name = "tan2pi_circle_n12";
    e.title = "tan(2 pi z) on 1000 equispaced unit-circle points, degree 12";
    e.f = {"tan_2pi_z", {}};
    e.spec = unit_circle(1000);
    e.degree = 12;
    e.aaa_error = Expectation{3.16e-7, 3.16e-7 / 2, 3.16e-7 * 2, "paper"};
    e.lawson_error = Expectation{7.08e-8, 7.08e-8 * 0.95, 7.08e-8 * 1.05, "paper"};
    e.winding = 17;
    e.winding_provenance = "paper";
    e.pole_data.push_back({"in_disk_real_pairs", {0.25, 0.75}, 0.0, "paper",
                           "function poles captured to at least 10 significant digits"});
    e.pole_data.push_back({"outer_real_pairs", {1.250011, 1.7638, 2.6420, 7.3844}, 0.0, "paper",
                           "agreement to the printed digits"});
    return e;
}

inline ProblemEntry make_log_ellipse() {
    ProblemEntry e;
    e.name = "log_ellipse";
    e.title = "log(0.5 - z) on a 2000-point ellipse (half-width 0.3, half-height 1), degree 8";
    e.f = {"log_half_minus_z", {}};
    RawPiece raw;
    raw.points.reserve(2000);
    for (int k = 1; k <= 2000; ++k) {
        const double t = 2.0 * std::numbers::pi * k / 2000.0;
        raw.points.push_back(Complex(0.3 * std::cos(t), std::sin(t)));
    }
    e.spec.pieces.push_back(std::move(raw));
    e.spec.closed_override = true;
    e.degree = 8;
    e.winding = 17;
    e.winding_provenance = "derived";
    e.pole_data.push_back({"locations", {}, 0.0, "derived",
                           "poles line up along the branch cut on the real axis right of 0.5"});
    return e;
}

inline ProblemEntry make_airy_square() {
    ProblemEntry e;
    e.name = "airy_square";
    e.title = "Ai(2z) on the unit-square boundary, Chebyshev-distributed points per side, degree 10";
    e.f = {"airy_scaled", {2.0}};
    const Complex c[4] = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
    for (int s = 0; s < 4; ++s) {
        SegmentPiece seg;
        seg.a = c[s];
        seg.b = c[(s + 1) % 4];
        seg.npts = 1000;
        seg.law = GridLaw::chebyshev;
        seg.drop_first = true;  // each side starts at the previous side's corner
        e.spec.pieces.push_back(seg);
    }
    e.spec.closed_override = true;
    e.degree = 10;
    e.winding = 21;
    e.winding_provenance = "paper";
    return e;
}

inline ProblemEntry make_quartic() {
    ProblemEntry e;
    e.name = "quartic_sqrt_n16";
    e.title = "sqrt(1 + z^4) on a 4x1000 tanh-clustered unit-circle grid, degree 16";
    e.f = {"sqrt_one_plus_z4", {}};
    constexpr double q = std::numbers::pi / 4;
    for (int rot = 0; rot < 4; ++rot) {
        CirclePiece arc;
        arc.center = Complex(0, 0);
        arc.radius = 1.0;
        arc.npts = 1000;
        arc.law = GridLaw::tanh_clustered;
        arc.tanh_strength = 12.0;
        arc.theta_from = -q + rot * 2 * q;  // quadrant clustered toward the two nearest singularities
        arc.theta_to = q + rot * 2 * q;
        arc.full = false;
        e.spec.pieces.push_back(arc);
    }
    e.degree = 16;
    e.aaa_error = Expectation{1.38e-1, 1.38e-1 * 0.7, 1.38e-1 * 1.3, "paper"};
    e.lawson_error = Expectation{6.49e-3, 6.49e-3 * 0.9, 6.49e-3 * 1.1, "paper"};
    e.pole_data.push_back({"radii_shells", {1.00046, 1.0085, 1.075, 1.59}, 0.0, "paper",
                           "four poles per branch-cut shell, one near each singularity"});
    return e;
}

inline ProblemEntry make_rand14() {
    ProblemEntry e;
    e.name = "rand14_tanz_n6";
    e.title = "tan(z) at 14 random points in [-2,2]x[-1,1], degree 6 (2n+2 samples)";
    e.f = {"tan", {}};
    e.random_grid = RandomGrid{14, Complex(-2, -1), Complex(2, 1), 7};
    e.degree = 6;
    e.pole_data.push_back({"locations", {}, 0.0, "derived",
                           "with 2n+2 samples the minimax error is attained at every sample"});
    return e;
}

inline ProblemEntry make_rand100() {
    ProblemEntry e;
    e.name = "rand100_tanz";
    e.title = "tan(z) at 100 random points in [-2,2]x[-1,1], degree 6";
    e.f = {"tan", {}};
    e.random_grid = RandomGrid{100, Complex(-2, -1), Complex(2, 1), 7};
    e.degree = 6;
    return e;
}

inline ProblemEntry make_exp_semicircle() {
    ProblemEntry e;
    e.name = "exp_semicircle_arc";
    e.title = "exp(z) on the upper unit semicircle, 500 Chebyshev-in-angle points, degree 4";
    e.f = {"exp", {}};
    CirclePiece arc;
    arc.npts = 500;
    arc.law = GridLaw::chebyshev;
    arc.theta_from = 0.0;
    arc.theta_to = std::numbers::pi;
    arc.full = false;
    e.spec.pieces.push_back(arc);
    e.degree = 4;
    return e;
}

inline ProblemEntry make_s_curve() {
    ProblemEntry e;
    e.name = "s_curve_arc";
    e.title = "exp(z) on an S-shaped pair of tangent semicircles, 500 Chebyshev points each, degree 4";
    e.f = {"exp", {}};
    constexpr double h = std::numbers::pi / 2;
    CirclePiece lower;  // left half of the circle around -i/2, from -i up to 0
    lower.center = Complex(0, -0.5);
    lower.radius = 0.5;
    lower.npts = 500;
    lower.law = GridLaw::chebyshev;
    lower.theta_from = -h;
    lower.theta_to = -3 * h;
    lower.full = false;
    e.spec.pieces.push_back(lower);
    CirclePiece upper;  // right half of the circle around +i/2, from 0 up to i
    upper.center = Complex(0, 0.5);
    upper.radius = 0.5;
    upper.npts = 500;
    upper.law = GridLaw::chebyshev;
    upper.theta_from = -h;
    upper.theta_to = h;
    upper.full = false;
    upper.drop_first = true;  // the junction point belongs to the lower arc
    e.spec.pieces.push_back(upper);
    e.degree = 4;
    return e;
}

inline ProblemEntry make_essential() {
    ProblemEntry e;
    e.name = "essential_circle";
    e.title = "exp(4/z) (essential singularity inside) on 1000 unit-circle points, degree 8";
    e.f = {"exp_reciprocal_scaled", {4.0}};
    e.spec = unit_circle(1000);
    e.degree = 8;
    e.winding = -17;
    e.winding_provenance = "paper";
    e.pole_data.push_back({"all_inside_unit", {}, 0.0, "paper",
                           "every pole of the approximant falls inside the unit circle"});
    return e;
}

inline ProblemEntry make_annulus() {
    ProblemEntry e;
    e.name = "annulus_sqrt";
    e.title = "sqrt(1 - 1/z^2) on the annulus boundary 1 <= |z| <= 2, degree 16";
    e.f = {"sqrt_one_minus_inv_sq", {}};
    CirclePiece outer;
    outer.center = Complex(0, 0);
    outer.radius = 2.0;
    outer.npts = 500;
    e.spec.pieces.push_back(outer);
    for (int half = 0; half < 2; ++half) {
        CirclePiece inner;
        inner.center = Complex(0, 0);
        inner.radius = 1.0;
        inner.npts = 500;
        inner.law = GridLaw::tanh_clustered;
        inner.tanh_strength = 12.0;
        inner.theta_from = half == 0 ? 0.0 : -std::numbers::pi;
        inner.theta_to = half == 0 ? std::numbers::pi : 0.0;
        inner.full = false;
        e.spec.pieces.push_back(inner);
    }
    e.degree = 16;
    e.error_ratio_components =
        Expectation{57.1, 57.1 * 0.8, 57.1 * 1.2, "paper"};  // inner max / outer max
    return e;
}

inline ProblemEntry make_twodisks() {
    ProblemEntry e;
    e.name = "twodisks_sign";
    e.title = "z*sign(Re z) on two unit circles centered at +-1.5, 1000 points each, degree 10";
    e.f = {"z_sign_re", {}};
    CirclePiece right;
    right.center = Complex(1.5, 0);
    right.npts = 1000;
    e.spec.pieces.push_back(right);
    CirclePiece left;
    left.center = Complex(-1.5, 0);
    left.npts = 1000;
    e.spec.pieces.push_back(left);
    e.degree = 10;
    return e;
}

inline ProblemEntry make_airy_interval() {
    ProblemEntry e;
    e.name = "airy_interval";
    e.title = "Ai(x) on [-10,10], 1000 Chebyshev points, degree 12";
    e.f = {"airy_scaled", {1.0}};
    SegmentPiece seg;
    seg.a = Complex(-10, 0);
    seg.b = Complex(10, 0);
    seg.npts = 1000;
    seg.law = GridLaw::chebyshev;
    e.spec.pieces.push_back(seg);
    e.degree = 12;
    return e;
}

inline ProblemEntry make_sqrt1mx() {
    ProblemEntry e;
    e.name = "sqrt1mx_n10";
    e.title = "sqrt(1-x) on a 1000-point tanh(12) grid in [-1,1], degree 10";
    e.f = {"sqrt_one_minus_z", {}};
    SegmentPiece seg;
    seg.a = Complex(-1, 0);
    seg.b = Complex(1, 0);
    seg.npts = 1000;
    seg.law = GridLaw::tanh_clustered;
    seg.tanh_strength = 12.0;
    e.spec.pieces.push_back(seg);
    e.degree = 10;
    e.pole_data.push_back({"distances_to_point",
                           {1.4e-8, 5.9e-7, 1.0e-5, 1.1e-4, 9.5e-4, 6.4e-3, 3.7e-2, 0.19},
                           1.0, "paper",
                           "distances of the eight clustered poles to the singular endpoint"});
    e.pole_data.push_back({"locations", {2.1, 15.3}, 0.0, "paper",
                           "locations of the two outermost poles on the real axis"});
    return e;
}

inline ProblemEntry make_newman() {
    ProblemEntry e;
    e.name = "newman_absx";
    e.title = "|x| on tanh(12) grids over [-1,0] and [0,1], 500 points per side, degree 12";
    e.f = {"abs_re", {}};
    for (int side = 0; side < 2; ++side) {
        SegmentPiece seg;
        seg.a = Complex(side == 0 ? -1 : 0, 0);
        seg.b = Complex(side == 0 ? 0 : 1, 0);
        seg.npts = 500;
        seg.law = GridLaw::tanh_clustered;
        seg.tanh_strength = 12.0;
        e.spec.pieces.push_back(seg);
    }
    e.degree = 12;
    e.lawson_error = Expectation{1.23e-4, 1.23e-4 * 0.85, 1.23e-4 * 1.15, "paper"};
    e.error_lower_bound = Expectation{1.07e-4, 0, 0, "paper"};
    e.pole_data.push_back({"imag_pairs", {0.00138, 0.0102, 0.0448, 0.155, 0.4780, 1.98}, 0.0,
                           "paper", "six conjugate pole pairs along the imaginary axis"});
    return e;
}

inline ProblemEntry make_fermi() {
    ProblemEntry e;
    e.name = "fermi_dirac";
    e.title = "1/(1+exp(10(x-2))) on [0,10], 1000 Chebyshev points, degree 8";
    e.f = {"fermi_dirac", {10.0, 2.0}};
    SegmentPiece seg;
    seg.a = Complex(0, 0);
    seg.b = Complex(10, 0);
    seg.npts = 1000;
    seg.law = GridLaw::chebyshev;
    e.spec.pieces.push_back(seg);
    e.degree = 8;
    e.lawson_error = Expectation{9.09e-6, 9.09e-6 * 0.9, 9.09e-6 * 1.1, "paper"};
    e.error_lower_bound = Expectation{8.77e-6, 0, 0, "paper"};
    return e;
}

inline ProblemEntry make_twoint(bool analytic) {
    ProblemEntry e;
    e.name = analytic ? "twoint_sin6x" : "twoint_absxsinx";
    e.title = std::string(analytic ? "sin(6x)" : "|x| sin(x)") +
              " on [-3,-1] and [1,3], 500 Chebyshev points each, degree 10";
    e.f = analytic ? FunctionDescriptor{"sin_scaled", {6.0}} : FunctionDescriptor{"abs_re_sin", {}};
    for (int side = 0; side < 2; ++side) {
        SegmentPiece seg;
        seg.a = Complex(side == 0 ? -3 : 1, 0);
        seg.b = Complex(side == 0 ? -1 : 3, 0);
        seg.npts = 500;
        seg.law = GridLaw::chebyshev;
        e.spec.pieces.push_back(seg);
    }
    e.degree = 10;
    return e;
}

inline ProblemEntry make_cmv() {
    ProblemEntry e;
    e.name = "cmv_expx";
    e.title = "exp(x) on (-inf,0]: 2000 log-spaced points from -1e6 to -1e-6, degree 8";
    e.f = {"exp", {}};
    LoglinePiece line;
    line.a = Complex(-1e6, 0);
    line.b = Complex(-1e-6, 0);
    line.npts = 2000;
    e.spec.pieces.push_back(line);
    e.degree = 8;
    return e;
}

inline ProblemEntry make_gauss() {
    ProblemEntry e;
    e.name = "gauss_realline";
    e.title = "exp(-x^2) on the real line: 100 equispaced in [-1,1] plus 500 log-spaced "
              "per tail out to +-1e6, degree 12";
    e.f = {"gauss", {}};
    SegmentPiece core;
    core.a = Complex(-1, 0);
    core.b = Complex(1, 0);
    core.npts = 100;
    e.spec.pieces.push_back(core);
    // tails start one log step beyond +-1 so the segment endpoints are not repeated
    const double start = std::pow(10.0, 6.0 / 500.0);
    LoglinePiece right;
    right.a = Complex(start, 0);
    right.b = Complex(1e6, 0);
    right.npts = 500;
    e.spec.pieces.push_back(right);
    LoglinePiece left;
    left.a = Complex(-start, 0);
    left.b = Complex(-1e6, 0);
    left.npts = 500;
    e.spec.pieces.push_back(left);
    e.degree = 12;
    e.aaa_error = Expectation{6.92e-6, 6.92e-6 * 0.8, 6.92e-6 * 1.2, "paper"};
    e.lawson_error = Expectation{1.04e-6, 1.04e-6 * 0.9, 1.04e-6 * 1.1, "paper"};
    return e;
}

inline ProblemEntry make_degenerate() {
    ProblemEntry e;
    e.name = "degen_expz2_n3";
    e.title = "exp(z^2) on 500 unit-circle points, degree 3 (known-degenerate request)";
    e.f = {"exp_z_squared", {}};
    e.spec = unit_circle(500);
    e.degree = 3;
    e.nsteps = 100;  // the divergent tail needs enough steps to show
    e.negative_test = true;
    return e;
}

inline ProblemEntry make_lshape_stub() {
    ProblemEntry e;
    e.name = "sc_lshape";
    e.title = "conformal map of an L-shaped region (external data required)";
    e.stub = true;
    e.stub_reason =
        "this entry needs an external conformal-map evaluator for the boundary data; "
        "evaluate the map yourself and run the samples through 'approx file'";
    return e;
}

inline ProblemEntry make_beam_stub() {
    ProblemEntry e;
    e.name = "niconet_beam";
    e.title = "clamped-beam transfer function c^T (zI - A)^{-1} b on the imaginary axis "
              "(external dataset required)";
    e.stub = true;
    e.stub_reason =
        "this entry needs the external 348x348 state-space dataset, which is not bundled; "
        "supply the matrix and vector files via 'approx resolvent'";
    return e;
}

}  // namespace detail

/// The immutable problem registry, fixed at build time.
inline const std::vector<ProblemEntry>& catalog() {
    static const std::vector<ProblemEntry> entries = [] {
        std::vector<ProblemEntry> v;
        v.push_back(detail::make_expz_n5());
        v.push_back(detail::make_expz_n3());
        v.push_back(detail::make_tan2pi());
        v.push_back(detail::make_log_ellipse());
        v.push_back(detail::make_airy_square());
        v.push_back(detail::make_quartic());
        v.push_back(detail::make_rand14());
        v.push_back(detail::make_rand100());
        v.push_back(detail::make_exp_semicircle());
        v.push_back(detail::make_s_curve());
        v.push_back(detail::make_essential());
        v.push_back(detail::make_annulus());
        v.push_back(detail::make_twodisks());
        v.push_back(detail::make_airy_interval());
        v.push_back(detail::make_sqrt1mx());
        v.push_back(detail::make_newman());
        v.push_back(detail::make_fermi());
        v.push_back(detail::make_twoint(true));
        v.push_back(detail::make_twoint(false));
        v.push_back(detail::make_cmv());
        v.push_back(detail::make_gauss());
        v.push_back(detail::make_degenerate());
        v.push_back(detail::make_lshape_stub());
        v.push_back(detail::make_beam_stub());
        return v;
    }();
    return entries;
}

inline std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const ProblemEntry& e : catalog()) names.push_back(e.name);
    return names;
}

namespace detail {

inline int edit_distance(const std::string& a, const std::string& b) {
    std::vector<int> prev(b.size() + 1), cur(b.size() + 1);
    for (size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<int>(j);
    for (size_t i = 1; i <= a.size(); ++i) {
        cur[0] = static_cast<int>(i);
        for (size_t j = 1; j <= b.size(); ++j) {
            const int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

}  // namespace detail

/// Registry lookup; unknown names raise a lookup error suggesting the nearest
/// registered name.
inline const ProblemEntry& catalog_get(const std::string& name) {
    const ProblemEntry* nearest = nullptr;
    int best = std::numeric_limits<int>::max();
    for (const ProblemEntry& e : catalog()) {
        if (e.name == name) return e;
        const int d = detail::edit_distance(name, e.name);
        if (d < best) {
            best = d;
            nearest = &e;
        }
    }
    fail(errc::lookup, "unknown catalog problem '" + name + "'" +
                           (nearest ? " (nearest match: '" + nearest->name + "')" : ""));
}

}  // namespace barymin

#endif
