#ifndef BARYMIN_SVG_HPP
#define BARYMIN_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "barymin/approx.hpp"
#include "barymin/io.hpp"
#include "barymin/types.hpp"

namespace barymin {

namespace detail {

/// Equal-aspect mapping from a data rectangle onto a pixel viewport.
struct PanelMap {
    double cx, cy;      // data center
    double scale;       // pixels per data unit
    double px, py;      // pixel center

    double x(double v) const { return px + scale * (v - cx); }
    double y(double v) const { return py - scale * (v - cy); }
};

inline PanelMap fit_panel(double lo_x, double hi_x, double lo_y, double hi_y, double px,
                          double py, double size) {
    const double w = std::max(hi_x - lo_x, 1e-300);
    const double h = std::max(hi_y - lo_y, 1e-300);
    PanelMap m;
    m.cx = 0.5 * (lo_x + hi_x);
    m.cy = 0.5 * (lo_y + hi_y);
    m.scale = 0.9 * size / std::max(w, h);
    m.px = px;
    m.py = py;
    return m;
}

inline std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8g", v);
    return buf;
}

}  // namespace detail

/// Two-panel figure: the error curve traced in sample order with the maximum
/// marked, and the domain with support points and poles.
inline void write_svg(const ApproxReport& r, const std::string& path) {
    constexpr double panel = 420.0;
    constexpr double gap = 40.0;
    constexpr double margin = 30.0;
    const double width = 2 * panel + gap + 2 * margin;
    const double height = panel + 2 * margin + 20.0;

    std::ofstream out = detail::open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << height
        << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // ---- left panel: error curve -------------------------------------------
    {
        double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
        bool any = false;
        Index argmax = 0;
        double emax = -1.0;
        for (Index j = 0; j < r.errors.size(); ++j) {
            const Complex e = r.errors(j);
            if (!is_finite(e)) continue;
            if (!any) {
                lo_x = hi_x = e.real();
                lo_y = hi_y = e.imag();
                any = true;
            }
            lo_x = std::min(lo_x, e.real());
            hi_x = std::max(hi_x, e.real());
            lo_y = std::min(lo_y, e.imag());
            hi_y = std::max(hi_y, e.imag());
            if (std::abs(e) > emax) {
                emax = std::abs(e);
                argmax = j;
            }
        }
        lo_x = std::min(lo_x, 0.0);
        hi_x = std::max(hi_x, 0.0);
        lo_y = std::min(lo_y, 0.0);
        hi_y = std::max(hi_y, 0.0);
        const detail::PanelMap m =
            detail::fit_panel(lo_x, hi_x, lo_y, hi_y, margin + panel / 2, margin + panel / 2, panel);

        out << "<line x1=\"" << detail::coord(m.x(lo_x)) << "\" y1=\"" << detail::coord(m.y(0))
            << "\" x2=\"" << detail::coord(m.x(hi_x)) << "\" y2=\"" << detail::coord(m.y(0))
            << "\" stroke=\"#cccccc\"/>\n";
        out << "<line x1=\"" << detail::coord(m.x(0)) << "\" y1=\"" << detail::coord(m.y(lo_y))
            << "\" x2=\"" << detail::coord(m.x(0)) << "\" y2=\"" << detail::coord(m.y(hi_y))
            << "\" stroke=\"#cccccc\"/>\n";

        out << "<polyline class=\"error-curve\" fill=\"none\" stroke=\"#1f4e9c\" "
               "stroke-width=\"1\" points=\"";
        for (Index j = 0; j < r.errors.size(); ++j) {
            const Complex e = r.errors(j);
            if (!is_finite(e)) continue;
            out << detail::coord(m.x(e.real())) << ',' << detail::coord(m.y(e.imag())) << ' ';
        }
        if (r.samples.closed_curve && r.errors.size() > 0 && is_finite(r.errors(0)))
            out << detail::coord(m.x(r.errors(0).real())) << ','
                << detail::coord(m.y(r.errors(0).imag()));
        out << "\"/>\n";

        if (emax >= 0.0 && is_finite(r.errors(argmax))) {
            out << "<circle class=\"max-error\" cx=\"" << detail::coord(m.x(r.errors(argmax).real()))
                << "\" cy=\"" << detail::coord(m.y(r.errors(argmax).imag()))
                << "\" r=\"4\" fill=\"none\" stroke=\"red\" stroke-width=\"1.5\"/>\n";
        }
        out << "<text x=\"" << margin << "\" y=\"" << height - 8
            << "\" font-family=\"sans-serif\" font-size=\"12\">error curve, max "
            << detail::coord(r.lawson_max_error) << "</text>\n";
    }

    // ---- right panel: domain, support points, poles -------------------------
    {
        double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
        bool any = false;
        auto grow = [&](Complex z) {
            if (!is_finite(z)) return;
            if (!any) {
                lo_x = hi_x = z.real();
                lo_y = hi_y = z.imag();
                any = true;
                return;
            }
            lo_x = std::min(lo_x, z.real());
            hi_x = std::max(hi_x, z.real());
            lo_y = std::min(lo_y, z.imag());
            hi_y = std::max(hi_y, z.imag());
        };
        for (Index j = 0; j < r.samples.size(); ++j) grow(r.samples.points(j));
        // poles can sit far outside the domain; include only the nearby ones
        const double domain_span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-300});
        for (Index i = 0; i < r.poles.size(); ++i) {
            const Complex p = r.poles(i);
            if (std::abs(p - Complex(0.5 * (lo_x + hi_x), 0.5 * (lo_y + hi_y))) < 2 * domain_span)
                grow(p);
        }
        const detail::PanelMap m = detail::fit_panel(
            lo_x, hi_x, lo_y, hi_y, margin + panel + gap + panel / 2, margin + panel / 2, panel);

        for (Index j = 0; j < r.samples.size(); ++j)
            out << "<circle cx=\"" << detail::coord(m.x(r.samples.points(j).real())) << "\" cy=\""
                << detail::coord(m.y(r.samples.points(j).imag()))
                << "\" r=\"0.8\" fill=\"#888888\"/>\n";
        for (Index k = 0; k < r.support_points.size(); ++k)
            out << "<circle class=\"support\" cx=\""
                << detail::coord(m.x(r.support_points(k).real())) << "\" cy=\""
                << detail::coord(m.y(r.support_points(k).imag()))
                << "\" r=\"3.5\" fill=\"none\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
        for (Index i = 0; i < r.poles.size(); ++i)
            out << "<circle class=\"pole\" cx=\"" << detail::coord(m.x(r.poles(i).real()))
                << "\" cy=\"" << detail::coord(m.y(r.poles(i).imag()))
                << "\" r=\"2.2\" fill=\"red\"/>\n";
        out << "<text x=\"" << margin + panel + gap << "\" y=\"" << height - 8
            << "\" font-family=\"sans-serif\" font-size=\"12\">domain, support points, poles"
            << "</text>\n";
    }

    out << "</svg>\n";
}

}  // namespace barymin

#endif
