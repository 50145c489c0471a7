#ifndef BARYMIN_FUNCTIONS_HPP
#define BARYMIN_FUNCTIONS_HPP

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/special_functions/airy.hpp>

#include "barymin/types.hpp"

namespace barymin {

/// Airy function Ai. Real arguments go through the library implementation;
/// complex arguments use the Maclaurin series, which holds full accuracy for
/// the moderate |z| this project samples (|z| <= 4 enforced).
inline Complex airy_ai(Complex z) {
    if (z.imag() == 0.0) return Complex(boost::math::airy_ai(z.real()), 0.0);
    if (std::abs(z) > 4.0)
        fail(errc::input, "airy_ai: complex argument |z| > 4 outside the series' accuracy range");
    // Ai(z) = c1 f(z) - c2 g(z), f and g the standard entire series
    constexpr double c1 = 0.35502805388781723926;  // Ai(0)
    constexpr double c2 = 0.25881940379280679841;  // -Ai'(0)
    const Complex z3 = z * z * z;
    Complex f(1.0, 0.0), g = z;
    Complex tf(1.0, 0.0), tg = z;
    for (int k = 1; k <= 40; ++k) {
        tf *= z3 / double((3 * k) * (3 * k - 1));
        tg *= z3 / double((3 * k) * (3 * k + 1));
        f += tf;
        g += tg;
    }
    return c1 * f - c2 * g;
}

/// Closed-form function descriptor: a tag plus numeric parameters, the
/// serializable form used by the problem catalog.
struct FunctionDescriptor {
    std::string tag;
    std::vector<double> params;
};

using FunctionHandle = std::function<Complex(Complex)>;

/// Instantiates a callable for a descriptor tag. Unknown tags are an input
/// error naming the tag.
inline FunctionHandle make_function(const FunctionDescriptor& d) {
    const auto p = [&d](size_t i, double fallback) {
        return i < d.params.size() ? d.params[i] : fallback;
    };
    if (d.tag == "exp") return [](Complex z) { return std::exp(z); };
    if (d.tag == "exp_z_squared") return [](Complex z) { return std::exp(z * z); };
    if (d.tag == "tan_2pi_z")
        return [](Complex z) { return std::tan(2.0 * std::numbers::pi * z); };
    if (d.tag == "tan") return [](Complex z) { return std::tan(z); };
    if (d.tag == "log_half_minus_z") return [](Complex z) { return std::log(0.5 - z); };
    if (d.tag == "airy_scaled") {
        const double c = p(0, 1.0);
        return [c](Complex z) { return airy_ai(c * z); };
    }
    if (d.tag == "sqrt_one_plus_z4") return [](Complex z) { return std::sqrt(1.0 + z * z * z * z); };
    if (d.tag == "sqrt_one_minus_z") return [](Complex z) { return std::sqrt(1.0 - z); };
    if (d.tag == "sqrt_one_minus_inv_sq")
        return [](Complex z) { return std::sqrt(1.0 - 1.0 / (z * z)); };
    if (d.tag == "exp_reciprocal_scaled") {
        const double c = p(0, 1.0);
        return [c](Complex z) { return std::exp(c / z); };
    }
    if (d.tag == "z_sign_re")
        return [](Complex z) { return z.real() >= 0.0 ? z : -z; };
    if (d.tag == "abs_re") return [](Complex z) { return Complex(std::abs(z.real()), 0.0); };
    if (d.tag == "abs_re_sin")
        return [](Complex z) { return std::abs(z.real()) * std::sin(z); };
    if (d.tag == "sin_scaled") {
        const double c = p(0, 1.0);
        return [c](Complex z) { return std::sin(c * z); };
    }
    if (d.tag == "fermi_dirac") {
        const double sharpness = p(0, 10.0);
        const double center = p(1, 2.0);
        return [sharpness, center](Complex z) { return 1.0 / (1.0 + std::exp(sharpness * (z - center))); };
    }
    if (d.tag == "gauss") return [](Complex z) { return std::exp(-z * z); };
    fail(errc::input, "make_function: unknown function tag '" + d.tag + "'");
}

}  // namespace barymin

#endif
