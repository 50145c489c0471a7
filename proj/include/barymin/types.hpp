#ifndef BARYMIN_TYPES_HPP
#define BARYMIN_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace barymin {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Error categories, mapped one-to-one onto CLI exit codes.
enum class errc {
    input,                 ///< malformed or out-of-contract input value
    dimension,             ///< matrix/vector shape violation
    insufficient_samples,  ///< fewer than 2n+2 samples for a degree-n fit
    lookup,                ///< unknown catalog name
    consistency,           ///< internal cross-reference mismatch (e.g. support point not in sample set)
    parse,                 ///< file format error
    io,                    ///< filesystem error
    invariant,             ///< type invariant violated at construction
    catalog_stub,          ///< entry requires external data that is not bundled
    numerical,             ///< numerical failure during a run
    internal,              ///< "cannot happen" path
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline void require_all_finite(const CMatrix& a, const char* name) {
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (!is_finite(a(i, j)))
                fail(errc::input, std::string(name) + ": non-finite entry at (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
}

inline void require_all_finite(const CVector& v, const char* name) {
    for (Index i = 0; i < v.size(); ++i)
        if (!is_finite(v(i)))
            fail(errc::input, std::string(name) + ": non-finite entry at " + std::to_string(i));
}

}  // namespace barymin

#endif
