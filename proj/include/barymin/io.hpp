#ifndef BARYMIN_IO_HPP
#define BARYMIN_IO_HPP

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "barymin/approx.hpp"
#include "barymin/sample_set.hpp"
#include "barymin/types.hpp"

namespace barymin {

namespace detail {

inline std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

inline bool parse_double(const std::string& s, double& out) {
    const char* begin = s.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    if (end == begin) return false;
    while (*end == ' ' || *end == '\t') ++end;
    return *end == '\0';
}

inline std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(errc::io, "cannot open '" + path + "' for writing");
    return out;
}

inline std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io, "cannot open '" + path + "' for reading");
    return in;
}

}  // namespace detail

/// Sample CSV: four comma-separated columns re(z), im(z), re(f), im(f), a
/// header row optional, values round-trippable at 17 significant digits.
inline void write_samples_csv(const SampleSet& s, const std::string& path) {
    std::ofstream out = detail::open_out(path);
    out << "re_z,im_z,re_f,im_f\n";
    for (Index j = 0; j < s.size(); ++j)
        out << detail::format_double(s.points(j).real()) << ','
            << detail::format_double(s.points(j).imag()) << ','
            << detail::format_double(s.values(j).real()) << ','
            << detail::format_double(s.values(j).imag()) << '\n';
}

inline SampleSet read_samples_csv(const std::string& path) {
    std::ifstream in = detail::open_in(path);
    std::vector<Complex> pts, vals;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        const std::vector<std::string> fields = detail::split_csv_line(line);
        if (fields.size() != 4)
            fail(errc::parse, path + ":" + std::to_string(lineno) + ": expected 4 columns, got " +
                                  std::to_string(fields.size()));
        double v[4];
        bool numeric = true;
        for (int i = 0; i < 4; ++i) numeric = numeric && detail::parse_double(fields[i], v[i]);
        if (!numeric) {
            if (lineno == 1 && pts.empty()) continue;  // header row
            fail(errc::parse, path + ":" + std::to_string(lineno) + ": malformed number");
        }
        pts.push_back(Complex(v[0], v[1]));
        vals.push_back(Complex(v[2], v[3]));
    }
    if (pts.empty()) fail(errc::parse, path + ": no sample rows");
    SampleSet s;
    s.points.resize(static_cast<Index>(pts.size()));
    s.values.resize(static_cast<Index>(vals.size()));
    for (Index i = 0; i < s.points.size(); ++i) {
        s.points(i) = pts[static_cast<size_t>(i)];
        s.values(i) = vals[static_cast<size_t>(i)];
    }
    validate(s);
    return s;
}

/// Error-curve CSV: re(z), im(z), re(e), im(e), |e| per sample.
inline void write_error_csv(const ApproxReport& r, const std::string& path) {
    std::ofstream out = detail::open_out(path);
    out << "re_z,im_z,re_e,im_e,abs_e\n";
    for (Index j = 0; j < r.samples.size(); ++j)
        out << detail::format_double(r.samples.points(j).real()) << ','
            << detail::format_double(r.samples.points(j).imag()) << ','
            << detail::format_double(r.errors(j).real()) << ','
            << detail::format_double(r.errors(j).imag()) << ','
            << detail::format_double(std::abs(r.errors(j))) << '\n';
}

/// Convergence-history CSV: step, max_error per Lawson step.
inline void write_history_csv(const ApproxReport& r, const std::string& path) {
    std::ofstream out = detail::open_out(path);
    out << "step,max_error\n";
    for (size_t i = 0; i < r.history.size(); ++i)
        out << (i + 1) << ',' << detail::format_double(r.history[i]) << '\n';
}

/// Dense real matrix CSV, one row per line.
inline Eigen::MatrixXd read_matrix_csv(const std::string& path) {
    std::ifstream in = detail::open_in(path);
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        const std::vector<std::string> fields = detail::split_csv_line(line);
        std::vector<double> row(fields.size());
        for (size_t i = 0; i < fields.size(); ++i)
            if (!detail::parse_double(fields[i], row[i]))
                fail(errc::parse, path + ":" + std::to_string(lineno) + ": malformed number");
        if (!rows.empty() && rows.front().size() != row.size())
            fail(errc::parse, path + ":" + std::to_string(lineno) + ": ragged row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(errc::parse, path + ": empty matrix");
    Eigen::MatrixXd m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

/// Resolvent vector file: two CSV rows, b then c.
inline std::pair<Eigen::VectorXd, Eigen::VectorXd> read_vectors_csv(const std::string& path) {
    const Eigen::MatrixXd m = read_matrix_csv(path);
    if (m.rows() != 2)
        fail(errc::parse, path + ": expected exactly two rows (b then c), got " +
                              std::to_string(m.rows()));
    return {m.row(0).transpose(), m.row(1).transpose()};
}

}  // namespace barymin

#endif
