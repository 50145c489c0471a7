#ifndef BARYMIN_SERIALIZE_HPP
#define BARYMIN_SERIALIZE_HPP

#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "barymin/approx.hpp"
#include "barymin/barycentric.hpp"
#include "barymin/catalog.hpp"
#include "barymin/domains.hpp"
#include "barymin/sample_set.hpp"
#include "barymin/types.hpp"

namespace barymin {

using nlohmann::json;

// Complex numbers travel as [re, im] pairs everywhere; doubles round-trip
// exactly through the shortest-representation printer. Non-finite components
// (legal only in error curves) map to null and back to infinity.

inline json complex_to_json(Complex z) {
    json j = json::array();
    j.push_back(std::isfinite(z.real()) ? json(z.real()) : json());
    j.push_back(std::isfinite(z.imag()) ? json(z.imag()) : json());
    return j;
}

inline Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        fail(errc::parse, "complex value must be a [re, im] pair");
    const double re = j[0].is_null() ? std::numeric_limits<double>::infinity() : j[0].get<double>();
    const double im = j[1].is_null() ? std::numeric_limits<double>::infinity() : j[1].get<double>();
    return {re, im};
}

inline json cvector_to_json(const CVector& v) {
    json j = json::array();
    for (Index i = 0; i < v.size(); ++i) j.push_back(complex_to_json(v(i)));
    return j;
}

inline CVector cvector_from_json(const json& j) {
    if (!j.is_array()) fail(errc::parse, "expected an array of complex values");
    CVector v(static_cast<Index>(j.size()));
    for (Index i = 0; i < v.size(); ++i) v(i) = complex_from_json(j[static_cast<size_t>(i)]);
    return v;
}

// ---- BarycentricRational ----------------------------------------------------

inline json to_json(const BarycentricRational& r) {
    json j;
    j["degree"] = r.degree();
    j["support_points"] = cvector_to_json(r.support_points());
    j["alpha"] = cvector_to_json(r.alpha());
    j["beta"] = cvector_to_json(r.beta());
    j["mode"] = r.mode() == BaryMode::interpolatory ? "interpolatory" : "alpha_beta";
    if (r.mode() == BaryMode::interpolatory) j["values"] = cvector_to_json(r.values());
    return j;
}

inline BarycentricRational rational_from_json(const json& j) {
    const std::string mode = j.at("mode").get<std::string>();
    CVector support = cvector_from_json(j.at("support_points"));
    CVector alpha = cvector_from_json(j.at("alpha"));
    CVector beta = cvector_from_json(j.at("beta"));
    if (static_cast<Index>(j.at("degree").get<int>()) != support.size() - 1)
        fail(errc::parse, "BarycentricRational: degree field inconsistent with support points");
    if (mode == "interpolatory") {
        BarycentricRational r = BarycentricRational::make_interpolatory(
            std::move(support), cvector_from_json(j.at("values")), std::move(beta));
        return r;
    }
    if (mode != "alpha_beta") fail(errc::parse, "BarycentricRational: unknown mode '" + mode + "'");
    return BarycentricRational(std::move(support), std::move(alpha), std::move(beta),
                               BaryMode::alpha_beta);
}

// ---- SampleSet --------------------------------------------------------------

inline json to_json(const SampleSet& s) {
    json j;
    j["points"] = cvector_to_json(s.points);
    j["values"] = cvector_to_json(s.values);
    j["closed_curve"] = s.closed_curve;
    return j;
}

inline SampleSet samples_from_json(const json& j) {
    SampleSet s;
    s.points = cvector_from_json(j.at("points"));
    s.values = cvector_from_json(j.at("values"));
    s.closed_curve = j.value("closed_curve", false);
    validate(s);
    return s;
}

// ---- DomainSpec -------------------------------------------------------------

inline const char* to_string(GridLaw law) {
    switch (law) {
        case GridLaw::equispaced: return "equispaced";
        case GridLaw::chebyshev: return "chebyshev";
        case GridLaw::tanh_clustered: return "tanh";
    }
    return "equispaced";
}

inline GridLaw law_from_string(const std::string& s) {
    if (s == "equispaced") return GridLaw::equispaced;
    if (s == "chebyshev") return GridLaw::chebyshev;
    if (s == "tanh") return GridLaw::tanh_clustered;
    fail(errc::parse, "unknown grid law '" + s + "'");
}

inline json to_json(const DomainSpec& spec) {
    json pieces = json::array();
    for (const DomainPiece& piece : spec.pieces) {
        json p;
        if (const CirclePiece* c = std::get_if<CirclePiece>(&piece)) {
            p["type"] = "circle";
            p["center"] = complex_to_json(c->center);
            p["radius"] = c->radius;
            p["npts"] = c->npts;
            p["law"] = to_string(c->law);
            if (c->law == GridLaw::tanh_clustered) p["strength"] = c->tanh_strength;
            if (!c->full) {
                p["theta_from"] = c->theta_from;
                p["theta_to"] = c->theta_to;
            }
            if (c->drop_first) p["drop_first"] = true;
        } else if (const SegmentPiece* s = std::get_if<SegmentPiece>(&piece)) {
            p["type"] = "segment";
            p["a"] = complex_to_json(s->a);
            p["b"] = complex_to_json(s->b);
            p["npts"] = s->npts;
            p["law"] = to_string(s->law);
            if (s->law == GridLaw::tanh_clustered) p["strength"] = s->tanh_strength;
            if (s->drop_first) p["drop_first"] = true;
        } else if (const LoglinePiece* l = std::get_if<LoglinePiece>(&piece)) {
            p["type"] = "logline";
            p["a"] = complex_to_json(l->a);
            p["b"] = complex_to_json(l->b);
            p["npts"] = l->npts;
        } else {
            const RawPiece& r = std::get<RawPiece>(piece);
            p["type"] = "raw";
            json pts = json::array();
            for (Complex z : r.points) pts.push_back(complex_to_json(z));
            p["points"] = std::move(pts);
        }
        pieces.push_back(std::move(p));
    }
    json j;
    j["pieces"] = std::move(pieces);
    if (spec.closed_override.has_value()) j["closed"] = *spec.closed_override;
    return j;
}

inline DomainSpec domain_from_json(const json& j) {
    DomainSpec spec;
    if (!j.contains("pieces") || !j.at("pieces").is_array())
        fail(errc::parse, "DomainSpec: missing 'pieces' array");
    for (const json& p : j.at("pieces")) {
        const std::string type = p.at("type").get<std::string>();
        if (type == "circle") {
            CirclePiece c;
            c.center = complex_from_json(p.at("center"));
            c.radius = p.at("radius").get<double>();
            c.npts = p.at("npts").get<int>();
            c.law = law_from_string(p.value("law", "equispaced"));
            c.tanh_strength = p.value("strength", 12.0);
            if (p.contains("theta_from") || p.contains("theta_to")) {
                c.theta_from = p.at("theta_from").get<double>();
                c.theta_to = p.at("theta_to").get<double>();
                c.full = false;
            }
            c.drop_first = p.value("drop_first", false);
            spec.pieces.push_back(c);
        } else if (type == "segment") {
            SegmentPiece s;
            s.a = complex_from_json(p.at("a"));
            s.b = complex_from_json(p.at("b"));
            s.npts = p.at("npts").get<int>();
            s.law = law_from_string(p.value("law", "equispaced"));
            s.tanh_strength = p.value("strength", 12.0);
            s.drop_first = p.value("drop_first", false);
            spec.pieces.push_back(s);
        } else if (type == "logline") {
            LoglinePiece l;
            l.a = complex_from_json(p.at("a"));
            l.b = complex_from_json(p.at("b"));
            l.npts = p.at("npts").get<int>();
            spec.pieces.push_back(l);
        } else if (type == "raw") {
            RawPiece r;
            for (const json& q : p.at("points")) r.points.push_back(complex_from_json(q));
            spec.pieces.push_back(std::move(r));
        } else {
            fail(errc::parse, "DomainSpec: unknown piece type '" + type + "'");
        }
    }
    if (j.contains("closed")) spec.closed_override = j.at("closed").get<bool>();
    return spec;
}

// ---- ApproxReport -----------------------------------------------------------

inline json to_json(const ApproxReport& r) {
    json j;
    j["problem"] = r.problem;
    j["degree"] = r.degree;
    j["sample_count"] = r.sample_count;
    j["aaa_max_error"] = r.aaa_max_error;
    j["lawson_max_error"] = r.lawson_max_error;
    j["reverted"] = r.reverted;
    j["support_points"] = cvector_to_json(r.support_points);
    j["alpha"] = cvector_to_json(r.alpha);
    j["beta"] = cvector_to_json(r.beta);
    j["poles"] = cvector_to_json(r.poles);
    j["residues"] = cvector_to_json(r.residues);
    j["zeros"] = cvector_to_json(r.zeros);
    if (r.winding.has_value()) j["winding"] = *r.winding;
    j["winding_status"] = r.winding_status;
    j["history"] = r.history;
    j["failure"] = to_string(r.failure);
    if (!r.failure_detail.empty()) j["failure_detail"] = r.failure_detail;
    j["timings"] = {{"aaa_seconds", r.aaa_seconds}, {"lawson_seconds", r.lawson_seconds}};
    j["samples"] = to_json(r.samples);
    j["errors"] = cvector_to_json(r.errors);
    return j;
}

inline ApproxReport report_from_json(const json& j) {
    ApproxReport r;
    r.problem = j.at("problem").get<std::string>();
    r.degree = j.at("degree").get<int>();
    r.sample_count = j.at("sample_count").get<Index>();
    r.aaa_max_error = j.at("aaa_max_error").get<double>();
    r.lawson_max_error = j.at("lawson_max_error").get<double>();
    r.reverted = j.at("reverted").get<bool>();
    r.support_points = cvector_from_json(j.at("support_points"));
    r.alpha = cvector_from_json(j.at("alpha"));
    r.beta = cvector_from_json(j.at("beta"));
    r.poles = cvector_from_json(j.at("poles"));
    r.residues = cvector_from_json(j.at("residues"));
    r.zeros = cvector_from_json(j.at("zeros"));
    if (j.contains("winding")) r.winding = j.at("winding").get<int>();
    r.winding_status = j.value("winding_status", "not-applicable");
    r.history = j.at("history").get<std::vector<double>>();
    r.failure_detail = j.value("failure_detail", "");
    const std::string f = j.value("failure", "none");
    if (f == "none") r.failure = FailureClass::none;
    else if (f == "near-machine-precision") r.failure = FailureClass::near_machine_precision;
    else if (f == "degeneracy") r.failure = FailureClass::degeneracy;
    else if (f == "oscillation") r.failure = FailureClass::oscillation;
    else if (f == "divergent") r.failure = FailureClass::divergent;
    else if (f == "reverted") r.failure = FailureClass::reverted;
    else fail(errc::parse, "ApproxReport: unknown failure class '" + f + "'");
    r.aaa_seconds = j.at("timings").value("aaa_seconds", 0.0);
    r.lawson_seconds = j.at("timings").value("lawson_seconds", 0.0);
    r.samples = samples_from_json(j.at("samples"));
    r.errors = cvector_from_json(j.at("errors"));
    return r;
}

/// The returned approximant reconstructed from a serialized report.
inline BarycentricRational rational_from_report(const ApproxReport& r) {
    return BarycentricRational(r.support_points, r.alpha, r.beta, BaryMode::alpha_beta);
}

// ---- catalog export ---------------------------------------------------------

inline json to_json(const Expectation& e) {
    return {{"value", e.value}, {"lo", e.lo}, {"hi", e.hi}, {"provenance", e.provenance}};
}

inline json catalog_to_json() {
    json out = json::array();
    for (const ProblemEntry& e : catalog()) {
        json j;
        j["name"] = e.name;
        j["title"] = e.title;
        if (e.stub) {
            j["stub"] = true;
            j["stub_reason"] = e.stub_reason;
            out.push_back(std::move(j));
            continue;
        }
        j["function"] = {{"tag", e.f.tag}, {"params", e.f.params}};
        if (e.random_grid.has_value()) {
            j["random_grid"] = {{"count", e.random_grid->count},
                                {"corner_lo", complex_to_json(e.random_grid->corner_lo)},
                                {"corner_hi", complex_to_json(e.random_grid->corner_hi)},
                                {"seed", e.random_grid->seed}};
        } else {
            j["domain"] = to_json(e.spec);
        }
        j["degree"] = e.degree;
        j["nsteps"] = e.nsteps;
        if (e.aaa_error) j["expected_aaa_error"] = to_json(*e.aaa_error);
        if (e.lawson_error) j["expected_lawson_error"] = to_json(*e.lawson_error);
        if (e.error_lower_bound) j["error_lower_bound"] = to_json(*e.error_lower_bound);
        if (e.error_ratio_components) j["expected_error_ratio"] = to_json(*e.error_ratio_components);
        if (e.winding.has_value())
            j["expected_winding"] = {{"value", *e.winding}, {"provenance", e.winding_provenance}};
        if (!e.pole_data.empty()) {
            json pd = json::array();
            for (const PoleExpectation& p : e.pole_data) {
                json q = {{"kind", p.kind},
                          {"values", p.values},
                          {"provenance", p.provenance},
                          {"note", p.note}};
                if (p.kind == "distances_to_point") q["reference"] = p.reference;
                pd.push_back(std::move(q));
            }
            j["pole_data"] = std::move(pd);
        }
        if (e.negative_test) j["negative_test"] = true;
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace barymin

#endif
