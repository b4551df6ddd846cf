#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ultraspec/function_field.hpp"
#include "ultraspec/padic.hpp"
#include "ultraspec/parse.hpp"
#include "ultraspec/perturbation.hpp"
#include "ultraspec/spectral.hpp"
#include "ultraspec/ultrametric.hpp"
#include "ultraspec/valuation.hpp"
#include "ultraspec/vectors.hpp"

namespace ultraspec {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0.0";

// ---- serialization -------------------------------------------------

// Rationals travel as strings ("n" or "n/d"), never as floats.
inline json to_json(const Rational& r) { return r.to_string(); }

inline json to_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const Rational& r : v) a.push_back(to_json(r));
    return a;
}

// Finite valuations as numbers, the valuation of zero as "inf".
inline json to_json(const ValuationValue& v) {
    if (v.is_infinity()) return "inf";
    return v.exponent();
}

inline json abs_to_json(const PAdicContext& ctx, const AbsValue& a) {
    json out;
    out["zero"] = a.is_zero();
    if (a.is_zero()) {
        out["value"] = "0";
    } else {
        out["exponent"] = a.exponent();
        out["value"] = a.exact_value(ctx).to_string();
    }
    return out;
}

inline json to_json(const PAdicApprox& x) {
    json out;
    out["shift"] = x.shift;
    out["digits"] = x.digits;
    return out;
}

inline json vec_to_json(const Vec& v) {
    json out;
    out["coords"] = to_json(static_cast<const std::vector<Rational>&>(v));
    return out;
}

inline json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json(const Poly& p) {
    json out;
    json coeffs = json::array();
    for (long long i = 0; i <= p.degree(); ++i)
        coeffs.push_back(p.coeff(static_cast<std::size_t>(i)).to_string());
    out["coeffs"] = std::move(coeffs); // lowest degree first
    out["display"] = p.to_string();
    return out;
}

inline json to_json(const Multiplicity& m) {
    if (m.is_infinite()) return "inf";
    return m.count();
}

inline json to_json(const MembershipReport& r) {
    json out;
    out["valuation"] = to_json(r.valuation);
    out["in_ring"] = r.in_ring;
    out["in_maximal_ideal"] = r.in_maximal_ideal;
    return out;
}

inline json to_json(const SetDescription& s) {
    json out;
    out["listed"] = to_json(s.listed);
    json fams = json::array();
    for (const FamilyDesc& f : s.families) {
        json fj;
        fj["p"] = f.p.convert_to<long long>();
        fj["c"] = f.c.to_string();
        fj["alpha"] = f.alpha.to_string();
        fj["count_hint"] = f.count_hint;
        fams.push_back(std::move(fj));
    }
    out["families"] = std::move(fams);
    out["finite"] = s.is_finite();
    return out;
}

inline json to_json(const FredholmStatus& s) {
    json out;
    out["eta"] = to_json(s.eta);
    out["delta"] = to_json(s.delta);
    out["class"] = to_string(s.cls);
    out["index_zero"] = s.index_zero;
    return out;
}

inline json to_json(const SpectrumReport& r) {
    json out;
    out["point_spectrum"] = to_json(r.point_spectrum);
    out["sigma_e_prime"] = to_json(r.sigma_e_prime);
    out["sigma_e_double_prime"] = to_json(r.sigma_e_double_prime);
    out["sigma_e"] = to_json(r.sigma_e);
    out["sigma"] = to_json(r.sigma);
    json st = json::array();
    for (const ValueStatus& vs : r.statuses) {
        json sj = to_json(vs.status);
        sj["lambda"] = vs.lam.to_string();
        st.push_back(std::move(sj));
    }
    out["statuses"] = std::move(st);
    return out;
}

inline json to_json(const DualityReport& r) {
    json out;
    out["kernel_indices"] = r.kernel_indices;
    out["range_indices"] = r.range_indices;
    out["ok"] = r.ok;
    return out;
}

inline json to_json(const EigenReport& r) {
    json out;
    out["lambda"] = r.lam.to_string();
    out["is_eigenvalue"] = r.is_eigen;
    out["rank"] = r.rank;
    out["kernel_dim"] = r.kernel_dim;
    json kb = json::array();
    for (const Vec& x : r.kernel) kb.push_back(vec_to_json(x));
    out["kernel"] = std::move(kb);
    return out;
}

inline json to_json(const ComparisonReport& r) {
    json out;
    out["theta"] = to_json(r.theta);
    out["theta_set"] = to_json(r.theta_set);
    out["char_poly"] = to_json(r.char_poly);
    json roots = json::array();
    for (const auto& [root, mult] : r.rational_eigen) {
        json rj;
        rj["value"] = root.to_string();
        rj["mult"] = mult;
        roots.push_back(std::move(rj));
    }
    out["rational_eigenvalues"] = std::move(roots);
    out["sigma_p"] = to_json(r.sigma_p);
    out["char_poly_splits"] = r.char_poly_splits;
    out["theta_not_eigen"] = to_json(r.theta_not_eigen);
    out["eigen_not_theta"] = to_json(r.eigen_not_theta);
    out["relation"] = r.relation;
    return out;
}

inline json to_json(const CauchyReport& r) {
    json out;
    json dv = json::array();
    for (const ValuationValue& v : r.diff_valuations) dv.push_back(to_json(v));
    out["diff_valuations"] = std::move(dv);
    out["verdict"] = to_string(r.verdict);
    if (r.violation_index) out["violation_index"] = *r.violation_index;
    return out;
}

// ---- parsing -------------------------------------------------------

namespace detail {

inline const json& field(const json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"", 0);
    return *it;
}

inline Rational rational_field(const json& j) {
    if (!j.is_string()) throw ParseError("rationals must be JSON strings", 0);
    return parse_rational(j.get<std::string>());
}

} // namespace detail

inline Vec parse_vector_json(const json& j) {
    const json& coords = detail::field(j, "coords");
    if (!coords.is_array()) throw ParseError("\"coords\" must be an array", 0);
    Vec out;
    for (const json& c : coords) out.push_back(detail::rational_field(c));
    return out;
}

inline Multiplicity parse_mult_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return Multiplicity::infinite();
        throw ParseError("multiplicity must be a positive integer or \"inf\"", 0);
    }
    if (!j.is_number_unsigned() || j.get<unsigned long long>() == 0)
        throw ParseError("multiplicity must be a positive integer or \"inf\"", 0);
    return Multiplicity::finite(j.get<unsigned long long>());
}

/**
 * Profile JSON:
 *   {"kind":"explicit","entries":[{"value":"2","mult":3},{"value":"7","mult":"inf"}]}
 *   {"kind":"geometric","p":5,"c":"1","alpha":"5","count_hint":20}
 *   {"kind":"union","parts":[...],"accumulation":["0"]}
 */
inline SpectralProfile parse_profile_json(const json& j) {
    const json& kind = detail::field(j, "kind");
    if (kind == "explicit") {
        const json& entries = detail::field(j, "entries");
        if (!entries.is_array()) throw ParseError("\"entries\" must be an array", 0);
        std::vector<ExplicitEntry> out;
        for (const json& e : entries)
            out.push_back(ExplicitEntry{detail::rational_field(detail::field(e, "value")),
                                        parse_mult_json(detail::field(e, "mult"))});
        return SpectralProfile::explicit_profile(std::move(out));
    }
    if (kind == "geometric") {
        const json& p = detail::field(j, "p");
        if (!p.is_number_unsigned()) throw ParseError("\"p\" must be a positive integer", 0);
        PAdicContext ctx(Int(p.get<unsigned long long>()));
        const Rational c = detail::rational_field(detail::field(j, "c"));
        const Rational alpha = detail::rational_field(detail::field(j, "alpha"));
        std::size_t hint = 0;
        if (j.contains("count_hint")) {
            if (!j["count_hint"].is_number_unsigned())
                throw ParseError("\"count_hint\" must be a nonnegative integer", 0);
            hint = j["count_hint"].get<std::size_t>();
        }
        return SpectralProfile::geometric(std::move(ctx), c, alpha, hint);
    }
    if (kind == "union") {
        const json& parts = detail::field(j, "parts");
        if (!parts.is_array() || parts.empty())
            throw ParseError("\"parts\" must be a nonempty array", 0);
        std::vector<SpectralProfile> out;
        for (const json& p : parts) out.push_back(parse_profile_json(p));
        std::vector<Rational> acc;
        if (j.contains("accumulation"))
            for (const json& a : j["accumulation"]) acc.push_back(detail::rational_field(a));
        return SpectralProfile::union_profile(std::move(out), std::move(acc));
    }
    throw ParseError("unknown profile kind", 0);
}

// Pairs file: {"pairs":[{"u":{"coords":[...]},"v":{"coords":[...]}}, ...]}
inline std::vector<std::pair<Vec, Vec>> parse_pairs_json(const json& j) {
    const json& pairs = detail::field(j, "pairs");
    if (!pairs.is_array() || pairs.empty())
        throw ParseError("\"pairs\" must be a nonempty array", 0);
    std::vector<std::pair<Vec, Vec>> out;
    for (const json& p : pairs)
        out.emplace_back(parse_vector_json(detail::field(p, "u")),
                         parse_vector_json(detail::field(p, "v")));
    return out;
}

// ---- report envelope -----------------------------------------------

inline json make_report(const std::string& command, json result,
                        std::vector<std::string> warnings = {}) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = command;
    out["result"] = std::move(result);
    out["warnings"] = std::move(warnings);
    return out;
}

// Stable report bytes: two-space indent, sorted keys (nlohmann objects
// sort keys already), trailing newline.
inline std::string report_bytes(const json& report) { return report.dump(2) + "\n"; }

} // namespace ultraspec
