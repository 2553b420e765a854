#include "fibredim/report.hpp"

#include <json.hpp>

namespace fibredim {

namespace {

using nlohmann::ordered_json;

ordered_json json_int(const mpz_class& n) {
    if (n.fits_slong_p()) return ordered_json(n.get_si());
    return ordered_json(n.get_str());
}

ordered_json json_of(const DimensionValue& v) {
    if (v.is_empty()) return ordered_json("empty");
    return ordered_json(v.value());
}

ordered_json json_of(const SpecPoint& pt) {
    if (pt.is_generic()) return ordered_json("generic");
    return json_int(pt.prime);
}

ordered_json json_of(const EffectiveSpectrum& s) {
    ordered_json j;
    j["includes_generic"] = s.includes_generic;
    j["cofinite"] = s.cofinite;
    ordered_json pts = ordered_json::array();
    for (const auto& p : s.closed_points) pts.push_back(json_int(p));
    j["closed_points"] = std::move(pts);
    return j;
}

ordered_json json_of(const TensorDimReport& r) {
    ordered_json j;
    j["path"] = to_string(r.path);
    ordered_json pts = ordered_json::array();
    for (const auto& cmp : r.points) {
        ordered_json e;
        e["point"] = json_of(cmp.point);
        e["dim_left"] = json_of(cmp.dim_left);
        e["dim_right"] = json_of(cmp.dim_right);
        e["formula"] = json_of(cmp.formula);
        e["oracle"] = json_of(cmp.oracle);
        pts.push_back(std::move(e));
    }
    j["points"] = std::move(pts);
    j["formula_dim"] = json_of(r.formula_dim);
    j["oracle_dim"] = json_of(r.oracle_dim);
    j["agree"] = r.agree;
    return j;
}

}  // namespace

std::string to_json_string(const DimensionValue& v) { return json_of(v).dump(); }
std::string to_json_string(const SpecPoint& pt) { return json_of(pt).dump(); }
std::string to_json_string(const EffectiveSpectrum& spectrum) { return json_of(spectrum).dump(); }
std::string to_json_string(const TensorDimReport& report) { return json_of(report).dump(); }

std::string to_json_string(const CrossCheckReport& report) {
    ordered_json j;
    j["seed"] = report.seed;
    j["instances"] = report.instances;
    ordered_json reports = ordered_json::array();
    for (const auto& r : report.reports) reports.push_back(json_of(r));
    j["reports"] = std::move(reports);
    j["membership_probes"] = report.probes_run;
    j["failures"] = report.failures;
    return j.dump();
}

std::string to_json_string(const SeidenbergBounds& bounds) {
    ordered_json j;
    j["lower"] = json_of(bounds.lower);
    j["upper"] = json_of(bounds.upper);
    j["dim_if_known"] = bounds.dim_if_known ? json_of(*bounds.dim_if_known) : ordered_json(nullptr);
    j["refined_lower"] =
        bounds.refined_lower ? json_of(*bounds.refined_lower) : ordered_json(nullptr);
    return j.dump();
}

std::string to_json_string(const FibreRing& fr) {
    ordered_json j;
    if (fr.field.kind == CoeffDomain::Kind::rationals) {
        j["field"] = ordered_json{{"kind", "Q"}};
    } else {
        ordered_json base;
        base["kind"] = "Fp";
        base["n"] = json_int(fr.field.modulus);
        j["field"] = std::move(base);
    }
    j["point"] = json_of(fr.point);
    ordered_json factors = ordered_json::array();
    for (size_t i = 0; i < fr.components.size(); ++i) {
        const auto& comp = fr.components[i];
        ordered_json e;
        e["vars"] = comp.vars;
        ordered_json rels = ordered_json::array();
        for (const auto& r : comp.relations) rels.push_back(r.to_expression(comp.vars));
        e["relations"] = std::move(rels);
        factors.push_back(std::move(e));
    }
    j["factors"] = std::move(factors);
    return j.dump();
}

std::string spectrum_report_json(const EffectiveSpectrum& spectrum) {
    ordered_json j = json_of(spectrum);
    MaximalPoints max = maximal_effective_points(spectrum);
    ordered_json m;
    m["generic_only"] = max.generic_only;
    m["cofinite"] = max.cofinite;
    ordered_json pts = ordered_json::array();
    for (const auto& p : max.closed_points) pts.push_back(json_int(p));
    m["closed_points"] = std::move(pts);
    j["maximal_points"] = std::move(m);
    return j.dump();
}

EffectiveSpectrum parse_effective_spectrum(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("spectrum JSON syntax error: ") + e.what(), 1, 1);
    }
    EffectiveSpectrum s;
    s.includes_generic = j.at("includes_generic").get<bool>();
    s.cofinite = j.at("cofinite").get<bool>();
    for (const auto& p : j.at("closed_points")) {
        if (p.is_string())
            s.closed_points.emplace_back(p.get<std::string>(), 10);
        else
            s.closed_points.emplace_back(std::to_string(p.get<long long>()));
    }
    std::sort(s.closed_points.begin(), s.closed_points.end());
    return s;
}

std::string to_json_string(const AltitudeCheck& check, const SpecPoint& pt) {
    ordered_json j;
    j["point"] = json_of(pt);
    j["holds"] = check.holds;
    j["height"] = json_of(check.height);
    j["td_quotient"] = json_of(check.td_quotient);
    j["td_localized"] = json_of(check.td_localized);
    return j.dump();
}

}  // namespace fibredim
