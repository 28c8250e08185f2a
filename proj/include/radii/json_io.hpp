#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "radii/connection.hpp"
#include "radii/errors.hpp"
#include "radii/morphism.hpp"
#include "radii/pushforward.hpp"
#include "radii/pwm.hpp"
#include "radii/rational.hpp"

// JSON encodings. Rationals travel as strings ("a/b" or "a") so nothing is
// ever rounded; small counts (ranks, degrees, indices) are plain integers.
namespace radii {

using nlohmann::json;

inline json rat_to_json(const Rat& r) { return to_string(r); }

inline Rat rat_from_json(const json& j, const std::string& where) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    throw ValidationError(where + ": expected a rational string");
}

inline json int_to_json(const Int& n) {
    return std::stoll(to_string(n));
}

inline Int int_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        Rat r = rat_from_string(j.get<std::string>());
        if (r.denominator() != 1) throw ValidationError(where + ": expected an integer");
        return r.numerator();
    }
    throw ValidationError(where + ": expected an integer");
}

inline json pwm_to_json(const Pwm& f) {
    json breaks = json::array(), slopes = json::array();
    for (const Rat& b : f.breaks()) breaks.push_back(rat_to_json(b));
    for (const Rat& s : f.slopes()) slopes.push_back(rat_to_json(s));
    return json{{"breaks", std::move(breaks)}, {"slopes", std::move(slopes)}};
}

inline Pwm pwm_from_json(const json& j) {
    if (!j.is_object() || !j.contains("breaks") || !j.contains("slopes"))
        throw ValidationError("/: expected {\"breaks\", \"slopes\"}");
    std::vector<Rat> breaks, slopes;
    for (const auto& b : j.at("breaks")) breaks.push_back(rat_from_json(b, "/breaks"));
    for (const auto& s : j.at("slopes")) slopes.push_back(rat_from_json(s, "/slopes"));
    return Pwm::make(std::move(breaks), std::move(slopes));
}

inline json series_to_json(const SeriesValuations& sv) {
    json terms = json::array();
    for (const auto& [i, val] : sv.terms())
        terms.push_back(json::array({int_to_json(i), rat_to_json(val)}));
    return json{{"terms", std::move(terms)}};
}

inline SeriesValuations series_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms"))
        throw ValidationError("/: expected {\"terms\"}");
    std::vector<std::pair<Int, Rat>> terms;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2)
            throw ValidationError("/terms: expected [index, \"val\"] pairs");
        terms.emplace_back(int_from_json(t[0], "/terms"), rat_from_json(t[1], "/terms"));
    }
    return SeriesValuations::make(std::move(terms));
}

inline json multiradius_to_json(const MultiRadius& mr) {
    json vals = json::array();
    for (const Rat& v : mr.logvalues()) vals.push_back(rat_to_json(v));
    return json{{"logvalues", std::move(vals)}};
}

inline MultiRadius multiradius_from_json(const json& j) {
    if (!j.is_object() || !j.contains("logvalues"))
        throw ValidationError("/: expected {\"logvalues\"}");
    std::vector<Rat> vals;
    for (const auto& v : j.at("logvalues")) vals.push_back(rat_from_json(v, "/logvalues"));
    return MultiRadius::make(std::move(vals));
}

inline json fiber_point_to_json(const FiberPoint& fp) {
    json radii = json::array();
    for (const Rat& v : fp.radii.logvalues()) radii.push_back(rat_to_json(v));
    return json{{"label", fp.label},
                {"sep_degree", int_to_json(fp.sep_degree)},
                {"profile", pwm_to_json(fp.profile.pwm())},
                {"radii", std::move(radii)}};
}

inline FiberPoint fiber_point_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("sep_degree") || !j.contains("profile") ||
        !j.contains("radii"))
        throw ValidationError(where + ": expected {\"label\", \"sep_degree\", \"profile\", \"radii\"}");
    std::string label = j.contains("label") ? j.at("label").get<std::string>() : "";
    Pwm pwm = pwm_from_json(j.at("profile"));
    bool etale = pwm.slopes().back() == 1;
    std::vector<Rat> radii;
    for (const auto& v : j.at("radii")) radii.push_back(rat_from_json(v, where + "/radii"));
    return FiberPoint::make(std::move(label), MorphismProfile::make(std::move(pwm), etale),
                            int_from_json(j.at("sep_degree"), where + "/sep_degree"),
                            MultiRadius::make(std::move(radii)));
}

inline json fiber_configuration_to_json(const FiberConfiguration& fc) {
    json points = json::array();
    for (const FiberPoint& fp : fc.points) points.push_back(fiber_point_to_json(fp));
    return json{{"rank", fc.rank}, {"points", std::move(points)}};
}

inline FiberConfiguration fiber_configuration_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("points"))
        throw ValidationError("/: expected {\"rank\", \"points\"}");
    Int rank = int_from_json(j.at("rank"), "/rank");
    if (rank < 1) throw ValidationError("/rank: must be positive");
    std::vector<FiberPoint> points;
    std::size_t i = 0;
    for (const auto& p : j.at("points"))
        points.push_back(fiber_point_from_json(p, "/points/" + std::to_string(i++)));
    return FiberConfiguration::make(std::move(points),
                                    static_cast<std::size_t>(rank.convert_to<unsigned long>()));
}

inline json annulus_direction_to_json(const AnnulusDirection& dir) {
    return json{{"d", int_to_json(dir.d)},
                {"sigma", int_to_json(dir.sigma)},
                {"val_a", rat_to_json(dir.val_a)}};
}

inline AnnulusDirection annulus_direction_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("sigma") || !j.contains("val_a"))
        throw ValidationError("/: expected {\"d\", \"sigma\", \"val_a\"}");
    return AnnulusDirection::make(int_from_json(j.at("d"), "/d"),
                                  int_from_json(j.at("sigma"), "/sigma"),
                                  rat_from_json(j.at("val_a"), "/val_a"));
}

inline json ramification_to_json(const RamificationData& rd) {
    json jumps = json::array();
    for (const auto& [v, idx] : rd.jumps())
        jumps.push_back(json::array({rat_to_json(v), int_to_json(idx)}));
    return json{{"degree", int_to_json(rd.degree())}, {"jumps", std::move(jumps)}};
}

inline RamificationData ramification_from_json(const json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("jumps"))
        throw ValidationError("/: expected {\"degree\", \"jumps\"}");
    std::vector<RamificationData::Jump> jumps;
    for (const auto& t : j.at("jumps")) {
        if (!t.is_array() || t.size() != 2)
            throw ValidationError("/jumps: expected [\"v\", index] pairs");
        jumps.emplace_back(rat_from_json(t[0], "/jumps"), int_from_json(t[1], "/jumps"));
    }
    return RamificationData::make(int_from_json(j.at("degree"), "/degree"), std::move(jumps));
}

inline json direction_model_to_json(const DirectionModel& dm) {
    json comps = json::array();
    for (const auto& [coeff, m] : dm.components())
        comps.push_back(json::array({rat_to_json(coeff), int_to_json(m)}));
    return json{{"components", std::move(comps)}};
}

inline DirectionModel direction_model_from_json(const json& j) {
    if (!j.is_object() || !j.contains("components"))
        throw ValidationError("/: expected {\"components\"}");
    std::vector<std::pair<Rat, Int>> comps;
    for (const auto& t : j.at("components")) {
        if (!t.is_array() || t.size() != 2)
            throw ValidationError("/components: expected [\"coeff\", m] pairs");
        comps.emplace_back(rat_from_json(t[0], "/components"),
                           int_from_json(t[1], "/components"));
    }
    return DirectionModel::make(std::move(comps));
}

inline json polygon_to_json(const ConvergencePolygon& cp) {
    json verts = json::array();
    for (const auto& [i, h] : cp.vertices())
        verts.push_back(json::array({int_to_json(i), rat_to_json(h)}));
    return json{{"vertices", std::move(verts)}, {"height", rat_to_json(cp.height())}};
}

inline json profile_family_to_json(const ProfileFamily& pf) {
    json breaks = json::array(), slopes = json::array();
    for (const auto& [beta, e] : pf.breaks())
        breaks.push_back(json::array({rat_to_json(beta), rat_to_json(e)}));
    for (const Rat& s : pf.slopes()) slopes.push_back(rat_to_json(s));
    return json{{"interval", json::array({rat_to_json(pf.lo()), rat_to_json(pf.hi())})},
                {"breaks", std::move(breaks)},
                {"slopes", std::move(slopes)}};
}

inline ProfileFamily profile_family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("interval") || !j.contains("breaks") ||
        !j.contains("slopes"))
        throw ValidationError("/: expected {\"interval\", \"breaks\", \"slopes\"}");
    const auto& iv = j.at("interval");
    if (!iv.is_array() || iv.size() != 2)
        throw ValidationError("/interval: expected [\"lo\", \"hi\"]");
    std::vector<std::pair<Rat, Rat>> breaks;
    for (const auto& t : j.at("breaks")) {
        if (!t.is_array() || t.size() != 2)
            throw ValidationError("/breaks: expected [\"beta\", e] pairs");
        breaks.emplace_back(rat_from_json(t[0], "/breaks"), rat_from_json(t[1], "/breaks"));
    }
    std::vector<Rat> slopes;
    for (const auto& s : j.at("slopes")) slopes.push_back(rat_from_json(s, "/slopes"));
    return ProfileFamily::make(rat_from_json(iv[0], "/interval"),
                               rat_from_json(iv[1], "/interval"), std::move(breaks),
                               std::move(slopes));
}

inline json phi_table_to_json(const PhiTable& table) {
    json cands = json::array();
    for (const auto& row : table.rows)
        cands.push_back(json::array(
            {rat_to_json(row.logvalue), int_to_json(row.phi), int_to_json(row.phi_plus)}));
    return json{{"candidates", std::move(cands)}};
}

}  // namespace radii
