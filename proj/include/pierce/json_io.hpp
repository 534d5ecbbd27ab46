#pragma once

// JSON schemas for instances and certificates.
//
// Instance:
//   {"generator": {"type":"polygon","vertices":[[x,y],...]}
//                 | {"type":"disk","radius":r},
//    "families":[{"color":1,"translates":[[x,y],...]}, ...]}
//
// Piercing certificate:
//   {"method": string, "family_index": int, "points": [[x,y],...],
//    "witnesses": {...}}
//
// Point-set input for the disk route: {"sets":[[ [x,y],... ],...]}

#include <string>
#include <vector>

#include <json.hpp>

#include "pierce/errors.hpp"
#include "pierce/instance.hpp"

namespace pierce {

using json = nlohmann::json;

inline json point_to_json(Point2 p) { return json::array({p.x, p.y}); }

inline Point2 point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InputError("expected point [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline json body_to_json(const ConvexBody& b) {
    json j;
    if (b.is_disk()) {
        j["type"] = "disk";
        j["radius"] = b.radius();
        if (b.center().x != 0.0 || b.center().y != 0.0)
            j["center"] = point_to_json(b.center());
    } else {
        j["type"] = "polygon";
        json verts = json::array();
        for (Point2 v : b.verts()) verts.push_back(point_to_json(v));
        j["vertices"] = verts;
    }
    return j;
}

inline ConvexBody body_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw InputError("generator must be an object with a \"type\"");
    std::string type = j["type"].get<std::string>();
    if (type == "disk") {
        if (!j.contains("radius") || !j["radius"].is_number())
            throw InputError("disk generator needs a numeric \"radius\"");
        Point2 c{0, 0};
        if (j.contains("center")) c = point_from_json(j["center"]);
        return ConvexBody::disk(j["radius"].get<double>(), c);
    }
    if (type == "polygon") {
        if (!j.contains("vertices") || !j["vertices"].is_array())
            throw InputError("polygon generator needs \"vertices\"");
        std::vector<Point2> v;
        for (const json& p : j["vertices"]) v.push_back(point_from_json(p));
        return ConvexBody::polygon(std::move(v));
    }
    throw InputError("unknown generator type \"" + type + "\"");
}

inline json instance_to_json(const ColoredInstance& inst) {
    json j;
    j["generator"] = body_to_json(inst.generator);
    json fams = json::array();
    for (const Family& f : inst.families) {
        json fj;
        fj["color"] = f.color;
        json ts = json::array();
        for (Point2 t : f.translates) ts.push_back(point_to_json(t));
        fj["translates"] = ts;
        fams.push_back(fj);
    }
    j["families"] = fams;
    return j;
}

inline ColoredInstance instance_from_json(const json& j) {
    if (!j.is_object() || !j.contains("generator") || !j.contains("families"))
        throw InputError("instance needs \"generator\" and \"families\"");
    ColoredInstance inst;
    inst.generator = body_from_json(j["generator"]);
    if (!j["families"].is_array()) throw InputError("\"families\" must be an array");
    for (const json& fj : j["families"]) {
        Family f;
        if (!fj.contains("color") || !fj["color"].is_number_integer())
            throw InputError("family needs an integer \"color\"");
        f.color = fj["color"].get<int>();
        if (!fj.contains("translates") || !fj["translates"].is_array())
            throw InputError("family needs \"translates\"");
        for (const json& t : fj["translates"]) f.translates.push_back(point_from_json(t));
        inst.families.push_back(std::move(f));
    }
    inst.validate_shape();
    return inst;
}

inline json certificate_to_json(const PiercingCertificate& cert) {
    json j;
    j["method"] = cert.method;
    j["family_index"] = cert.family_index;
    json pts = json::array();
    for (Point2 p : cert.points) pts.push_back(point_to_json(p));
    j["points"] = pts;
    json w = json::object();
    for (auto& [k, v] : cert.witnesses) w[std::to_string(k)] = v;
    j["witnesses"] = w;
    return j;
}

inline PiercingCertificate certificate_from_json(const json& j) {
    if (!j.is_object() || !j.contains("method") || !j.contains("family_index") ||
        !j.contains("points") || !j.contains("witnesses"))
        throw InputError("certificate needs method, family_index, points, witnesses");
    PiercingCertificate c;
    c.method = j["method"].get<std::string>();
    c.family_index = j["family_index"].get<int>();
    for (const json& p : j["points"]) c.points.push_back(point_from_json(p));
    for (auto it = j["witnesses"].begin(); it != j["witnesses"].end(); ++it)
        c.witnesses[std::stoi(it.key())] = it.value().get<int>();
    return c;
}

inline json cover_certificate_to_json(const CoverCertificate& cert) {
    json j;
    j["method"] = cert.method;
    j["excluded_index"] = cert.excluded_index;
    json covers = json::array();
    for (const PlacedBody& pb : cert.covers) {
        json cj = body_to_json(pb.body);
        cj["at"] = point_to_json(pb.at);
        covers.push_back(cj);
    }
    j["covers"] = covers;
    json w = json::object();
    for (auto& [k, v] : cert.witnesses)
        w[std::to_string(k.first) + ":" + std::to_string(k.second)] = v;
    j["witnesses"] = w;
    return j;
}

inline CoverCertificate cover_certificate_from_json(const json& j) {
    CoverCertificate c;
    c.method = j.at("method").get<std::string>();
    c.excluded_index = j.at("excluded_index").get<int>();
    for (const json& cj : j.at("covers")) {
        PlacedBody pb{body_from_json(cj), {0, 0}};
        if (cj.contains("at")) pb.at = point_from_json(cj["at"]);
        c.covers.push_back(std::move(pb));
    }
    for (auto it = j.at("witnesses").begin(); it != j.at("witnesses").end(); ++it) {
        std::string key = it.key();
        size_t colon = key.find(':');
        if (colon == std::string::npos) throw InputError("cover witness key must be s:i");
        c.witnesses[{std::stoi(key.substr(0, colon)), std::stoi(key.substr(colon + 1))}] =
            it.value().get<int>();
    }
    return c;
}

inline std::vector<std::vector<Point2>> point_sets_from_json(const json& j) {
    if (!j.is_object() || !j.contains("sets") || !j["sets"].is_array())
        throw InputError("point-set input needs a \"sets\" array");
    std::vector<std::vector<Point2>> sets;
    for (const json& sj : j["sets"]) {
        std::vector<Point2> s;
        for (const json& p : sj) s.push_back(point_from_json(p));
        if (s.empty()) throw InputError("point sets must be non-empty");
        sets.push_back(std::move(s));
    }
    if (sets.size() < 2) throw InputError("need at least two point sets");
    return sets;
}

inline json point_sets_to_json(const std::vector<std::vector<Point2>>& sets) {
    json arr = json::array();
    for (const auto& s : sets) {
        json sj = json::array();
        for (Point2 p : s) sj.push_back(point_to_json(p));
        arr.push_back(sj);
    }
    return json{{"sets", arr}};
}

}  // namespace pierce
