#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "diskcolor/coloring.hpp"
#include "diskcolor/ranges.hpp"
#include "diskcolor/realization.hpp"

namespace diskcolor {

// Rationals serialize as "num/den" strings so round-trips are bit-exact.
inline nlohmann::json to_json(const Rational& q) { return to_fraction_string(q); }

inline Rational rational_from_json(const nlohmann::json& j) {
    if (!j.is_string()) throw Error("json: expected a rational string");
    return parse_rational(j.get<std::string>());
}

inline nlohmann::json to_json(const Point& p) {
    return nlohmann::json::array({to_json(p.x), to_json(p.y)});
}

inline Point point_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw Error("json: expected a point [x, y]");
    return Point(rational_from_json(j[0]), rational_from_json(j[1]));
}

inline nlohmann::json to_json(const Circle& c) {
    return {{"center", to_json(c.center)},
            {"radius_sq", to_json(c.radius_sq)},
            {"base_point", to_json(c.base_point)}};
}

inline Circle circle_from_json(const nlohmann::json& j) {
    return Circle(point_from_json(j.at("center")), rational_from_json(j.at("radius_sq")),
                  point_from_json(j.at("base_point")));
}

inline nlohmann::json to_json(const Hypergraph& h) {
    nlohmann::json j{{"n", h.n}, {"edges", h.edges}};
    j["star"] = h.star ? nlohmann::json(*h.star) : nlohmann::json(nullptr);
    return j;
}

inline Hypergraph hypergraph_from_json(const nlohmann::json& j) {
    Hypergraph h;
    h.n = j.at("n").get<int>();
    for (const auto& e : j.at("edges")) h.add_edge(e.get<std::vector<int>>());
    if (j.contains("star") && !j.at("star").is_null()) h.star = j.at("star").get<int>();
    return h;
}

inline nlohmann::json to_json(const TaggedDisk& d) {
    nlohmann::json j{{"circle", to_json(d.circle)}, {"edge", d.edge}};
    if (d.exposed) j["exposed"] = to_json(*d.exposed);
    return j;
}

inline TaggedDisk tagged_disk_from_json(const nlohmann::json& j) {
    TaggedDisk d(circle_from_json(j.at("circle")), j.at("edge").get<std::vector<int>>());
    if (j.contains("exposed")) d.exposed = point_from_json(j.at("exposed"));
    return d;
}

inline nlohmann::json to_json(const Realization& r) {
    nlohmann::json j;
    j["points"] = nlohmann::json::array();
    for (const auto& p : r.points) j["points"].push_back(to_json(p));
    j["anchor"] = to_json(r.anchor_circle);
    j["gamma"] = to_json(r.gamma);
    j["stabbed"] = r.stabbed;
    j["target"] = to_json(r.target);
    j["sibling_disks"] = nlohmann::json::array();
    for (const auto& d : r.sibling_disks) j["sibling_disks"].push_back(to_json(d));
    j["descendent_disks"] = nlohmann::json::array();
    for (const auto& d : r.descendent_disks) j["descendent_disks"].push_back(to_json(d));
    if (!r.prescribed.empty()) {
        j["prescribed"] = nlohmann::json::array();
        for (const auto& p : r.prescribed) j["prescribed"].push_back(to_json(p));
    }
    return j;
}

inline Realization realization_from_json(const nlohmann::json& j) {
    Realization r(circle_from_json(j.at("anchor")), rational_from_json(j.at("gamma")),
                  hypergraph_from_json(j.at("target")));
    for (const auto& p : j.at("points")) r.points.push_back(point_from_json(p));
    r.stabbed = j.value("stabbed", false);
    for (const auto& d : j.at("sibling_disks")) r.sibling_disks.push_back(tagged_disk_from_json(d));
    for (const auto& d : j.at("descendent_disks"))
        r.descendent_disks.push_back(tagged_disk_from_json(d));
    if (j.contains("prescribed"))
        for (const auto& p : j.at("prescribed")) r.prescribed.push_back(point_from_json(p));
    return r;
}

inline nlohmann::json to_json(const Coloring& c) {
    return {{"k", c.k}, {"colors", c.colors}};
}

inline Coloring coloring_from_json(const nlohmann::json& j) {
    return Coloring{j.at("k").get<int>(), j.at("colors").get<std::vector<int>>()};
}

inline nlohmann::json to_json(const RangeFamily& f) {
    nlohmann::json j;
    j["ground"] = nlohmann::json::array();
    for (const auto& p : f.ground) j["ground"].push_back(to_json(p));
    j["ranges"] = f.ranges;
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : f.witnesses)
        j["witnesses"].push_back(
            {{"center", to_json(w.center)}, {"radius_sq", to_json(w.radius_sq)}});
    return j;
}

// Points file: {"points": [["x","y"],...]}, optionally with an "origin".
inline std::vector<Point> points_from_json(const nlohmann::json& j) {
    std::vector<Point> pts;
    for (const auto& p : j.at("points")) pts.push_back(point_from_json(p));
    return pts;
}

inline nlohmann::json points_to_json(const std::vector<Point>& pts,
                                     const Point* origin = nullptr) {
    nlohmann::json j;
    j["points"] = nlohmann::json::array();
    for (const auto& p : pts) j["points"].push_back(to_json(p));
    if (origin) j["origin"] = to_json(*origin);
    return j;
}

inline nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

inline void save_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace diskcolor
