#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumcard/dplus2.hpp"
#include "sumcard/dplus3.hpp"
#include "sumcard/error.hpp"
#include "sumcard/geometry.hpp"

namespace sumcard {

using Json = nlohmann::ordered_json;

struct RoleAnnotations {
    std::optional<int> origin;
    std::optional<int> w;
    std::optional<std::vector<int>> vertices;
};

struct ParsedInstance {
    PointSet set;
    std::optional<RoleAnnotations> roles;
};

inline ParsedInstance parse_instance_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        raise(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("d") || !j.contains("points"))
            raise(ErrorKind::Parse, "instance file needs fields 'd' and 'points'");
        int dim = j.at("d").get<int>();
        std::vector<Point> points;
        for (const auto& row : j.at("points")) points.push_back(row.get<Point>());
        ParsedInstance out{make_point_set(dim, std::move(points)), std::nullopt};
        if (j.contains("roles")) {
            const Json& r = j.at("roles");
            RoleAnnotations roles;
            if (r.contains("origin")) roles.origin = r.at("origin").get<int>();
            if (r.contains("w")) roles.w = r.at("w").get<int>();
            if (r.contains("vertices")) roles.vertices = r.at("vertices").get<std::vector<int>>();
            const int n = static_cast<int>(out.set.points.size());
            auto check_index = [&](int i) {
                if (i < 0 || i >= n) raise(ErrorKind::Parse, "role index out of range");
            };
            if (roles.origin) check_index(*roles.origin);
            if (roles.w) check_index(*roles.w);
            if (roles.vertices)
                for (int i : *roles.vertices) check_index(i);
            out.roles = roles;
        }
        return out;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        raise(ErrorKind::Parse, std::string("malformed instance file: ") + e.what());
    }
}

inline ParsedInstance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorKind::Parse, "cannot open instance file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance_json(buf.str());
}

// Role annotations are advisory; when present they must agree with the
// computed hull classification.
inline void check_roles(const ParsedInstance& parsed, const HullClassification& cls) {
    if (!parsed.roles) return;
    const RoleAnnotations& roles = *parsed.roles;
    auto is_vertex = [&](int i) {
        return std::find(cls.vertex_indices.begin(), cls.vertex_indices.end(), i) !=
               cls.vertex_indices.end();
    };
    if (roles.vertices) {
        std::vector<int> sorted = *roles.vertices;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != cls.vertex_indices)
            raise(ErrorKind::Hypothesis, "role annotation 'vertices' disagrees with the hull");
    }
    if (roles.origin) {
        const Point& p = parsed.set.points[*roles.origin];
        if (p != Point(parsed.set.dim, 0))
            raise(ErrorKind::Hypothesis, "role annotation 'origin' is not the zero vector");
        if (is_vertex(*roles.origin))
            raise(ErrorKind::Hypothesis, "role annotation 'origin' marks a hull vertex");
    }
    if (roles.w && is_vertex(*roles.w))
        raise(ErrorKind::Hypothesis, "role annotation 'w' marks a hull vertex");
}

enum class InputClass { D2, D3Simplicial, Unsupported };

inline InputClass classify_input(const PointSet& s, const HullClassification& cls) {
    if (static_cast<int>(s.points.size()) == s.dim + 2) return InputClass::D2;
    if (static_cast<int>(s.points.size()) == s.dim + 3 && cls.is_simplex)
        return InputClass::D3Simplicial;
    return InputClass::Unsupported;
}

inline std::string classification_name(InputClass c, const HullClassification& cls) {
    switch (c) {
        case InputClass::D2: return cls.is_simplex ? "d+2, simplex" : "d+2, non-simplex";
        case InputClass::D3Simplicial: return "d+3-simplicial";
        case InputClass::Unsupported: return "unsupported";
    }
    return "unsupported";
}

inline std::string int_str(const Int& v) { return v.str(); }

inline Json json_int(const Int& v) { return Json(v.str()); }

inline Json json_int_vector(const std::vector<Int>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

inline Json json_rational_vector(const RationalVector& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(rational_str(x));
    return arr;
}

inline Json json_point(const Point& p) {
    Json arr = Json::array();
    for (std::int64_t c : p) arr.push_back(c);
    return arr;
}

inline Json json_points(const std::vector<Point>& pts) {
    Json arr = Json::array();
    for (const auto& p : pts) arr.push_back(json_point(p));
    return arr;
}

inline Json instance_echo(const PointSet& s) {
    Json j;
    j["d"] = s.dim;
    j["points"] = json_points(s.points);
    return j;
}

inline Json radon_json(const RadonData& radon) {
    Json j;
    j["lambda"] = json_int_vector(radon.lambda);
    j["x1"] = radon.x1;
    j["x2"] = radon.x2;
    j["zero_set"] = radon.zero_set;
    j["r"] = json_int(radon.r);
    return j;
}

inline Json invariants_json(const LatticeInvariants& inv) {
    Json j;
    j["n_lambda"] = json_int(inv.n_lambda);
    j["mu"] = json_rational_vector(inv.mu);
    j["q"] = json_int_vector(inv.q);
    j["lcc"] = json_int(inv.lcc);
    j["n_prime"] = json_int(inv.n_prime);
    j["lambda_ints"] = json_int_vector(inv.lambda_ints);
    j["origin_on_boundary"] = inv.origin_on_boundary;
    return j;
}

}  // namespace sumcard
