#pragma once

// JSON readers and writers for the data types. Exact values (integers and
// "p/q" rationals) are written as strings; readers also take JSON integers.

#include <json.hpp>

#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric_alpha/exact.hpp"
#include "toric_alpha/extended.hpp"
#include "toric_alpha/polytope.hpp"
#include "toric_alpha/diophantine.hpp"
#include "toric_alpha/rank1.hpp"
#include "toric_alpha/toric.hpp"

namespace toric_alpha::io {

using json = nlohmann::ordered_json;

class MalformedInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline json toJson(const Rational& r) { return toString(r); }

inline json toJson(const RationalOrInfinity& r) { return r.toString(); }

inline json toJson(const Integer& z) { return toString(z); }

template <typename T>
json toJson(const std::vector<T>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(toJson(x));
    return out;
}

inline Rational readRational(const json& j) {
    try {
        if (j.is_string()) return parseRational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    } catch (const std::exception& e) {
        throw MalformedInput(std::string("bad rational: ") + e.what());
    }
    throw MalformedInput("expected an exact rational (string or integer), got " + j.dump());
}

inline Integer readInteger(const json& j) {
    Rational r = readRational(j);
    if (r.get_den() != 1) throw MalformedInput("expected an integer, got " + j.dump());
    return r.get_num();
}

inline QVector readQVector(const json& j) {
    if (!j.is_array()) throw MalformedInput("expected an array, got " + j.dump());
    QVector v;
    for (const auto& x : j) v.push_back(readRational(x));
    return v;
}

inline LatticeVector readLatticeVector(const json& j) {
    if (!j.is_array()) throw MalformedInput("expected an array, got " + j.dump());
    LatticeVector v;
    for (const auto& x : j) v.push_back(readInteger(x));
    return v;
}

template <typename T, typename F>
std::vector<T> readArray(const json& j, F&& one) {
    if (!j.is_array()) throw MalformedInput("expected an array, got " + j.dump());
    std::vector<T> out;
    for (const auto& x : j) out.push_back(one(x));
    return out;
}

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline std::size_t readSize(const json& j) {
    Integer z = readInteger(j);
    if (z < 0 || !z.fits_ulong_p()) throw MalformedInput("expected a non-negative size, got " + j.dump());
    return z.get_ui();
}

// Polytope: {"dim", "halfspaces": [{"normal", "offset"}], "vertices"}.
// The reader uses the vertices when present and nonempty.

inline json toJson(const Polytope& body) {
    json hs = json::array();
    for (const auto& h : body.facets()) hs.push_back({{"normal", toJson(h.normal)}, {"offset", toJson(h.offset)}});
    return {{"dim", body.dim()}, {"halfspaces", hs}, {"vertices", toJson(body.vertices())}};
}

inline Polytope readPolytope(const json& j) {
    std::size_t dim = readSize(field(j, "dim"));
    if (j.contains("vertices") && !j.at("vertices").empty()) {
        auto pts = readArray<QVector>(j.at("vertices"), readQVector);
        for (const auto& p : pts)
            if (p.size() != dim) throw MalformedInput("vertex of the wrong dimension");
        return Polytope::fromVertices(dim, std::move(pts));
    }
    std::vector<HalfSpace> hs;
    for (const auto& h : field(j, "halfspaces")) {
        QVector n = readQVector(field(h, "normal"));
        if (n.size() != dim) throw MalformedInput("normal of the wrong dimension");
        hs.push_back(HalfSpace::canonical(n, readRational(field(h, "offset"))));
    }
    return Polytope::fromHalfSpaces(dim, std::move(hs));
}

inline json toJson(const ToricLogPair& p) {
    json out{{"dim", p.dim}, {"rays", toJson(p.rays)}, {"a", toJson(p.a)}};
    if (p.maxCones) out["maxCones"] = *p.maxCones;
    return out;
}

inline ToricLogPair readPair(const json& j) {
    ToricLogPair p;
    p.dim = readSize(field(j, "dim"));
    p.rays = readArray<LatticeVector>(field(j, "rays"), readLatticeVector);
    p.a = readQVector(field(j, "a"));
    if (p.a.size() != p.rays.size()) throw MalformedInput("\"a\" and \"rays\" differ in length");
    for (const auto& e : p.rays)
        if (e.size() != p.dim) throw MalformedInput("ray of the wrong dimension");
    if (j.contains("maxCones")) {
        p.maxCones = readArray<Cone>(j.at("maxCones"), [&](const json& c) {
            Cone cone = readArray<std::size_t>(c, readSize);
            for (auto i : cone)
                if (i >= p.rays.size()) throw MalformedInput("cone index out of range");
            return cone;
        });
    }
    return p;
}

inline json toJson(const InvariantDivisor& L) { return {{"l", toJson(L.l)}}; }

inline InvariantDivisor readDivisor(const json& j) { return {readQVector(field(j, "l"))}; }

inline json toJson(const RankOneFano& f) { return {{"x", toJson(f.x)}, {"a", toJson(f.a)}}; }

inline RankOneFano readRankOne(const json& j) { return fromBarycentric(readQVector(field(j, "x")), readQVector(field(j, "a"))); }

inline json toJson(const LHNInstance& inst) { return {{"q", inst.q}, {"c", toJson(inst.c)}, {"x", toJson(inst.x)}}; }

inline LHNInstance readLHN(const json& j) {
    LHNInstance inst;
    inst.q = j.contains("q") ? readSize(j.at("q")) : 1;
    inst.c = readQVector(field(j, "c"));
    inst.x = readQVector(field(j, "x"));
    return inst;
}

inline json toJson(const Solution& s) {
    json out{{"z", toJson(s.z)}, {"lhs", toJson(s.lhs)}, {"x", toJson(s.x)}, {"heuristic", s.heuristic}};
    if (s.reductionIndex) {
        out["reductionIndex"] = *s.reductionIndex;
        out["reducedX"] = toJson(s.reducedX);
    }
    out["searchBound"] = toJson(s.searchBound);
    return out;
}

inline json parseText(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw MalformedInput(std::string("invalid JSON: ") + e.what());
    }
}

inline bool looksRational(const std::string& s) {
    static const std::regex pattern(R"(-?[0-9]+(/[0-9]+)?)");
    return std::regex_match(s, pattern);
}

/// Adds "<key>Approx" beside each exact rational string field, recursively.
/// Exact fields are kept.
inline void addApprox(json& j) {
    if (j.is_array()) {
        for (auto& x : j) addApprox(x);
        return;
    }
    if (!j.is_object()) return;
    json extra = json::object();
    for (auto& [key, value] : j.items()) {
        if (value.is_string() && looksRational(value.get<std::string>()))
            extra[key + "Approx"] = parseRational(value.get<std::string>()).get_d();
        else if (value.is_array() && !value.empty() &&
                 std::all_of(value.begin(), value.end(),
                             [](const json& x) { return x.is_string() && looksRational(x.get<std::string>()); })) {
            json approx = json::array();
            for (const auto& x : value) approx.push_back(parseRational(x.get<std::string>()).get_d());
            extra[key + "Approx"] = approx;
        } else {
            addApprox(value);
        }
    }
    for (auto& [key, value] : extra.items()) j[key] = value;
}

}  // namespace toric_alpha::io
