#include "polycal/json_io.hpp"

#include <sstream>

namespace polycal::io {

namespace {

[[noreturn]] void syntax_error(const std::string& bytes, size_t byte_pos, const std::string& what) {
    int line = 1, col = 1;
    for (size_t i = 0; i < byte_pos && i < bytes.size(); ++i) {
        if (bytes[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    throw ParseError(what, line, col);
}

void require_keys(const Json& j, const std::vector<std::string>& keys, const std::string& where) {
    if (!j.is_object()) throw MalformedInstanceError(where + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const auto& k : keys)
            if (it.key() == k) known = true;
        if (!known) throw MalformedInstanceError(where + ": unknown field \"" + it.key() + "\"");
    }
    for (const auto& k : keys)
        if (!j.contains(k)) throw MalformedInstanceError(where + ": missing field \"" + k + "\"");
}

int int_from_json(const Json& j, const std::string& field) {
    if (!j.is_number_integer() || j.get<long>() < 0)
        throw MalformedInstanceError(field + ": expected a nonnegative integer");
    return static_cast<int>(j.get<long>());
}

} // namespace

Json rat_to_json(const Rat& r) { return Json(rat_to_string(r)); }

Rat rat_from_json(const Json& j, const std::string& field) {
    if (!j.is_string()) throw MalformedInstanceError(field + ": rationals must be strings");
    try {
        return rat_from_string(j.get<std::string>());
    } catch (const MalformedInstanceError& e) {
        throw MalformedInstanceError(field + ": " + e.what());
    }
}

Json vec_to_json(const RatVec& v) {
    Json a = Json::array();
    for (int i = 0; i < v.dim(); ++i) a.push_back(rat_to_json(v[i]));
    return a;
}

RatVec vec_from_json(const Json& j, const std::string& field) {
    if (!j.is_array()) throw MalformedInstanceError(field + ": expected an array");
    RatVec v(static_cast<int>(j.size()));
    for (size_t i = 0; i < j.size(); ++i) v[static_cast<int>(i)] = rat_from_json(j[i], field);
    return v;
}

Json hpoly_to_json(const HPoly& P) {
    Json j;
    j["type"] = "hpoly";
    j["dim"] = P.dim();
    Json ineq = Json::array();
    for (const auto& r : P.ineqs()) ineq.push_back(Json{{"a", vec_to_json(r.a)}, {"b", rat_to_json(r.b)}});
    Json eq = Json::array();
    for (const auto& r : P.eqs()) eq.push_back(Json{{"c", vec_to_json(r.a)}, {"d", rat_to_json(r.b)}});
    j["ineq"] = std::move(ineq);
    j["eq"] = std::move(eq);
    return j;
}

HPoly hpoly_from_json(const Json& j) {
    require_keys(j, {"type", "dim", "ineq", "eq"}, "hpoly");
    if (j["type"] != "hpoly") throw MalformedInstanceError("hpoly: wrong type tag");
    int dim = int_from_json(j["dim"], "hpoly.dim");
    std::vector<LinRow> ineqs, eqs;
    if (!j["ineq"].is_array()) throw MalformedInstanceError("hpoly.ineq: expected an array");
    for (const auto& row : j["ineq"]) {
        require_keys(row, {"a", "b"}, "hpoly.ineq row");
        ineqs.push_back(LinRow{vec_from_json(row["a"], "hpoly.ineq.a"), rat_from_json(row["b"], "hpoly.ineq.b")});
    }
    if (!j["eq"].is_array()) throw MalformedInstanceError("hpoly.eq: expected an array");
    for (const auto& row : j["eq"]) {
        require_keys(row, {"c", "d"}, "hpoly.eq row");
        eqs.push_back(LinRow{vec_from_json(row["c"], "hpoly.eq.c"), rat_from_json(row["d"], "hpoly.eq.d")});
    }
    try {
        return HPoly(dim, std::move(ineqs), std::move(eqs));
    } catch (const DimensionMismatchError& e) {
        throw MalformedInstanceError(std::string("hpoly: ") + e.what());
    }
}

Json maxaffine_to_json(const MaxAffineFn& f) {
    Json j;
    j["type"] = "maxaffine";
    j["n"] = f.arg_dim();
    Json pieces = Json::array();
    for (const auto& p : f.pieces())
        pieces.push_back(Json{{"a", vec_to_json(p.a)}, {"b", rat_to_json(p.b)}});
    j["pieces"] = std::move(pieces);
    j["dom"] = hpoly_to_json(f.dom());
    return j;
}

MaxAffineFn maxaffine_from_json(const Json& j) {
    require_keys(j, {"type", "n", "pieces", "dom"}, "maxaffine");
    if (j["type"] != "maxaffine") throw MalformedInstanceError("maxaffine: wrong type tag");
    int n = int_from_json(j["n"], "maxaffine.n");
    std::vector<AffinePiece> pieces;
    if (!j["pieces"].is_array()) throw MalformedInstanceError("maxaffine.pieces: expected an array");
    for (const auto& p : j["pieces"]) {
        require_keys(p, {"a", "b"}, "maxaffine piece");
        pieces.push_back(AffinePiece{vec_from_json(p["a"], "maxaffine.pieces.a"),
                                     rat_from_json(p["b"], "maxaffine.pieces.b")});
    }
    try {
        return MaxAffineFn(n, std::move(pieces), hpoly_from_json(j["dom"]));
    } catch (const Error& e) {
        throw MalformedInstanceError(std::string("maxaffine: ") + e.what());
    }
}

Json svmap_to_json(const SVMap& F) {
    Json j;
    j["type"] = "svmap";
    j["n"] = F.in_dim();
    j["m"] = F.out_dim();
    j["graph"] = hpoly_to_json(F.graph());
    return j;
}

SVMap svmap_from_json(const Json& j) {
    require_keys(j, {"type", "n", "m", "graph"}, "svmap");
    if (j["type"] != "svmap") throw MalformedInstanceError("svmap: wrong type tag");
    int n = int_from_json(j["n"], "svmap.n");
    int m = int_from_json(j["m"], "svmap.m");
    try {
        return SVMap(n, m, hpoly_from_json(j["graph"]));
    } catch (const Error& e) {
        throw MalformedInstanceError(std::string("svmap: ") + e.what());
    }
}

Json cone_to_json(const ConeGen& C) {
    Json j;
    j["type"] = "cone";
    j["dim"] = C.dim;
    Json gens = Json::array();
    for (const auto& g : C.generators) gens.push_back(vec_to_json(g));
    Json lin = Json::array();
    for (const auto& l : C.lineality) lin.push_back(vec_to_json(l));
    j["generators"] = std::move(gens);
    j["lineality"] = std::move(lin);
    return j;
}

namespace {

Json instance_to_json(const InstanceDoc& doc);

Json check_to_json(const CheckDoc& c) {
    Json j;
    j["type"] = "check";
    j["theorem"] = c.theorem;
    Json insts = Json::array();
    for (const auto& inst : c.instances) insts.push_back(instance_to_json(inst));
    j["instances"] = std::move(insts);
    Json pts = Json::array();
    for (const auto& p : c.points) pts.push_back(vec_to_json(p));
    j["points"] = std::move(pts);
    Json params = Json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    j["params"] = std::move(params);
    return j;
}

Json instance_to_json(const InstanceDoc& doc) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, HPoly>) return hpoly_to_json(x);
            else if constexpr (std::is_same_v<T, MaxAffineFn>) return maxaffine_to_json(x);
            else if constexpr (std::is_same_v<T, SVMap>) return svmap_to_json(x);
            else return check_to_json(x);
        },
        doc.payload);
}

InstanceDoc instance_from_json(const Json& j);

CheckDoc check_from_json(const Json& j) {
    require_keys(j, {"type", "theorem", "instances", "points", "params"}, "check");
    CheckDoc c;
    if (!j["theorem"].is_string()) throw MalformedInstanceError("check.theorem: expected a string");
    c.theorem = j["theorem"].get<std::string>();
    if (!j["instances"].is_array()) throw MalformedInstanceError("check.instances: expected an array");
    for (const auto& inst : j["instances"]) c.instances.push_back(instance_from_json(inst));
    if (!j["points"].is_array()) throw MalformedInstanceError("check.points: expected an array");
    for (const auto& p : j["points"]) c.points.push_back(vec_from_json(p, "check.points"));
    if (!j["params"].is_object()) throw MalformedInstanceError("check.params: expected an object");
    for (auto it = j["params"].begin(); it != j["params"].end(); ++it) {
        if (!it.value().is_string())
            throw MalformedInstanceError("check.params." + it.key() + ": expected a string");
        c.params[it.key()] = it.value().get<std::string>();
    }
    return c;
}

InstanceDoc instance_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw MalformedInstanceError("document needs a \"type\" string field");
    std::string type = j["type"].get<std::string>();
    if (type == "hpoly") return InstanceDoc{hpoly_from_json(j)};
    if (type == "maxaffine") return InstanceDoc{maxaffine_from_json(j)};
    if (type == "svmap") return InstanceDoc{svmap_from_json(j)};
    if (type == "check") return InstanceDoc{check_from_json(j)};
    throw MalformedInstanceError("unknown document type \"" + type + "\"");
}

} // namespace

InstanceDoc parse_instance(const std::string& bytes) {
    Json j;
    try {
        j = Json::parse(bytes);
    } catch (const Json::parse_error& e) {
        syntax_error(bytes, e.byte, e.what());
    }
    return instance_from_json(j);
}

std::string serialize_instance(const InstanceDoc& doc) { return instance_to_json(doc).dump(); }

RatVec vec_from_csv(const std::string& csv) {
    std::vector<Rat> vals;
    std::string tok;
    std::istringstream in(csv);
    while (std::getline(in, tok, ',')) vals.push_back(rat_from_string(tok));
    if (!csv.empty() && csv.back() == ',') throw MalformedInstanceError("trailing comma in point");
    return RatVec(std::move(vals));
}

std::string digest(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace polycal::io
