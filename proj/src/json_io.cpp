#include "conedual/json_io.hpp"

namespace conedual {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

}  // namespace

json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    bad("expected rational as string or integer");
}

json extended_to_json(const std::optional<Rational>& q) {
    return q ? rational_to_json(*q) : json("inf");
}

json vector_to_json(const RatVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rational_to_json(x));
    return a;
}

RatVector vector_from_json(const json& j) {
    if (!j.is_array()) bad("expected array of rationals");
    RatVector v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

namespace {

json matrix_to_json(const RatMatrix& m) {
    json a = json::array();
    for (const auto& row : m) a.push_back(vector_to_json(row));
    return a;
}

RatMatrix matrix_from_json(const json& j, std::size_t width, const char* what) {
    if (!j.is_array()) bad(std::string("expected array for ") + what);
    RatMatrix m;
    for (const auto& row : j) {
        m.push_back(vector_from_json(row));
        if (m.back().size() != width) bad(std::string("wrong row length in ") + what);
    }
    return m;
}

}  // namespace

json polyhedron_to_json(const Polyhedron& p) {
    json j;
    j["dim"] = p.dim();
    j["h"] = matrix_to_json(p.h().rows);
    j["v"] = {{"vertices", matrix_to_json(p.v().vertices)},
              {"rays", matrix_to_json(p.v().rays)}};
    return j;
}

Polyhedron polyhedron_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
        bad("polyhedron needs an integer \"dim\"");
    const int dim = j["dim"].get<int>();
    if (dim < 1) bad("polyhedron dim must be >= 1");
    if (j.contains("h")) {
        HRep h;
        h.dim = dim;
        h.rows = matrix_from_json(j["h"], static_cast<std::size_t>(dim) + 1, "\"h\"");
        return Polyhedron::from_h(h);
    }
    if (j.contains("v")) {
        const json& v = j["v"];
        if (!v.is_object()) bad("\"v\" must be an object");
        VRep r;
        r.dim = dim;
        if (v.contains("vertices"))
            r.vertices = matrix_from_json(v["vertices"], static_cast<std::size_t>(dim), "vertices");
        if (v.contains("rays"))
            r.rays = matrix_from_json(v["rays"], static_cast<std::size_t>(dim), "rays");
        return Polyhedron::from_v(r);
    }
    bad("polyhedron needs \"h\" or \"v\"");
}

json quadruple_to_json(const Quadruple& q) {
    json j;
    j["dim"] = q.dim();
    j["C"] = polyhedron_to_json(q.C);
    j["D"] = polyhedron_to_json(q.D);
    j["B1"] = polyhedron_to_json(q.B1);
    j["B2"] = polyhedron_to_json(q.B2);
    return j;
}

Quadruple quadruple_from_json(const json& j) {
    if (!j.is_object()) bad("quadruple must be an object");
    for (const char* key : {"C", "D", "B1", "B2"})
        if (!j.contains(key)) bad(std::string("quadruple needs \"") + key + "\"");
    Quadruple q{polyhedron_from_json(j["C"]), polyhedron_from_json(j["D"]),
                polyhedron_from_json(j["B1"]), polyhedron_from_json(j["B2"])};
    const int dim = j.contains("dim") ? j["dim"].get<int>() : q.C.dim();
    if (q.C.dim() != dim || q.D.dim() != dim || q.B1.dim() != dim || q.B2.dim() != dim)
        bad("quadruple sets disagree on dimension");
    return q;
}

json instance_to_json(const DirectSumInstance& inst) {
    json j;
    j["d"] = inst.d;
    j["m"] = inst.m;
    j["p"] = inst.p == PNorm::One ? json(1) : json("inf");
    j["base_ball"] = polyhedron_to_json(inst.base_ball);
    json cones = json::array();
    for (const auto& c : inst.cones) cones.push_back(polyhedron_to_json(c));
    j["cones"] = cones;
    return j;
}

DirectSumInstance instance_from_json(const json& j) {
    if (!j.is_object()) bad("instance must be an object");
    for (const char* key : {"d", "m", "p", "base_ball", "cones"})
        if (!j.contains(key)) bad(std::string("instance needs \"") + key + "\"");
    DirectSumInstance inst;
    inst.d = j["d"].get<int>();
    inst.m = j["m"].get<int>();
    const json& p = j["p"];
    if (p.is_number_integer() && p.get<int>() == 1)
        inst.p = PNorm::One;
    else if (p.is_string() && (p.get<std::string>() == "inf" || p.get<std::string>() == "infinity"))
        inst.p = PNorm::Infinity;
    else
        bad("instance \"p\" must be 1 or \"inf\"");
    inst.base_ball = polyhedron_from_json(j["base_ball"]);
    for (const auto& c : j["cones"]) inst.cones.push_back(polyhedron_from_json(c));
    validate_instance(inst);
    return inst;
}

Property property_from_string(const std::string& s) {
    if (s == "normality" || s == "normal") return Property::Normality;
    if (s == "additivity" || s == "additive") return Property::Additivity;
    if (s == "conormality" || s == "conormal") return Property::Conormality;
    if (s == "coadditivity" || s == "coadditive") return Property::Coadditivity;
    bad("unknown property '" + s + "'");
}

std::string property_to_string(Property prop) {
    switch (prop) {
        case Property::Normality:
            return "normality";
        case Property::Additivity:
            return "additivity";
        case Property::Conormality:
            return "conormality";
        case Property::Coadditivity:
            return "coadditivity";
    }
    throw std::logic_error("property_to_string: bad enum");
}

std::string dump_canonical(const json& j) {
    // nlohmann::json objects already iterate in sorted key order.
    return j.dump();
}

}  // namespace conedual
