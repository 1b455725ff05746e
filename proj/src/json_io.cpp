#include "cyclotomo/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <unistd.h>

using nlohmann::json;

namespace cyclotomo {

namespace {

constexpr long kMaxOrder = 10000;  // guards table construction on hostile input

const json& member(const json& j, const char* key, const char* what) {
    if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string(what) + ": missing member \"" + key + "\"");
    return *it;
}

/// Rejects unknown members so malformed inputs fail loudly instead of being
/// silently ignored.
void only_keys(const json& j, std::initializer_list<const char*> allowed, const char* what) {
    if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) { ok = true; break; }
        if (!ok)
            throw ParseError(std::string(what) + ": unexpected member \"" + it.key() + "\"");
    }
}

long get_long(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + ": expected an integer");
    return j.get<long>();
}

std::string get_string(const json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + ": expected a string");
    return j.get<std::string>();
}

/// The exact Rational a CycNum represents, when it is rational (all
/// higher-basis coefficients vanish).
bool rational_of(const CycNum& a, Rational* out) {
    const auto& c = a.coeffs();
    for (size_t i = 1; i < c.size(); ++i)
        if (!c[i].is_zero()) return false;
    *out = c.empty() ? Rational(0) : c[0];
    return true;
}

}  // namespace

json rational_to_json(const Rational& r) {
    return json::array({r.num_string(), r.den_string()});
}

Rational rational_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError("rational: expected [\"num\",\"den\"]");
    std::string num = get_string(j[0], "rational numerator");
    std::string den = get_string(j[1], "rational denominator");
    Rational r;
    try {
        r = Rational::from_string(num + "/" + den);
    } catch (const std::exception& e) {
        throw ParseError(std::string("rational: ") + e.what());
    }
    if (r.num_string() != num || r.den_string() != den)
        throw ParseError("rational: [" + num + "," + den + "] is not in canonical form");
    return r;
}

json cyc_to_json(const CycNum& a) {
    json coeffs = json::array();
    for (const Rational& c : a.coeffs()) coeffs.push_back(rational_to_json(c));
    return json{{"order", a.order()}, {"coeffs", std::move(coeffs)}};
}

CycNum cyc_from_json(const json& j) {
    only_keys(j, {"order", "coeffs"}, "cyclotomic number");
    long order = get_long(member(j, "order", "cyclotomic number"), "order");
    if (order < 1) throw ParseError("cyclotomic number: order must be >= 1");
    if (order > kMaxOrder) throw ParseError("cyclotomic number: order too large");
    const json& coeffs = member(j, "coeffs", "cyclotomic number");
    if (!coeffs.is_array())
        throw ParseError("cyclotomic number: coeffs must be an array");
    if (static_cast<long>(coeffs.size()) != euler_phi(order))
        throw ParseError("cyclotomic number: coeffs must have length phi(order)");
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const json& e : coeffs) c.push_back(rational_from_json(e));
    return CycNum(order, std::move(c));
}

json slope_to_json(const Slope& s) {
    if (s.is_infinite()) return json{{"slope", "inf"}};
    Rational r;
    if (rational_of(s.value(), &r)) return json{{"slope", rational_to_json(r)}};
    return json{{"slope", cyc_to_json(s.value())}};
}

Slope slope_from_json(const json& j) {
    only_keys(j, {"slope"}, "slope");
    const json& v = member(j, "slope", "slope");
    if (v.is_string()) {
        if (v.get<std::string>() != "inf")
            throw ParseError("slope: the only string form is \"inf\"");
        return Slope::infinity();
    }
    if (v.is_array()) return Slope(CycNum(rational_from_json(v)));
    CycNum a = cyc_from_json(v);
    if (!is_real(a)) throw ParseError("slope: value must be real");
    return Slope(std::move(a));
}

Direction direction_from_json(const json& j, long n) {
    if (!j.is_object()) throw ParseError("direction: expected an object");
    const bool has_vector = j.contains("vector");
    const bool has_slope = j.contains("slope");
    if (!has_vector && !has_slope)
        throw ParseError("direction: one of \"vector\" or \"slope\" required");
    if (has_vector) {
        // Full output form carries the slope and a float angle as well; the
        // slope must then agree with the vector.
        only_keys(j, {"vector", "slope", "angle_float"}, "direction");
        CycNum v = cyc_from_json(j["vector"]);
        if (n % v.order() != 0)
            throw ParseError("direction: vector of order " + std::to_string(v.order()) +
                             " does not lie in Q(zeta_" + std::to_string(n) + ")");
        Direction d = Direction::from_vector(std::move(v));
        if (has_slope && !(slope_from_json(json{{"slope", j["slope"]}}) == d.slope))
            throw ParseError("direction: slope does not match the vector");
        return d;
    }
    only_keys(j, {"slope"}, "direction");
    return Direction::from_slope(slope_from_json(j), n);
}

json direction_to_json(const Direction& d) {
    json j = slope_to_json(d.slope);
    j["vector"] = cyc_to_json(d.vector);
    double re = cyc_to_double_re(d.vector), im = cyc_to_double_im(d.vector);
    double angle = std::atan2(im, re);
    if (angle < 0) angle += M_PI;
    if (angle >= M_PI) angle -= M_PI;
    j["angle_float"] = angle;
    return j;
}

std::vector<Direction> directions_from_json(const json& j, long* n_out) {
    only_keys(j, {"n", "directions"}, "directions file");
    long n = get_long(member(j, "n", "directions file"), "n");
    if (n < 3) throw ParseError("directions file: n must be >= 3");
    if (n > kMaxOrder) throw ParseError("directions file: n too large");
    const json& arr = member(j, "directions", "directions file");
    if (!arr.is_array()) throw ParseError("directions file: directions must be an array");
    std::vector<Direction> ds;
    ds.reserve(arr.size());
    for (const json& e : arr) ds.push_back(direction_from_json(e, n));
    if (n_out != nullptr) *n_out = n;
    return ds;
}

json directions_to_json(long n, const std::vector<Direction>& ds) {
    json arr = json::array();
    for (const Direction& d : ds) arr.push_back(direction_to_json(d));
    return json{{"n", n}, {"directions", std::move(arr)}};
}

json quadruple_to_json(const QuadrupleIndex& q) {
    return json{{"N", q.N}, {"k", {q.k1, q.k2, q.k3, q.k4}}};
}

QuadrupleIndex quadruple_from_json(const json& j) {
    only_keys(j, {"N", "k"}, "quadruple");
    QuadrupleIndex q;
    q.N = get_long(member(j, "N", "quadruple"), "N");
    const json& k = member(j, "k", "quadruple");
    if (!k.is_array() || k.size() != 4)
        throw ParseError("quadruple: k must be [k1,k2,k3,k4]");
    q.k1 = get_long(k[0], "k1");
    q.k2 = get_long(k[1], "k2");
    q.k3 = get_long(k[2], "k3");
    q.k4 = get_long(k[3], "k4");
    if (!q.valid()) throw ParseError("quadruple: indices violate the ordering constraints");
    return q;
}

json forbidden_to_json(const ForbiddenSet& fs) {
    json values = json::array();
    for (size_t i = 0; i < fs.values.size(); ++i) {
        json quads = json::array();
        for (const QuadrupleIndex& q : fs.provenance[i])
            quads.push_back(json::array({q.k1, q.k2, q.k3, q.k4}));
        values.push_back(json{{"value", cyc_to_json(fs.values[i])},
                              {"approx", cyc_to_double_re(fs.values[i])},
                              {"quadruples", std::move(quads)}});
    }
    return json{{"schema", "forbidden-set"},
                {"n", fs.n},
                {"N", fs.N},
                {"count", fs.values.size()},
                {"values", std::move(values)}};
}

ForbiddenSet forbidden_from_json(const json& j) {
    only_keys(j, {"schema", "n", "N", "count", "values"}, "forbidden set");
    if (get_string(member(j, "schema", "forbidden set"), "schema") != "forbidden-set")
        throw ParseError("forbidden set: wrong schema tag");
    ForbiddenSet fs;
    fs.n = get_long(member(j, "n", "forbidden set"), "n");
    fs.N = get_long(member(j, "N", "forbidden set"), "N");
    const json& values = member(j, "values", "forbidden set");
    if (!values.is_array()) throw ParseError("forbidden set: values must be an array");
    if (member(j, "count", "forbidden set") != json(values.size()))
        throw ParseError("forbidden set: count does not match values");
    for (const json& e : values) {
        only_keys(e, {"value", "approx", "quadruples"}, "forbidden value");
        fs.values.push_back(cyc_from_json(member(e, "value", "forbidden value")));
        const json& quads = member(e, "quadruples", "forbidden value");
        if (!quads.is_array() || quads.empty())
            throw ParseError("forbidden value: quadruples must be a nonempty array");
        std::vector<QuadrupleIndex> prov;
        for (const json& kq : quads) {
            if (!kq.is_array() || kq.size() != 4)
                throw ParseError("forbidden value: quadruple must be [k1,k2,k3,k4]");
            QuadrupleIndex q;
            q.N = fs.N;
            q.k1 = get_long(kq[0], "k1");
            q.k2 = get_long(kq[1], "k2");
            q.k3 = get_long(kq[2], "k3");
            q.k4 = get_long(kq[3], "k4");
            if (!q.valid())
                throw ParseError("forbidden value: quadruple violates the ordering constraints");
            prov.push_back(q);
        }
        fs.provenance.push_back(std::move(prov));
    }
    return fs;
}

namespace {

json float_point_json(const CycNum& z) {
    return json::array({cyc_to_double_re(z), cyc_to_double_im(z)});
}

json point_list_json(const std::vector<CycNum>& pts) {
    json j;
    j["count"] = static_cast<long>(pts.size());
    json exact = json::array(), approx = json::array();
    for (const CycNum& z : pts) {
        exact.push_back(cyc_to_json(z));
        approx.push_back(float_point_json(z));
    }
    j["points"] = std::move(exact);
    j["float_points"] = std::move(approx);
    return j;
}

json directions_array_json(const std::vector<Direction>& U) {
    json a = json::array();
    for (const Direction& d : U) a.push_back(direction_to_json(d));
    return a;
}

std::vector<Direction> directions_array_from_json(const json& j, long n, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
    std::vector<Direction> out;
    for (const json& e : j) out.push_back(direction_from_json(e, n));
    return out;
}

}  // namespace

json scheme_to_json(const CutProjectScheme& s) {
    json j;
    j["n"] = s.n;
    if (s.is_lattice) {
        j["kind"] = "lattice";
        return j;
    }
    if (s.window.kind == Window::Kind::polygon) {
        j["kind"] = "polygon";
        j["preset"] = s.window.preset;
        j["scale"] = rational_to_json(s.window.scale);
        j["center"] = cyc_to_json(s.window.center);
    } else {
        j["kind"] = "disk";
        j["r2"] = rational_to_json(s.window.disk_r2);
        j["center"] = cyc_to_json(s.window.center);
    }
    return j;
}

CutProjectScheme scheme_from_json(const json& j) {
    const std::string kind = get_string(member(j, "kind", "scheme"), "scheme kind");
    const long n = get_long(member(j, "n", "scheme"), "scheme n");
    try {
        if (kind == "lattice") {
            only_keys(j, {"n", "kind"}, "scheme");
            return make_scheme_lattice(n);
        }
        if (kind == "polygon") {
            only_keys(j, {"n", "kind", "preset", "scale", "center"}, "scheme");
            CutProjectScheme s = make_scheme_polygon(
                n, rational_from_json(member(j, "scale", "scheme")),
                cyc_from_json(member(j, "center", "scheme")));
            if (get_string(member(j, "preset", "scheme"), "scheme preset") != s.window.preset)
                throw ParseError("scheme: preset \"" + s.window.preset + "\" expected for n = " +
                                 std::to_string(n));
            return s;
        }
        if (kind == "disk") {
            only_keys(j, {"n", "kind", "r2", "center"}, "scheme");
            return make_scheme_disk(n, rational_from_json(member(j, "r2", "scheme")),
                                    cyc_from_json(member(j, "center", "scheme")));
        }
    } catch (const std::domain_error& e) {
        throw ParseError(std::string("scheme: ") + e.what());
    }
    throw ParseError("scheme: unknown kind \"" + kind + "\"");
}

json patch_to_json(const ModelSetPatch& p) {
    json j = point_list_json(p.points);
    j["schema"] = "patch";
    j["scheme"] = scheme_to_json(p.scheme);
    j["radius_squared"] = rational_to_json(p.radius_squared);
    return j;
}

ModelSetPatch patch_from_json(const json& j) {
    only_keys(j, {"schema", "scheme", "radius_squared", "count", "points", "float_points"},
              "patch");
    if (get_string(member(j, "schema", "patch"), "patch schema") != "patch")
        throw ParseError("patch: schema must be \"patch\"");
    ModelSetPatch p;
    p.scheme = scheme_from_json(member(j, "scheme", "patch"));
    p.radius_squared = rational_from_json(member(j, "radius_squared", "patch"));
    if (p.radius_squared.sgn() < 0) throw ParseError("patch: radius_squared must be >= 0");
    const json& pts = member(j, "points", "patch");
    if (!pts.is_array()) throw ParseError("patch: points must be an array");
    const CycNum r2(p.radius_squared);
    for (const json& e : pts) {
        CycNum z = cyc_from_json(e);
        if (p.scheme.n % z.order() != 0)
            throw ParseError("patch: point of order " + std::to_string(z.order()) +
                             " does not lie in Q(zeta_" + std::to_string(p.scheme.n) + ")");
        if (sign_of_real(r2 - norm_squared(z)) == Sign::negative)
            throw ParseError("patch: a point lies outside the radius");
        if (!p.scheme.is_lattice && !p.scheme.window.contains(p.scheme.star(z)))
            throw ParseError("patch: a point's star image lies outside the window");
        if (!p.points.empty() && !cyc_less(p.points.back(), z))
            throw ParseError("patch: points are not in canonical ascending order");
        p.points.push_back(std::move(z));
    }
    if (get_long(member(j, "count", "patch"), "patch count") !=
        static_cast<long>(p.points.size()))
        throw ParseError("patch: count does not match the points array");
    const json& fp = member(j, "float_points", "patch");
    if (!fp.is_array() || fp.size() != p.points.size())
        throw ParseError("patch: float_points must mirror the points array");
    return p;
}

json certificate_to_json(const Certificate& c, const std::vector<Direction>& U) {
    json j;
    j["schema"] = "certificate";
    j["n"] = c.n;
    j["verdict"] = verdict_name(c.verdict);
    j["rule"] = rule_name(c.rule);
    j["cardinality"] = c.cardinality;
    if (c.bound) j["bound"] = *c.bound;
    if (c.witness) {
        json w;
        w["subset"] = json::array();
        w["arranged"] = json::array();
        json arranged_slopes = json::array();
        for (size_t i = 0; i < 4; ++i) {
            w["subset"].push_back(c.witness->subset[i]);
            w["arranged"].push_back(c.witness->arranged[i]);
            arranged_slopes.push_back(slope_to_json(U[c.witness->arranged[i]].slope)["slope"]);
        }
        w["arranged_slopes"] = std::move(arranged_slopes);
        w["ratio"] = cyc_to_json(c.witness->ratio);
        w["ratio_float"] = cyc_to_double_re(c.witness->ratio);
        j["witness"] = std::move(w);
    }
    j["directions"] = directions_array_json(U);
    return j;
}

json profile_to_json(const XRayProfile& p) {
    json j;
    j["schema"] = "xray-profile";
    j["direction"] = direction_to_json(p.direction);
    j["total"] = p.total();
    json lines = json::array();
    for (const auto& [key, count] : p.lines) {
        json e;
        e["key"] = cyc_to_json(key);
        e["offset_float"] = cyc_to_double_im(key) / 2.0;
        e["count"] = count;
        lines.push_back(std::move(e));
    }
    j["lines"] = std::move(lines);
    return j;
}

json upolygon_to_json(const UPolygon& P, long n) {
    json j;
    j["schema"] = "upolygon";
    j["n"] = n;
    j["directions"] = directions_array_json(P.U);
    j["vertex_count"] = static_cast<long>(P.vertices.size());
    json verts = json::array(), fverts = json::array();
    for (const CycNum& v : P.vertices) {
        verts.push_back(cyc_to_json(v));
        fverts.push_back(float_point_json(v));
    }
    j["vertices"] = std::move(verts);
    j["float_vertices"] = std::move(fverts);
    return j;
}

json search_result_to_json(const SearchResult& r, long n) {
    json j;
    j["schema"] = "upolygon-search";
    switch (r.status) {
        case SearchStatus::found: j["status"] = "found"; break;
        case SearchStatus::exhausted: j["status"] = "exhausted"; break;
        case SearchStatus::budget_exceeded: j["status"] = "budget-exceeded"; break;
    }
    j["nodes"] = r.nodes;
    if (r.polygon) j["polygon"] = upolygon_to_json(*r.polygon, n);
    return j;
}

json counterexample_to_json(const CounterexamplePair& c, long n) {
    json j;
    j["schema"] = "counterexample";
    j["n"] = n;
    j["directions"] = directions_array_json(c.U);
    j["F1"] = point_list_json(c.F1);
    j["F2"] = point_list_json(c.F2);
    return j;
}

namespace {

std::vector<CycNum> point_list_from_json(const json& j, long n, const char* what) {
    only_keys(j, {"count", "points", "float_points"}, what);
    const json& pts = member(j, "points", what);
    if (!pts.is_array()) throw ParseError(std::string(what) + ": points must be an array");
    std::vector<CycNum> out;
    for (const json& e : pts) {
        CycNum z = cyc_from_json(e);
        if (n % z.order() != 0)
            throw ParseError(std::string(what) + ": point of order " +
                             std::to_string(z.order()) + " does not lie in Q(zeta_" +
                             std::to_string(n) + ")");
        if (!out.empty() && !cyc_less(out.back(), z))
            throw ParseError(std::string(what) + ": points are not in canonical order");
        out.push_back(std::move(z));
    }
    if (get_long(member(j, "count", what), "count") != static_cast<long>(out.size()))
        throw ParseError(std::string(what) + ": count does not match the points array");
    const json& fp = member(j, "float_points", what);
    if (!fp.is_array() || fp.size() != out.size())
        throw ParseError(std::string(what) + ": float_points must mirror the points array");
    return out;
}

}  // namespace

json subset_to_json(const std::vector<CycNum>& pts, long n) {
    json j = point_list_json(pts);
    j["schema"] = "subset";
    j["n"] = n;
    return j;
}

std::vector<CycNum> subset_from_json(const json& j, long* n_out) {
    if (!j.is_object()) throw ParseError("subset: expected an object");
    if (get_string(member(j, "schema", "subset"), "subset schema") != "subset")
        throw ParseError("subset: schema must be \"subset\"");
    const long n = get_long(member(j, "n", "subset"), "subset n");
    if (n < 1 || n > kMaxOrder) throw ParseError("subset: n out of range");
    json body = j;
    body.erase("schema");
    body.erase("n");
    std::vector<CycNum> pts = point_list_from_json(body, n, "subset");
    if (n_out) *n_out = n;
    return pts;
}

CounterexamplePair counterexample_from_json(const json& j, long* n_out) {
    only_keys(j, {"schema", "n", "directions", "F1", "F2"}, "counterexample");
    if (get_string(member(j, "schema", "counterexample"), "schema") != "counterexample")
        throw ParseError("counterexample: schema must be \"counterexample\"");
    const long n = get_long(member(j, "n", "counterexample"), "counterexample n");
    if (n < 1 || n > kMaxOrder) throw ParseError("counterexample: n out of range");
    CounterexamplePair c;
    c.U = directions_array_from_json(member(j, "directions", "counterexample"), n,
                                     "counterexample directions");
    c.F1 = point_list_from_json(member(j, "F1", "counterexample"), n, "counterexample F1");
    c.F2 = point_list_from_json(member(j, "F2", "counterexample"), n, "counterexample F2");
    if (n_out) *n_out = n;
    return c;
}

json oracle_report_to_json(const OracleReport& r) {
    json j;
    j["schema"] = "oracle-report";
    j["n"] = r.n;
    j["radius_squared"] = rational_to_json(r.radius_squared);
    j["patch_size"] = r.patch_size;
    j["directions"] = directions_array_json(r.U);
    j["evidence_scope"] = "patch-only";
    if (r.collision) {
        json c;
        c["F1"] = point_list_json(r.collision->F1);
        c["F2"] = point_list_json(r.collision->F2);
        j["collision"] = std::move(c);
    } else {
        j["collision"] = nullptr;
    }
    j["stats"] = json{{"convex_subsets", r.stats.convex_subsets},
                      {"work_units", r.stats.work_units}};
    return j;
}

json fixture_to_json(const UPolygonFixture& f) {
    json j;
    j["schema"] = "upolygon-fixture";
    j["n"] = f.scheme.n;
    j["scheme"] = scheme_to_json(f.scheme);
    j["radius_squared"] = rational_to_json(f.radius_squared);
    j["directions"] = directions_array_json(f.directions);
    json verts = json::array();
    for (const CycNum& v : f.vertices) verts.push_back(cyc_to_json(v));
    j["vertices"] = std::move(verts);
    return j;
}

UPolygonFixture fixture_from_json(const json& j) {
    only_keys(j, {"schema", "n", "scheme", "radius_squared", "directions", "vertices"},
              "fixture");
    if (get_string(member(j, "schema", "fixture"), "fixture schema") != "upolygon-fixture")
        throw ParseError("fixture: schema must be \"upolygon-fixture\"");
    UPolygonFixture f;
    f.scheme = scheme_from_json(member(j, "scheme", "fixture"));
    if (get_long(member(j, "n", "fixture"), "fixture n") != f.scheme.n)
        throw ParseError("fixture: n does not match the scheme");
    f.radius_squared = rational_from_json(member(j, "radius_squared", "fixture"));
    f.directions =
        directions_array_from_json(member(j, "directions", "fixture"), f.scheme.n, "fixture");
    const json& verts = member(j, "vertices", "fixture");
    if (!verts.is_array()) throw ParseError("fixture: vertices must be an array");
    for (const json& e : verts) {
        CycNum v = cyc_from_json(e);
        if (f.scheme.n % v.order() != 0)
            throw ParseError("fixture: vertex of order " + std::to_string(v.order()) +
                             " does not lie in Q(zeta_" + std::to_string(f.scheme.n) + ")");
        f.vertices.push_back(std::move(v));
    }
    return f;
}

double cyc_to_double_re(const CycNum& a) { return to_complex_float(a, 128).re; }
double cyc_to_double_im(const CycNum& a) { return to_complex_float(a, 128).im; }

json parse_json_text(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(what + ": invalid JSON");
    return j;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) throw ParseError("cannot read file: " + path);
    return parse_json_text(buf.str(), path);
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

void write_file_atomic(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp." + std::to_string(getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
        out << text;
        out.flush();
        if (!out.good()) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot rename into place: " + path);
    }
}

}  // namespace cyclotomo
