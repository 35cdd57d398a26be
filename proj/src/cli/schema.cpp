#include "mmpkit/schema.hpp"

#include <limits>

namespace mmpkit::schema {

namespace {

std::string at(const std::string& pointer, const std::string& key) { return pointer + "/" + key; }
std::string at(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

[[noreturn]] void fail(const char* code, const std::string& pointer, const std::string& message) {
    throw ValidationError(code, pointer.empty() ? "/" : pointer, (pointer.empty() ? "/" : pointer) + ": " + message);
}

const Json& require(const Json& obj, const std::string& key, const std::string& pointer) {
    if (!obj.is_object()) fail(kSchema, pointer, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(kSchema, at(pointer, key), "missing required field");
    return *it;
}

const Json& require_array(const Json& value, const std::string& pointer) {
    if (!value.is_array()) fail(kSchema, pointer, "expected an array");
    return value;
}

Integer get_integer(const Json& value, const std::string& pointer) {
    if (value.is_number_integer()) {
        if (value.is_number_unsigned()) return Integer(value.get<unsigned long>());
        return Integer(value.get<long>());
    }
    if (value.is_string()) {
        const auto& s = value.get_ref<const std::string&>();
        Integer z;
        if (!s.empty() && z.set_str(s, 10) == 0) return z;
    }
    fail(kSchema, pointer, "expected an integer");
}

long get_small(const Json& value, const std::string& pointer) {
    const Integer z = get_integer(value, pointer);
    if (!z.fits_slong_p()) fail(kSchema, pointer, "integer out of range");
    return z.get_si();
}

std::size_t get_index(const Json& value, const std::string& pointer) {
    const long v = get_small(value, pointer);
    if (v < 0) fail(kSchema, pointer, "index must be nonnegative");
    return static_cast<std::size_t>(v);
}

Rational get_rational(const Json& value, const std::string& pointer) {
    if (value.is_number_integer()) return Rational(get_integer(value, pointer));
    if (!value.is_string()) fail(kRational, pointer, "expected a \"p/q\" string");
    try {
        return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(kRational, pointer, e.what());
    }
}

IntMatrix get_square_matrix(const Json& value, const std::string& pointer) {
    require_array(value, pointer);
    const std::size_t n = value.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = require_array(value[i], at(pointer, i));
        if (row.size() != n) fail(kDimension, at(pointer, i), "expected " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = get_integer(row[j], at(at(pointer, i), j));
    }
    return m;
}

} // namespace

Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(kJsonSyntax, "/", std::string("malformed JSON: ") + e.what());
    }
}

IntVector parse_int_list(const Json& value, const std::string& pointer) {
    require_array(value, pointer);
    IntVector v;
    for (std::size_t i = 0; i < value.size(); ++i) v.push_back(get_integer(value[i], at(pointer, i)));
    return v;
}

IntVector parse_int_list(const std::string& text, const std::string& flag) {
    IntVector v;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        Integer z;
        if (part.empty() || z.set_str(part, 10) != 0)
            throw ValidationError(kUsage, flag, flag + ": expected comma-separated integers, got '" + text + "'");
        v.push_back(z);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return v;
}

toric::Cone parse_cone(const Json& doc) {
    const long rank = get_small(require(doc, "rank", ""), "/rank");
    if (rank <= 0) fail(kSchema, "/rank", "rank must be positive");
    const auto& rays_json = require_array(require(doc, "rays", ""), "/rays");
    std::vector<IntVector> rays;
    for (std::size_t i = 0; i < rays_json.size(); ++i) {
        const auto ptr = at("/rays", i);
        IntVector r = parse_int_list(rays_json[i], ptr);
        if (r.size() != static_cast<std::size_t>(rank))
            fail(kDimension, ptr, "ray has " + std::to_string(r.size()) + " entries, rank is " + std::to_string(rank));
        if (!is_primitive(r)) fail(kRayNotPrimitive, ptr, "ray " + to_string(r) + " is not primitive");
        for (std::size_t j = 0; j < rays.size(); ++j)
            if (rays[j] == r) fail(kDuplicateRay, ptr, "duplicates ray " + std::to_string(j));
        rays.push_back(std::move(r));
    }
    return toric::Cone(static_cast<std::size_t>(rank), std::move(rays));
}

std::pair<graph::DualGraph, graph::BoundaryData> parse_graph(const Json& doc) {
    const auto& vs = require_array(require(doc, "vertices", ""), "/vertices");
    std::vector<graph::Vertex> vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto ptr = at("/vertices", i);
        graph::Vertex v;
        v.genus = get_small(require(vs[i], "genus", ptr), at(ptr, "genus"));
        if (v.genus < 0) fail(kGraph, at(ptr, "genus"), "genus must be nonnegative");
        v.self_int = get_small(require(vs[i], "self_int", ptr), at(ptr, "self_int"));
        vertices.push_back(v);
    }
    if (vertices.empty()) fail(kGraph, "/vertices", "graph has no vertices");

    std::vector<graph::Edge> edges;
    if (doc.contains("edges")) {
        const auto& es = require_array(doc["edges"], "/edges");
        for (std::size_t k = 0; k < es.size(); ++k) {
            const auto ptr = at("/edges", k);
            const auto& e = require_array(es[k], ptr);
            if (e.size() != 2 && e.size() != 3) fail(kSchema, ptr, "edge must be [i, j] or [i, j, mult]");
            graph::Edge edge;
            edge.i = get_index(e[0], at(ptr, 0));
            edge.j = get_index(e[1], at(ptr, 1));
            edge.mult = e.size() == 3 ? get_small(e[2], at(ptr, 2)) : 1;
            if (edge.i >= vertices.size() || edge.j >= vertices.size())
                fail(kGraph, ptr, "endpoint out of range");
            if (edge.i == edge.j) fail(kGraph, ptr, "self-loop");
            if (edge.mult <= 0) fail(kGraph, at(ptr, 2), "multiplicity must be positive");
            edges.push_back(edge);
        }
    }

    std::vector<graph::BoundaryComponent> comps;
    if (doc.contains("boundary")) {
        const auto& bs = require_array(doc["boundary"], "/boundary");
        for (std::size_t k = 0; k < bs.size(); ++k) {
            const auto ptr = at("/boundary", k);
            graph::BoundaryComponent c;
            c.coeff = get_rational(require(bs[k], "coeff", ptr), at(ptr, "coeff"));
            if (c.coeff < 0 || c.coeff > 1)
                fail(kBoundaryCoeffRange, at(ptr, "coeff"), "coefficient " + to_string(c.coeff) + " not in [0,1]");
            const auto& ms = require_array(require(bs[k], "meets", ptr), at(ptr, "meets"));
            for (std::size_t t = 0; t < ms.size(); ++t) {
                const auto mptr = at(at(ptr, "meets"), t);
                const auto& m = require_array(ms[t], mptr);
                if (m.size() != 2) fail(kSchema, mptr, "expected [vertex, mult]");
                const std::size_t v = get_index(m[0], at(mptr, 0));
                const long mult = get_small(m[1], at(mptr, 1));
                if (v >= vertices.size()) fail(kGraph, at(mptr, 0), "vertex out of range");
                if (mult <= 0) fail(kGraph, at(mptr, 1), "multiplicity must be positive");
                c.meets.emplace_back(v, mult);
            }
            comps.push_back(std::move(c));
        }
    }
    return {graph::DualGraph(std::move(vertices), std::move(edges)), graph::BoundaryData(std::move(comps))};
}

surface::SurfaceLattice parse_surface(const Json& doc) {
    surface::SurfaceLattice s;
    const long rank = get_small(require(doc, "rank", ""), "/rank");
    if (rank <= 0) fail(kSchema, "/rank", "rank must be positive");
    s.gram = get_square_matrix(require(doc, "gram", ""), "/gram");
    if (s.gram.rows() != static_cast<std::size_t>(rank))
        fail(kDimension, "/gram", "Gram matrix is " + std::to_string(s.gram.rows()) + "x" +
                                      std::to_string(s.gram.rows()) + ", rank is " + std::to_string(rank));
    for (std::size_t i = 0; i < s.gram.rows(); ++i)
        for (std::size_t j = i + 1; j < s.gram.cols(); ++j)
            if (s.gram(i, j) != s.gram(j, i))
                fail(kGramAsymmetric, at(at("/gram", i), j), "Gram matrix is not symmetric");
    s.canonical = parse_int_list(require(doc, "K", ""), "/K");
    if (s.canonical.size() != s.gram.rows()) fail(kDimension, "/K", "K has the wrong length");
    if (doc.contains("curves")) {
        const auto& cs = require_array(doc["curves"], "/curves");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const auto ptr = at("/curves", i);
            IntVector c = parse_int_list(cs[i], ptr);
            if (c.size() != s.gram.rows()) fail(kDimension, ptr, "curve class has the wrong length");
            s.curves.push_back(std::move(c));
            try {
                surface::adjunction_genus(s, s.curves.back());
            } catch (const MathError&) {
                fail(kCurveParity, ptr, "C.(C+K) is odd, so p_a(C) is not an integer");
            }
        }
    }
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) fail(kSchema, "/label", "expected a string");
        s.label = doc["label"].get<std::string>();
    }
    return s;
}

kodaira::PlurigenusSample parse_plurigenera(const Json& doc, std::optional<long>& max_dim) {
    const auto& ss = require_array(require(doc, "samples", ""), "/samples");
    std::vector<std::pair<long, Integer>> samples;
    for (std::size_t i = 0; i < ss.size(); ++i) {
        const auto ptr = at("/samples", i);
        const auto& p = require_array(ss[i], ptr);
        if (p.size() != 2) fail(kSchema, ptr, "expected [m, P_m]");
        const long m = get_small(p[0], at(ptr, 0));
        const Integer pm = get_integer(p[1], at(ptr, 1));
        if (m <= 0) fail(kSamples, at(ptr, 0), "m must be positive");
        if (pm < 0) fail(kSamples, at(ptr, 1), "P_m must be nonnegative");
        if (!samples.empty() && m <= samples.back().first)
            fail(kSamples, at(ptr, 0), "m values must be strictly increasing");
        samples.emplace_back(m, pm);
    }
    if (samples.empty()) fail(kSamples, "/samples", "no samples");
    max_dim.reset();
    if (doc.contains("max_dim") && !doc["max_dim"].is_null()) {
        max_dim = get_small(doc["max_dim"], "/max_dim");
        if (*max_dim < 0) fail(kSchema, "/max_dim", "max_dim must be nonnegative");
    }
    return kodaira::PlurigenusSample(std::move(samples));
}

std::vector<Rational> parse_coefficients(const Json& doc) {
    const auto& cs = require_array(require(doc, "coeffs", ""), "/coeffs");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < cs.size(); ++i) out.push_back(get_rational(cs[i], at("/coeffs", i)));
    return out;
}

Json to_json(const Integer& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Json to_json(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Json to_json(const Rational& q) { return Json(to_string(q)); }

Json to_json(const RatVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Json to_json(const IntMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

Json to_json(const graph::DualGraph& g, const graph::BoundaryData& b) {
    Json doc;
    doc["vertices"] = Json::array();
    for (const auto& v : g.vertices()) doc["vertices"].push_back({{"genus", v.genus}, {"self_int", v.self_int}});
    doc["edges"] = Json::array();
    for (const auto& e : g.edges()) doc["edges"].push_back({e.i, e.j, e.mult});
    doc["boundary"] = Json::array();
    for (const auto& c : b.components()) {
        Json meets = Json::array();
        for (const auto& [v, m] : c.meets) meets.push_back({v, m});
        doc["boundary"].push_back({{"coeff", to_json(c.coeff)}, {"meets", meets}});
    }
    return doc;
}

Json to_json(const surface::SurfaceLattice& s) {
    Json doc;
    doc["rank"] = s.rank();
    doc["gram"] = to_json(s.gram);
    doc["K"] = to_json(s.canonical);
    doc["curves"] = Json::array();
    for (const auto& c : s.curves) doc["curves"].push_back(to_json(c));
    doc["label"] = s.label;
    return doc;
}

} // namespace mmpkit::schema
