#include "systolic/io.hpp"

#include <sstream>

namespace systolic {

namespace {

[[noreturn]] void parse_fail(const std::string& why) { throw Error(Errc::ParseError, why); }

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        parse_fail(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const char* what)
{
    if (!j.is_array())
        parse_fail(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string())
            parse_fail(std::string(what) + " must contain strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

Vertex lookup(const FlagComplex& c, const Json& name)
{
    if (!name.is_string())
        parse_fail("vertex names must be strings");
    return c.at(name.get<std::string>());
}

}  // namespace

Json names_json(const FlagComplex& complex, const std::vector<Vertex>& vertices)
{
    Json a = Json::array();
    for (Vertex v : vertices)
        a.push_back(complex.name(v));
    return a;
}

Json to_json(const FlagComplex& complex)
{
    Json j;
    j["vertices"] = complex.names();
    Json e = Json::array();
    for (auto [a, b] : complex.edges())
        e.push_back({complex.name(a), complex.name(b)});
    j["edges"] = e;
    return j;
}

FlagComplex complex_from_json(const Json& j)
{
    auto vertices = string_list(field(j, "vertices"), "vertices");
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : field(j, "edges")) {
        auto pair = string_list(e, "edge");
        if (pair.size() != 2)
            parse_fail("edges must have two endpoints");
        edges.emplace_back(pair[0], pair[1]);
    }
    return FlagComplex::from_edge_list(std::move(vertices), edges);
}

Json to_json(const DiscTriangulation& disc)
{
    Json j;
    j["vertices"] = disc.names();
    Json t = Json::array();
    for (const auto& tri : disc.triangles())
        t.push_back({disc.name(tri[0]), disc.name(tri[1]), disc.name(tri[2])});
    j["triangles"] = t;
    Json b = Json::array();
    for (Vertex v : disc.boundary())
        b.push_back(disc.name(v));
    j["boundary"] = b;
    return j;
}

DiscTriangulation disc_from_json(const Json& j)
{
    auto vertices = string_list(field(j, "vertices"), "vertices");
    std::vector<std::array<std::string, 3>> tris;
    for (const auto& t : field(j, "triangles")) {
        auto v = string_list(t, "triangle");
        if (v.size() != 3)
            parse_fail("triangles must have three vertices");
        tris.push_back({v[0], v[1], v[2]});
    }
    auto boundary = string_list(field(j, "boundary"), "boundary");
    return DiscTriangulation::from_names(std::move(vertices), tris, boundary);
}

Json to_json(const Surface& surface, const FlagComplex& complex)
{
    Json j;
    j["disc"] = to_json(surface.disc);
    Json e = Json::object();
    for (Vertex v = 0; v < surface.disc.size(); ++v)
        e[surface.disc.name(v)] = complex.name(surface.embedding[v]);
    j["embedding"] = e;
    return j;
}

Surface surface_from_json(const Json& j, const FlagComplex& complex)
{
    Surface s;
    s.disc = disc_from_json(field(j, "disc"));
    const Json& e = field(j, "embedding");
    if (!e.is_object())
        parse_fail("embedding must be an object");
    s.embedding.assign(s.disc.size(), 0);
    for (Vertex v = 0; v < s.disc.size(); ++v) {
        if (!e.contains(s.disc.name(v)))
            parse_fail("embedding misses disc vertex " + s.disc.name(v));
        s.embedding[v] = lookup(complex, e.at(s.disc.name(v)));
    }
    return s;
}

namespace {

// disc vertex whose image is the named complex vertex
Vertex preimage(const Surface& s, const FlagComplex& complex, const Json& name)
{
    Vertex target = lookup(complex, name);
    for (Vertex v = 0; v < s.disc.size(); ++v)
        if (s.embedding[v] == target)
            return v;
    throw Error(Errc::InvalidLabeling, complex.name(target) + " is not on the surface");
}

}  // namespace

Json to_json(const LabeledSurface& ls, const FlagComplex& complex)
{
    Json j = to_json(ls.surface, complex);
    Json corners = Json::array();
    for (Vertex c : ls.corners)
        corners.push_back(complex.name(ls.surface.embedding[c]));
    j["corners"] = corners;
    Json sides = Json::array();
    for (const auto& side : ls.sides) {
        Json s = Json::array();
        for (Vertex v : side)
            s.push_back(complex.name(ls.surface.embedding[v]));
        sides.push_back(s);
    }
    j["sides"] = sides;
    return j;
}

LabeledSurface labeled_surface_from_json(const Json& j, const FlagComplex& complex)
{
    Surface s = surface_from_json(j, complex);
    const Json& corners = field(j, "corners");
    if (!corners.is_array() || corners.size() != 3)
        parse_fail("corners must list three vertices");
    std::array<Vertex, 3> c{};
    for (std::size_t i = 0; i < 3; ++i)
        c[i] = preimage(s, complex, corners[i]);
    LabeledSurface ls{s, c, {}};
    if (j.contains("sides")) {
        const Json& sides = j.at("sides");
        if (!sides.is_array() || sides.size() != 3)
            parse_fail("sides must list three paths");
        for (std::size_t i = 0; i < 3; ++i) {
            if (!sides[i].is_array())
                parse_fail("each side must be an array");
            for (const auto& nm : sides[i])
                ls.sides[i].push_back(preimage(s, complex, nm));
        }
        verify_labeling(complex, ls);
        return ls;
    }
    return label_surface(complex, std::move(s), c);
}

std::vector<std::string> preset_relations(const std::string& preset)
{
    if (preset == "triangle-2-4-5")
        return triangle_relations(4);
    if (preset == "triangle-2-5-5")
        return triangle_relations(5);
    if (preset.rfind("dihedral-", 0) == 0) {
        try {
            int n = std::stoi(preset.substr(9));
            if (n >= 1)
                return dihedral_relations(n);
        } catch (const std::exception&) {
        }
    }
    parse_fail("unknown preset " + preset);
}

ActionSpec action_from_json(const Json& j, const FlagComplex& complex)
{
    ActionSpec spec;
    const Json& gens = field(j, "generators");
    if (!gens.is_object())
        parse_fail("generators must be an object");
    for (auto it = gens.begin(); it != gens.end(); ++it) {
        if (it.key().size() != 1)
            parse_fail("generator names must be single characters: " + it.key());
        if (!it.value().is_object())
            parse_fail("generator " + it.key() + " must map names to names");
        Permutation p = identity_permutation(complex.size());
        for (auto m = it.value().begin(); m != it.value().end(); ++m)
            p[complex.at(m.key())] = lookup(complex, m.value());
        spec.generators.emplace_back(it.key()[0], std::move(p));
    }
    if (j.contains("preset")) {
        if (!j.at("preset").is_string())
            parse_fail("preset must be a string");
        spec.preset = j.at("preset").get<std::string>();
    }
    if (j.contains("relations"))
        spec.relations = string_list(j.at("relations"), "relations");
    else if (!spec.preset.empty())
        spec.relations = preset_relations(spec.preset);
    return spec;
}

Json to_json(const ActionSpec& spec, const FlagComplex& complex)
{
    Json j;
    Json gens = Json::object();
    for (const auto& [g, p] : spec.generators) {
        Json m = Json::object();
        for (Vertex v = 0; v < p.size(); ++v)
            if (p[v] != v)
                m[complex.name(v)] = complex.name(p[v]);
        gens[std::string(1, g)] = m;
    }
    j["generators"] = gens;
    j["relations"] = spec.relations;
    if (!spec.preset.empty())
        j["preset"] = spec.preset;
    return j;
}

std::string to_dot(const FlagComplex& complex)
{
    std::ostringstream out;
    out << "graph complex {\n";
    for (Vertex v = 0; v < complex.size(); ++v)
        out << "  \"" << complex.name(v) << "\";\n";
    for (auto [a, b] : complex.edges())
        out << "  \"" << complex.name(a) << "\" -- \"" << complex.name(b) << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace systolic
