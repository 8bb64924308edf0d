#include "systolic/disc.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "systolic/fixtures.hpp"

namespace systolic {

namespace {

[[noreturn]] void invalid(const std::string& why) { throw Error(Errc::InvalidDisc, why); }

}  // namespace

DiscTriangulation DiscTriangulation::from_names(std::vector<std::string> vertices,
                                                const std::vector<std::array<std::string, 3>>& triangles,
                                                const std::vector<std::string>& boundary)
{
    std::map<std::string, Vertex, std::less<>> idx;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        idx.emplace(vertices[i], static_cast<Vertex>(i));
    auto lookup = [&](const std::string& n) {
        auto it = idx.find(n);
        if (it == idx.end())
            throw Error(Errc::UnknownVertex, "undeclared disc vertex " + n);
        return it->second;
    };
    std::vector<Triangle> tris;
    for (const auto& t : triangles)
        tris.push_back({lookup(t[0]), lookup(t[1]), lookup(t[2])});
    std::vector<Vertex> bd;
    for (const auto& b : boundary)
        bd.push_back(lookup(b));
    return from_indices(std::move(vertices), tris, bd);
}

DiscTriangulation DiscTriangulation::from_indices(std::vector<std::string> names, const std::vector<Triangle>& tris,
                                                  const std::vector<Vertex>& bd)
{
    {
        auto sorted = names;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            invalid("duplicate vertex name");
    }
    const std::size_t n_in = names.size();
    std::vector<Edge> raw_edges;
    for (const auto& t : tris) {
        for (Vertex x : t)
            if (x >= n_in)
                throw Error(Errc::UnknownVertex, "triangle vertex out of range");
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            invalid("degenerate triangle");
        raw_edges.emplace_back(t[0], t[1]);
        raw_edges.emplace_back(t[1], t[2]);
        raw_edges.emplace_back(t[0], t[2]);
    }
    for (Vertex b : bd)
        if (b >= n_in)
            throw Error(Errc::UnknownVertex, "boundary vertex out of range");

    DiscTriangulation d;
    auto names_copy = names;
    d.skeleton_ = FlagComplex::from_indexed_edges(std::move(names_copy), raw_edges);
    // map input indices to canonical ones through the names
    std::vector<Vertex> remap(n_in);
    for (std::size_t i = 0; i < n_in; ++i)
        remap[i] = d.skeleton_.at(names[i]);
    const std::size_t n = d.skeleton_.size();

    for (auto t : tris) {
        Triangle c{remap[t[0]], remap[t[1]], remap[t[2]]};
        std::sort(c.begin(), c.end());
        d.triangles_.push_back(c);
    }
    std::sort(d.triangles_.begin(), d.triangles_.end());
    if (std::adjacent_find(d.triangles_.begin(), d.triangles_.end()) != d.triangles_.end())
        invalid("duplicate triangle");
    if (d.triangles_.empty())
        invalid("no triangles");

    std::map<Edge, int> edge_count;
    for (const auto& t : d.triangles_) {
        ++edge_count[{t[0], t[1]}];
        ++edge_count[{t[1], t[2]}];
        ++edge_count[{t[0], t[2]}];
    }
    std::set<Edge> single;
    for (auto [e, k] : edge_count) {
        if (k > 2)
            invalid("edge " + d.name(e.first) + "-" + d.name(e.second) + " lies in more than two triangles");
        if (k == 1)
            single.insert(e);
    }

    for (Vertex b : bd)
        d.boundary_.push_back(remap[b]);
    const std::size_t L = d.boundary_.size();
    if (L < 3)
        invalid("boundary shorter than 3");
    {
        auto s = d.boundary_;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            invalid("boundary repeats a vertex");
    }
    std::set<Edge> bd_edges;
    for (std::size_t i = 0; i < L; ++i) {
        Vertex a = d.boundary_[i], b = d.boundary_[(i + 1) % L];
        bd_edges.insert({std::min(a, b), std::max(a, b)});
    }
    if (bd_edges != single)
        invalid("boundary cycle differs from the edges lying in one triangle");

    auto it = std::min_element(d.boundary_.begin(), d.boundary_.end());
    std::rotate(d.boundary_.begin(), it, d.boundary_.end());
    d.boundary_pos_.assign(n, -1);
    for (std::size_t i = 0; i < L; ++i)
        d.boundary_pos_[d.boundary_[i]] = static_cast<int>(i);

    d.incident_.assign(n, 0);
    for (const auto& t : d.triangles_)
        for (Vertex x : t)
            ++d.incident_[x];
    for (Vertex v = 0; v < n; ++v)
        if (d.incident_[v] == 0)
            invalid("vertex " + d.name(v) + " lies in no triangle");

    const auto chi = static_cast<long>(n) - static_cast<long>(edge_count.size()) +
                     static_cast<long>(d.triangles_.size());
    if (chi != 1)
        invalid("Euler characteristic is " + std::to_string(chi));

    // dual graph connectivity
    {
        std::map<Edge, std::vector<std::size_t>> on_edge;
        for (std::size_t f = 0; f < d.triangles_.size(); ++f) {
            const auto& t = d.triangles_[f];
            on_edge[{t[0], t[1]}].push_back(f);
            on_edge[{t[1], t[2]}].push_back(f);
            on_edge[{t[0], t[2]}].push_back(f);
        }
        std::vector<std::vector<std::size_t>> dual(d.triangles_.size());
        for (auto& [e, fs] : on_edge)
            if (fs.size() == 2) {
                dual[fs[0]].push_back(fs[1]);
                dual[fs[1]].push_back(fs[0]);
            }
        std::vector<char> seen(dual.size(), 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t reached = 0;
        while (!stack.empty()) {
            auto f = stack.back();
            stack.pop_back();
            ++reached;
            for (auto g : dual[f])
                if (!seen[g]) {
                    seen[g] = 1;
                    stack.push_back(g);
                }
        }
        if (reached != dual.size())
            invalid("triangles do not form a connected surface");
    }

    // each vertex link must be a path (boundary) or a cycle (interior)
    std::vector<std::vector<Edge>> link(n);
    for (const auto& t : d.triangles_) {
        link[t[0]].emplace_back(t[1], t[2]);
        link[t[1]].emplace_back(t[0], t[2]);
        link[t[2]].emplace_back(t[0], t[1]);
    }
    for (Vertex v = 0; v < n; ++v) {
        std::map<Vertex, std::vector<Vertex>> g;
        for (auto [a, b] : link[v]) {
            g[a].push_back(b);
            g[b].push_back(a);
        }
        std::size_t ends = 0;
        for (auto& [x, nb] : g) {
            if (nb.size() > 2)
                invalid("link of " + d.name(v) + " branches");
            ends += nb.size() == 1;
        }
        bool bdry = d.boundary_pos_[v] >= 0;
        if ((bdry && ends != 2) || (!bdry && ends != 0))
            invalid("link of " + d.name(v) + " is not a " + (bdry ? "path" : "cycle"));
        // connected?
        std::set<Vertex> seen;
        std::vector<Vertex> stack{g.begin()->first};
        seen.insert(stack.back());
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g[x])
                if (seen.insert(y).second)
                    stack.push_back(y);
        }
        if (seen.size() != g.size())
            invalid("link of " + d.name(v) + " is disconnected");
    }
    return d;
}

std::vector<Vertex> DiscTriangulation::interior_vertices() const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < size(); ++v)
        if (boundary_pos_[v] < 0)
            out.push_back(v);
    return out;
}

bool DiscTriangulation::has_triangle(Vertex a, Vertex b, Vertex c) const
{
    Triangle t{a, b, c};
    std::sort(t.begin(), t.end());
    return std::binary_search(triangles_.begin(), triangles_.end(), t);
}

std::vector<Vertex> DiscTriangulation::opposite(Vertex a, Vertex b) const
{
    std::vector<Vertex> out;
    for (Vertex x : skeleton_.neighbors(a))
        if (x != b && skeleton_.adjacent(x, b) && has_triangle(a, b, x))
            out.push_back(x);
    return out;
}

int defect(const DiscTriangulation& disc, Vertex v)
{
    if (v >= disc.size())
        throw Error(Errc::UnknownVertex, "disc vertex out of range");
    int base = disc.on_boundary(v) ? 3 : 6;
    return base - static_cast<int>(disc.triangle_count(v));
}

int defect(const DiscTriangulation& disc, std::string_view v) { return defect(disc, disc.at(v)); }

namespace {

void require_boundary_path(const DiscTriangulation& disc, const std::vector<Vertex>& path)
{
    if (path.empty())
        throw Error(Errc::PathNotOnBoundary, "empty path");
    const auto L = static_cast<int>(disc.boundary().size());
    std::set<Vertex> seen;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] >= disc.size() || !disc.on_boundary(path[i]))
            throw Error(Errc::PathNotOnBoundary, "vertex not on the boundary");
        if (!seen.insert(path[i]).second)
            throw Error(Errc::PathNotOnBoundary, "path repeats a vertex");
        if (i == 0)
            continue;
        int d = (disc.boundary_position(path[i]) - disc.boundary_position(path[i - 1]) + L) % L;
        if (d != 1 && d != L - 1)
            throw Error(Errc::PathNotOnBoundary, "consecutive vertices are not boundary neighbours");
    }
}

}  // namespace

int defect_along(const DiscTriangulation& disc, const std::vector<Vertex>& path)
{
    require_boundary_path(disc, path);
    int sum = 0;
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        sum += defect(disc, path[i]);
    return sum;
}

int gauss_bonnet_sum(const DiscTriangulation& disc)
{
    int sum = 0;
    for (Vertex v = 0; v < disc.size(); ++v)
        sum += defect(disc, v);
    return sum;
}

bool is_flag_disc(const DiscTriangulation& disc)
{
    for (const auto& t : disc.skeleton().triangles())
        if (!disc.has_triangle(t[0], t[1], t[2]))
            return false;
    return true;
}

SystolicDiscResult is_systolic_disc(const DiscTriangulation& disc)
{
    for (const auto& t : disc.skeleton().triangles())
        if (!disc.has_triangle(t[0], t[1], t[2]))
            throw Error(Errc::NotFlag, "1-skeleton spans " + disc.name(t[0]) + "," + disc.name(t[1]) + "," +
                                           disc.name(t[2]) + " which is not a triangle of the disc");
    SystolicDiscResult r;
    for (Vertex v = 0; v < disc.size(); ++v)
        if (!disc.on_boundary(v) && disc.triangle_count(v) < 6) {
            r.systolic = false;
            r.witness = v;
            break;
        }
    return r;
}

BoundaryDefectCheck boundary_defect_check(const DiscTriangulation& disc)
{
    if (!is_systolic_disc(disc))
        throw Error(Errc::NotSystolicDisc, "disc has an interior vertex in fewer than six triangles");
    BoundaryDefectCheck r;
    for (Vertex v = 0; v < disc.size(); ++v) {
        if (disc.on_boundary(v))
            r.sum += defect(disc, v);
        else if (defect(disc, v) < 0)
            r.has_negative_interior = true;
    }
    r.equality_iff_no_negative_interior = (r.sum == 6) == !r.has_negative_interior;
    return r;
}

GeodesicLemmaReport verify_geodesic_defect_lemma(const DiscTriangulation& disc, const std::vector<Vertex>& geodesic)
{
    if (!is_systolic_disc(disc))
        throw Error(Errc::NotSystolicDisc, "disc has an interior vertex in fewer than six triangles");
    require_boundary_path(disc, geodesic);
    auto d = distance(disc.skeleton(), geodesic.front(), geodesic.back());
    if (!d || static_cast<std::size_t>(*d) != geodesic.size() - 1)
        throw Error(Errc::NotGeodesic, "path of length " + std::to_string(geodesic.size() - 1) +
                                           " between vertices at distance " + std::to_string(d.value_or(-1)));
    GeodesicLemmaReport r;
    for (std::size_t i = 1; i + 1 < geodesic.size(); ++i)
        r.inner_defects.push_back(defect(disc, geodesic[i]));
    r.defect_along = defect_along(disc, geodesic);
    for (std::size_t i = 0; i < r.inner_defects.size(); ++i)
        if (r.inner_defects[i] > 1)
            r.violations.push_back({1, geodesic[i + 1], "inner vertex with defect above 1"});
    std::optional<std::size_t> last_one;
    bool negative_since = false;
    for (std::size_t i = 0; i < r.inner_defects.size(); ++i) {
        if (r.inner_defects[i] < 0)
            negative_since = true;
        if (r.inner_defects[i] == 1) {
            if (last_one && !negative_since)
                r.violations.push_back({2, geodesic[i + 1], "two defect-1 vertices without a negative one between"});
            last_one = i;
            negative_since = false;
        }
    }
    if (r.defect_along > 1)
        r.violations.push_back({3, geodesic.front(), "defect along the geodesic exceeds 1"});
    return r;
}

AreaIdentities euler_area_identities(const DiscTriangulation& disc)
{
    AreaIdentities r;
    r.area = disc.area();
    r.boundary_count = disc.boundary().size();
    r.inner_count = disc.size() - r.boundary_count;
    r.pick_holds = r.area + 2 == 2 * r.inner_count + r.boundary_count;
    r.systolic = is_flag_disc(disc) && is_systolic_disc(disc).systolic;
    if (r.systolic)
        r.isoperimetric_holds = 6 * r.area <= r.boundary_count * r.boundary_count;
    return r;
}

std::vector<Vertex> boundary_arc(const DiscTriangulation& disc, std::size_t i, std::size_t j)
{
    const auto& b = disc.boundary();
    std::vector<Vertex> out;
    std::size_t k = i % b.size();
    out.push_back(b[k]);
    while (k != j % b.size()) {
        k = (k + 1) % b.size();
        out.push_back(b[k]);
    }
    return out;
}

std::optional<DiscTriangulation> flip_edge(const DiscTriangulation& disc, Vertex a, Vertex b)
{
    auto opp = disc.opposite(a, b);
    if (opp.size() != 2)
        return std::nullopt;
    Vertex c = opp[0], d = opp[1];
    if (disc.skeleton().adjacent(c, d))
        return std::nullopt;
    auto sorted = [](Triangle t) {
        std::sort(t.begin(), t.end());
        return t;
    };
    const Triangle gone1 = sorted({a, b, c}), gone2 = sorted({a, b, d});
    std::vector<Triangle> tris;
    for (const auto& t : disc.triangles())
        if (t != gone1 && t != gone2)
            tris.push_back(t);
    tris.push_back({a, c, d});
    tris.push_back({b, c, d});
    return DiscTriangulation::from_indices(disc.names(), tris, disc.boundary());
}

DiscTriangulation random_flip_disc(int radius, int flips, std::mt19937_64& rng, FlipPolicy policy)
{
    DiscTriangulation d = gen_hex_patch(radius);
    for (int f = 0; f < flips; ++f) {
        std::vector<Edge> candidates;
        for (auto [a, b] : d.skeleton().edges()) {
            auto opp = d.opposite(a, b);
            if (opp.size() != 2 || d.skeleton().adjacent(opp[0], opp[1]))
                continue;
            if (policy == FlipPolicy::KeepSystolic) {
                // a and b each lose a triangle; interior ones must keep six
                bool ok = true;
                for (Vertex x : {a, b})
                    if (!d.on_boundary(x) && d.triangle_count(x) <= 6)
                        ok = false;
                // the new edge must not close a triangle outside the disc
                for (Vertex x : d.skeleton().neighbors(opp[0]))
                    if (x != a && x != b && d.skeleton().adjacent(x, opp[1]))
                        ok = false;
                if (!ok)
                    continue;
            }
            candidates.emplace_back(a, b);
        }
        if (candidates.empty())
            break;
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        auto [a, b] = candidates[pick(rng)];
        if (auto next = flip_edge(d, a, b))
            d = std::move(*next);
    }
    return d;
}

}  // namespace systolic
