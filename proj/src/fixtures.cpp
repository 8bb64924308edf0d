#include "systolic/fixtures.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <set>

namespace systolic {

namespace {

std::string xname(long i) { return "x" + std::to_string(i); }
std::string yname(long i) { return "y" + std::to_string(i); }

long mod(long a, long m) { return ((a % m) + m) % m; }

void need(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(Errc::ParameterOutOfRange, what);
}

using NamedEdges = std::vector<std::pair<std::string, std::string>>;

NamedEdges chorded_wheel_edges(int n)
{
    const long m = 2L * n;
    NamedEdges e;
    for (long i = 0; i < m; ++i) {
        e.emplace_back("c", xname(i));
        e.emplace_back(xname(i), xname(mod(i + 1, m)));
        e.emplace_back(xname(i), xname(mod(i + 2, m)));
    }
    return e;
}

}  // namespace

FlagComplex gen_chorded_wheel(int n)
{
    need(n >= 3, "chorded wheel needs n >= 3");
    std::vector<std::string> v{"c"};
    for (long i = 0; i < 2L * n; ++i)
        v.push_back(xname(i));
    return FlagComplex::from_edge_list(v, chorded_wheel_edges(n));
}

FlagComplex gen_double_cycle(int n)
{
    need(n >= 3, "double cycle needs n >= 3");
    const long m = 2L * n;
    std::vector<std::string> v{"c"};
    for (long i = 0; i < m; ++i) {
        v.push_back(xname(i));
        v.push_back(yname(i));
    }
    auto e = chorded_wheel_edges(n);
    for (long i = 0; i < m; ++i) {
        e.emplace_back(yname(i), yname(mod(i + 1, m)));
        for (long d : {-1L, 0L, 1L})
            e.emplace_back(yname(i), xname(mod(i + d, m)));
    }
    return FlagComplex::from_edge_list(v, e);
}

FlagComplex gen_wheel(int n)
{
    need(n >= 3, "wheel needs n >= 3");
    std::vector<std::string> v{"c"};
    NamedEdges e;
    for (long i = 0; i < n; ++i) {
        v.push_back(xname(i));
        e.emplace_back("c", xname(i));
        e.emplace_back(xname(i), xname(mod(i + 1, n)));
    }
    return FlagComplex::from_edge_list(v, e);
}

FlagComplex gen_simplex(int n)
{
    need(n >= 1, "simplex needs n >= 1");
    std::vector<std::string> v;
    NamedEdges e;
    for (int i = 0; i < n; ++i) {
        v.push_back("k" + std::to_string(i));
        for (int j = 0; j < i; ++j)
            e.emplace_back(v[static_cast<std::size_t>(j)], v.back());
    }
    return FlagComplex::from_edge_list(v, e);
}

namespace {

using Axial = std::pair<long, long>;

std::string hex_name(Axial p) { return "h" + std::to_string(p.first) + "_" + std::to_string(p.second); }

Axial parse_hex(const std::string& name)
{
    long q = 0, r = 0;
    if (std::sscanf(name.c_str(), "h%ld_%ld", &q, &r) != 2)
        throw Error(Errc::ParameterOutOfRange, "not a hex patch vertex: " + name);
    return {q, r};
}

long hex_norm(Axial p) { return (std::labs(p.first) + std::labs(p.second) + std::labs(p.first + p.second)) / 2; }

constexpr std::array<Axial, 6> hex_dirs{{{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};

}  // namespace

DiscTriangulation gen_hex_patch(int radius)
{
    need(radius >= 1, "hex patch needs radius >= 1");
    const long R = radius;
    std::vector<Axial> cells;
    for (long q = -R; q <= R; ++q)
        for (long r = -R; r <= R; ++r)
            if (hex_norm({q, r}) <= R)
                cells.push_back({q, r});
    std::set<Axial> in(cells.begin(), cells.end());
    std::vector<std::string> names;
    for (auto p : cells)
        names.push_back(hex_name(p));
    std::vector<std::array<std::string, 3>> tris;
    for (auto [q, r] : cells) {
        Axial a{q + 1, r}, b{q, r + 1}, c{q + 1, r - 1};
        if (in.count(a) && in.count(b))
            tris.push_back({hex_name({q, r}), hex_name(a), hex_name(b)});
        if (in.count(a) && in.count(c))
            tris.push_back({hex_name({q, r}), hex_name(a), hex_name(c)});
    }
    std::vector<std::string> boundary;
    Axial h{-R, R};
    for (int i = 0; i < 6; ++i)
        for (long j = 0; j < R; ++j) {
            boundary.push_back(hex_name(h));
            h = {h.first + hex_dirs[static_cast<std::size_t>(i)].first,
                 h.second + hex_dirs[static_cast<std::size_t>(i)].second};
        }
    return DiscTriangulation::from_names(names, tris, boundary);
}

namespace {

constexpr int kBoundary = 10;
constexpr int kInner = 4;
constexpr int kTotal = kBoundary + kInner;
constexpr std::size_t kArea = 16;

class SpecialSearch {
public:
    SpecialSurfaceSearch result;

    void run()
    {
        std::vector<int> cyc(kBoundary);
        std::iota(cyc.begin(), cyc.end(), 0);
        for (int i = 0; i < kBoundary; ++i)
            set_present(i, (i + 1) % kBoundary, true);
        polys_.push_back(cyc);
        dfs();
    }

private:
    bool present(int a, int b) const { return present_[a][b]; }
    void set_present(int a, int b, bool v) { present_[a][b] = present_[b][a] = v; }
    int cap(int v) const { return v < kBoundary ? 3 : 6; }

    bool has_triangle(int a, int b, int c) const
    {
        Triangle t{static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c)};
        std::sort(t.begin(), t.end());
        return std::find(tris_.begin(), tris_.end(), t) != tris_.end();
    }

    void leaf()
    {
        ++result.leaves;
        if (tris_.size() != kArea || fresh_ != kInner)
            return;
        int ones = 0, zeros = 0;
        for (int v = 0; v < kBoundary; ++v) {
            if (deg_[v] == 2)
                ++ones;
            else if (deg_[v] == 3)
                ++zeros;
        }
        if (ones != 6 || zeros != 4)
            return;
        for (int v = kBoundary; v < kTotal; ++v)
            if (deg_[v] < 6)
                return;
        int inner_tris = 0;
        for (const auto& t : tris_)
            inner_tris += t[0] >= static_cast<Vertex>(kBoundary);
        if (inner_tris != 2)
            return;
        std::vector<std::string> names;
        for (int i = 0; i < kTotal; ++i)
            names.push_back("s" + std::to_string(i));
        std::vector<Vertex> bd(kBoundary);
        std::iota(bd.begin(), bd.end(), 0);
        try {
            auto d = DiscTriangulation::from_indices(names, tris_, bd);
            if (!is_flag_disc(d) || !is_systolic_disc(d))
                return;
        } catch (const Error&) {
            return;
        }
        auto sorted = tris_;
        std::sort(sorted.begin(), sorted.end());
        result.labeled.push_back(sorted);
    }

    void place(int a, int b, int x, int pos, const std::vector<int>& P, std::size_t pi)
    {
        const int m = static_cast<int>(P.size());
        if (deg_[a] >= cap(a) || deg_[b] >= cap(b) || deg_[x] >= cap(x))
            return;
        auto saved = polys_;
        polys_.erase(polys_.begin() + static_cast<std::ptrdiff_t>(pi));
        std::vector<std::pair<int, int>> added;
        if (pos < 0) {
            std::vector<int> grown{a, x, b};
            for (int j = 2; j < m; ++j)
                grown.push_back(P[static_cast<std::size_t>(j)]);
            polys_.push_back(grown);
            added = {{a, x}, {b, x}};
            ++fresh_;
        } else {
            if (pos > 2) {
                std::vector<int> left{b};
                for (int k = 2; k <= pos; ++k)
                    left.push_back(P[static_cast<std::size_t>(k)]);
                polys_.push_back(left);
                added.push_back({b, x});
            }
            if (pos < m - 1) {
                std::vector<int> right;
                for (int k = pos; k < m; ++k)
                    right.push_back(P[static_cast<std::size_t>(k)]);
                right.push_back(a);
                polys_.push_back(right);
                added.push_back({a, x});
            }
        }
        Triangle t{static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(x)};
        std::sort(t.begin(), t.end());
        tris_.push_back(t);
        ++deg_[a];
        ++deg_[b];
        ++deg_[x];
        for (auto [p, q] : added)
            set_present(p, q, true);
        dfs();
        for (auto [p, q] : added)
            set_present(p, q, false);
        --deg_[a];
        --deg_[b];
        --deg_[x];
        tris_.pop_back();
        if (pos < 0)
            --fresh_;
        polys_ = saved;
    }

    void dfs()
    {
        if (polys_.empty()) {
            leaf();
            return;
        }
        if (tris_.size() >= kArea)
            return;
        // always work on the first edge of the last polygon
        const std::size_t pi = polys_.size() - 1;
        const std::vector<int> P = polys_[pi];
        const int m = static_cast<int>(P.size());
        const int a = P[0], b = P[1];
        for (int j = 2; j < m; ++j) {
            int x = P[static_cast<std::size_t>(j)];
            if (j != 2 && present(b, x))
                continue;
            if (j != m - 1 && present(a, x))
                continue;
            if (m == 3 && has_triangle(a, b, x))
                continue;
            place(a, b, x, j, P, pi);
        }
        if (fresh_ < kInner)
            place(a, b, kBoundary + fresh_, -1, P, pi);
    }

    std::vector<std::vector<int>> polys_;
    std::vector<Triangle> tris_;
    std::array<std::array<bool, kTotal>, kTotal> present_{};
    std::array<int, kTotal> deg_{};
    int fresh_ = 0;
};

}  // namespace

std::vector<Triangle> special_canonical_form(const std::vector<Triangle>& triangles)
{
    std::vector<Triangle> best;
    std::array<Vertex, kInner> inner{};
    for (int shift = 0; shift < kBoundary; ++shift)
        for (int dir : {1, -1}) {
            std::iota(inner.begin(), inner.end(), static_cast<Vertex>(kBoundary));
            do {
                std::vector<Triangle> img;
                for (const auto& t : triangles) {
                    Triangle m{};
                    for (int k = 0; k < 3; ++k) {
                        long v = t[static_cast<std::size_t>(k)];
                        m[static_cast<std::size_t>(k)] =
                            v < kBoundary ? static_cast<Vertex>(mod(shift + dir * v, kBoundary))
                                          : inner[static_cast<std::size_t>(v - kBoundary)];
                    }
                    std::sort(m.begin(), m.end());
                    img.push_back(m);
                }
                std::sort(img.begin(), img.end());
                if (best.empty() || img < best)
                    best = std::move(img);
            } while (std::next_permutation(inner.begin(), inner.end()));
        }
    return best;
}

SpecialSurfaceSearch special_surface_search()
{
    SpecialSearch s;
    s.run();
    std::set<std::vector<Triangle>> classes;
    for (const auto& t : s.result.labeled)
        classes.insert(special_canonical_form(t));
    s.result.classes.assign(classes.begin(), classes.end());
    return s.result;
}

const DiscTriangulation& gen_special_surface()
{
    static std::once_flag once;
    static DiscTriangulation disc;
    std::call_once(once, [] {
        auto found = special_surface_search();
        if (found.classes.size() != 1)
            throw Error(Errc::PreconditionFailed,
                        "special surface search found " + std::to_string(found.classes.size()) + " classes");
        std::vector<std::string> names;
        for (int i = 0; i < kTotal; ++i)
            names.push_back("s" + std::to_string(i));
        std::vector<Vertex> bd(kBoundary);
        std::iota(bd.begin(), bd.end(), 0);
        disc = DiscTriangulation::from_indices(names, found.classes.front(), bd);
    });
    return disc;
}

FlagComplex gen_bicycle_complex()
{
    const auto& d = gen_special_surface();
    return d.skeleton();
}

Surface special_surface_in_bicycle_complex()
{
    const auto& d = gen_special_surface();
    FlagComplex c = gen_bicycle_complex();
    std::vector<Vertex> cycle = d.boundary();
    std::vector<Triangle> tris = d.triangles();
    return surface_from_triangles(c, cycle, tris);
}

Permutation rim_permutation(const FlagComplex& complex, int modulus, const std::function<long(long)>& f)
{
    Permutation p(complex.size());
    for (Vertex v = 0; v < complex.size(); ++v) {
        const std::string& nm = complex.name(v);
        p[v] = v;
        if (nm.size() < 2 || (nm[0] != 'x' && nm[0] != 'y') ||
            !std::all_of(nm.begin() + 1, nm.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            continue;
        long i = std::stol(nm.substr(1));
        p[v] = complex.at(std::string(1, nm[0]) + std::to_string(mod(f(i), modulus)));
    }
    return p;
}

ActionSpec dihedral_rim_action(const FlagComplex& complex, int n, Axes axes)
{
    const int m = 2 * n;
    ActionSpec spec;
    if (axes == Axes::Vertex) {
        spec.generators.emplace_back('u', rim_permutation(complex, m, [](long i) { return -i; }));
        spec.generators.emplace_back('v', rim_permutation(complex, m, [](long i) { return 2 - i; }));
    } else {
        spec.generators.emplace_back('u', rim_permutation(complex, m, [](long i) { return 1 - i; }));
        spec.generators.emplace_back('v', rim_permutation(complex, m, [](long i) { return -1 - i; }));
    }
    spec.relations = dihedral_relations(n);
    spec.preset = "dihedral-" + std::to_string(n);
    return spec;
}

ActionSpec rim_rotation_action(const FlagComplex& complex, int modulus, int step)
{
    ActionSpec spec;
    spec.generators.emplace_back('g', rim_permutation(complex, modulus, [step](long i) { return i + step; }));
    const auto p = spec.generators[0].second;
    spec.relations = {power("g", static_cast<int>(permutation_order(p)))};
    return spec;
}

Permutation hex_rotation(const FlagComplex& patch)
{
    Permutation p(patch.size());
    for (Vertex v = 0; v < patch.size(); ++v) {
        auto [q, r] = parse_hex(patch.name(v));
        p[v] = patch.at(hex_name({-r, q + r}));
    }
    return p;
}

Permutation hex_reflection(const FlagComplex& patch)
{
    Permutation p(patch.size());
    for (Vertex v = 0; v < patch.size(); ++v) {
        auto [q, r] = parse_hex(patch.name(v));
        p[v] = patch.at(hex_name({r, q}));
    }
    return p;
}

}  // namespace systolic
