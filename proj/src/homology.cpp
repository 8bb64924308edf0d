#include "systolic/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>

namespace systolic {

TwoComplex TwoComplex::from_flag(const FlagComplex& complex)
{
    TwoComplex t;
    t.vertex_count = complex.size();
    t.edges = complex.edges();
    t.triangles = complex.triangles();
    return t;
}

TwoComplex TwoComplex::from_triangles(std::size_t vertex_count, const std::vector<Triangle>& triangles,
                                      const std::vector<Edge>& extra_edges)
{
    TwoComplex t;
    t.vertex_count = vertex_count;
    for (auto tri : triangles) {
        std::sort(tri.begin(), tri.end());
        if (tri[0] == tri[1] || tri[1] == tri[2])
            throw Error(Errc::SelfLoop, "degenerate triangle");
        if (tri[2] >= vertex_count)
            throw Error(Errc::UnknownVertex, "triangle vertex out of range");
        t.triangles.push_back(tri);
        t.edges.emplace_back(tri[0], tri[1]);
        t.edges.emplace_back(tri[0], tri[2]);
        t.edges.emplace_back(tri[1], tri[2]);
    }
    for (auto [a, b] : extra_edges) {
        if (a == b)
            throw Error(Errc::SelfLoop, "self-loop");
        if (std::max(a, b) >= vertex_count)
            throw Error(Errc::UnknownVertex, "edge vertex out of range");
        t.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(t.edges.begin(), t.edges.end());
    t.edges.erase(std::unique(t.edges.begin(), t.edges.end()), t.edges.end());
    std::sort(t.triangles.begin(), t.triangles.end());
    t.triangles.erase(std::unique(t.triangles.begin(), t.triangles.end()), t.triangles.end());
    return t;
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(Errc::ParameterOutOfRange, "integer overflow in Smith normal form");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error(Errc::ParameterOutOfRange, "integer overflow in Smith normal form");
    return r;
}

std::size_t component_count(std::size_t n, const std::vector<Edge>& edges)
{
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t comps = n;
    for (auto [a, b] : edges) {
        auto ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --comps;
        }
    }
    return comps;
}

std::size_t edge_index(const std::vector<Edge>& edges, Vertex a, Vertex b)
{
    Edge key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it == edges.end() || *it != key)
        throw Error(Errc::MissingEdge, "triangle edge missing from edge list");
    return static_cast<std::size_t>(it - edges.begin());
}

// Boundary of the triangle a<b<c: [a,b] + [b,c] - [a,c], as (edge, sign) pairs.
std::array<std::pair<std::size_t, int>, 3> triangle_boundary(const std::vector<Edge>& edges, const Triangle& t)
{
    return {{{edge_index(edges, t[0], t[1]), 1}, {edge_index(edges, t[1], t[2]), 1},
             {edge_index(edges, t[0], t[2]), -1}}};
}

TwoComplex normalized(const TwoComplex& c)
{
    TwoComplex t = c;
    for (auto& e : t.edges)
        if (e.first > e.second)
            std::swap(e.first, e.second);
    std::sort(t.edges.begin(), t.edges.end());
    t.edges.erase(std::unique(t.edges.begin(), t.edges.end()), t.edges.end());
    for (auto& tri : t.triangles)
        std::sort(tri.begin(), tri.end());
    return t;
}

}  // namespace

std::vector<std::int64_t> smith_invariants(std::vector<std::vector<std::int64_t>> m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::int64_t> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: smallest nonzero magnitude in the remaining block
        std::size_t pr = rows, pc = cols;
        std::int64_t best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
                    best = std::llabs(m[i][j]);
                    pr = i;
                    pc = j;
                }
        if (best == 0)
            break;
        std::swap(m[t], m[pr]);
        for (auto& row : m)
            std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            std::int64_t p = m[t][t];
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0)
                    continue;
                std::int64_t q = m[i][t] / p;
                for (std::size_t j = t; j < cols; ++j)
                    m[i][j] = checked_sub(m[i][j], checked_mul(q, m[t][j]));
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);
                    clean = false;
                    break;
                }
            }
            if (!clean)
                continue;
            p = m[t][t];
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0)
                    continue;
                std::int64_t q = m[t][j] / p;
                for (std::size_t i = t; i < rows; ++i)
                    m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][t]));
                if (m[t][j] != 0) {
                    for (auto& row : m)
                        std::swap(row[t], row[j]);
                    clean = false;
                    break;
                }
            }
        }
        diag.push_back(std::llabs(m[t][t]));
        ++t;
    }
    // enforce the divisibility chain
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            std::int64_t g = std::gcd(diag[i], diag[j]);
            std::int64_t l = checked_mul(diag[i] / g, diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

HomologySummary homology_h1(const TwoComplex& input)
{
    TwoComplex c = normalized(input);
    HomologySummary h;
    const std::size_t comps = component_count(c.vertex_count, c.edges);
    h.connected = c.vertex_count > 0 && comps == 1;
    std::vector<std::vector<std::int64_t>> d2(c.edges.size(), std::vector<std::int64_t>(c.triangles.size(), 0));
    for (std::size_t f = 0; f < c.triangles.size(); ++f)
        for (auto [e, s] : triangle_boundary(c.edges, c.triangles[f]))
            d2[e][f] += s;
    auto inv = smith_invariants(std::move(d2));
    const auto rank_d1 = static_cast<std::int64_t>(c.vertex_count - comps);
    h.h1_rank = static_cast<std::int64_t>(c.edges.size()) - rank_d1 - static_cast<std::int64_t>(inv.size());
    for (auto d : inv)
        if (d > 1)
            h.h1_torsion.push_back(d);
    return h;
}

HomologySummary homology_h1(const FlagComplex& complex) { return homology_h1(TwoComplex::from_flag(complex)); }

std::string to_string(Tristate t)
{
    switch (t) {
    case Tristate::Yes: return "yes";
    case Tristate::No: return "no";
    case Tristate::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

struct SpanningTree {
    std::vector<Vertex> parent;  // root points to itself
    std::vector<int> depth;
    std::vector<char> tree_edge;  // per edge index
};

SpanningTree bfs_tree(const TwoComplex& c)
{
    std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(c.vertex_count);
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
        adj[c.edges[i].first].emplace_back(c.edges[i].second, i);
        adj[c.edges[i].second].emplace_back(c.edges[i].first, i);
    }
    SpanningTree t;
    t.parent.assign(c.vertex_count, 0);
    t.depth.assign(c.vertex_count, -1);
    t.tree_edge.assign(c.edges.size(), 0);
    for (Vertex root = 0; root < c.vertex_count; ++root) {
        if (t.depth[root] >= 0)
            continue;
        t.depth[root] = 0;
        t.parent[root] = root;
        std::deque<Vertex> q{root};
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            for (auto [y, e] : adj[x])
                if (t.depth[y] < 0) {
                    t.depth[y] = t.depth[x] + 1;
                    t.parent[y] = x;
                    t.tree_edge[e] = 1;
                    q.push_back(y);
                }
        }
    }
    return t;
}

// Closed loop: tree path a..lca..b followed by the edge b-a.
std::vector<Vertex> fundamental_loop(const SpanningTree& t, Vertex a, Vertex b)
{
    std::vector<Vertex> up_a{a}, up_b{b};
    while (t.depth[up_a.back()] > t.depth[up_b.back()])
        up_a.push_back(t.parent[up_a.back()]);
    while (t.depth[up_b.back()] > t.depth[up_a.back()])
        up_b.push_back(t.parent[up_b.back()]);
    while (up_a.back() != up_b.back()) {
        up_a.push_back(t.parent[up_a.back()]);
        up_b.push_back(t.parent[up_b.back()]);
    }
    std::vector<Vertex> loop = up_a;
    for (auto it = up_b.rbegin() + 1; it != up_b.rend(); ++it)
        loop.push_back(*it);
    return loop;
}

std::int64_t smallest_prime_factor(std::int64_t n)
{
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return p;
    return n;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p)
{
    std::int64_t r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Loop whose homology class is nontrivial over F_p.
std::vector<Vertex> homology_witness(const TwoComplex& c, const SpanningTree& t, std::int64_t p)
{
    const std::size_t E = c.edges.size();
    std::vector<std::vector<std::int64_t>> basis;  // echelon rows, indexed by pivot
    std::vector<std::size_t> pivots;
    auto reduce = [&](std::vector<std::int64_t> v) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            std::int64_t f = v[pivots[k]];
            if (f == 0)
                continue;
            for (std::size_t i = 0; i < E; ++i)
                v[i] = ((v[i] - f * basis[k][i]) % p + p) % p;
        }
        return v;
    };
    auto insert = [&](std::vector<std::int64_t> v) {
        v = reduce(std::move(v));
        auto it = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
        if (it == v.end())
            return;
        std::size_t piv = static_cast<std::size_t>(it - v.begin());
        std::int64_t inv = mod_pow(v[piv], p - 2, p);
        for (auto& x : v)
            x = x * inv % p;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            std::int64_t f = basis[k][piv];
            if (f == 0)
                continue;
            for (std::size_t i = 0; i < E; ++i)
                basis[k][i] = ((basis[k][i] - f * v[i]) % p + p) % p;
        }
        basis.push_back(std::move(v));
        pivots.push_back(piv);
    };
    for (const auto& tri : c.triangles) {
        std::vector<std::int64_t> v(E, 0);
        for (auto [e, s] : triangle_boundary(c.edges, tri))
            v[e] = (v[e] + s + p) % p;
        insert(std::move(v));
    }
    for (std::size_t e = 0; e < E; ++e) {
        if (t.tree_edge[e])
            continue;
        auto [a, b] = c.edges[e];
        auto loop = fundamental_loop(t, a, b);
        std::vector<std::int64_t> v(E, 0);
        for (std::size_t i = 0; i < loop.size(); ++i) {
            Vertex x = loop[i], y = loop[(i + 1) % loop.size()];
            std::size_t idx = edge_index(c.edges, x, y);
            int s = x < y ? 1 : -1;
            v[idx] = (v[idx] + s + p) % p;
        }
        auto r = reduce(v);
        if (std::any_of(r.begin(), r.end(), [](std::int64_t x) { return x != 0; }))
            return loop;
    }
    return {};
}

using Word = std::vector<int>;

void free_reduce(Word& w)
{
    Word out;
    out.reserve(w.size());
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    // cyclic reduction
    std::size_t i = 0, j = out.size();
    while (j - i >= 2 && out[i] == -out[j - 1]) {
        ++i;
        --j;
    }
    w.assign(out.begin() + static_cast<std::ptrdiff_t>(i), out.begin() + static_cast<std::ptrdiff_t>(j));
}

}  // namespace

SimpleConnectivity is_simply_connected_bounded(const TwoComplex& input, std::size_t budget)
{
    TwoComplex c = normalized(input);
    SimpleConnectivity res;
    if (c.vertex_count == 0 || component_count(c.vertex_count, c.edges) != 1) {
        res.verdict = Tristate::No;
        res.reason = "disconnected";
        return res;
    }
    SpanningTree tree = bfs_tree(c);
    HomologySummary h = homology_h1(c);
    if (!h.trivial()) {
        std::int64_t p = h.h1_rank > 0 ? 1000003 : smallest_prime_factor(h.h1_torsion.front());
        res.verdict = Tristate::No;
        res.reason = "h1";
        res.witness_loop = homology_witness(c, tree, p);
        return res;
    }
    // generator ids: 1-based index among non-tree edges
    std::vector<int> gen(c.edges.size(), 0);
    int gens = 0;
    for (std::size_t e = 0; e < c.edges.size(); ++e)
        if (!tree.tree_edge[e])
            gen[e] = ++gens;
    auto letter = [&](Vertex x, Vertex y) {
        int g = gen[edge_index(c.edges, x, y)];
        return x < y ? g : -g;
    };
    std::vector<Word> rels;
    for (const auto& t : c.triangles) {
        Word w;
        for (int x : {letter(t[0], t[1]), letter(t[1], t[2]), letter(t[2], t[0])})
            if (x != 0)
                w.push_back(x);
        free_reduce(w);
        if (!w.empty())
            rels.push_back(std::move(w));
    }
    int live = gens;
    while (live > 0) {
        // shortest relator containing some generator exactly once
        std::size_t best = rels.size();
        int best_gen = 0;
        for (std::size_t r = 0; r < rels.size(); ++r) {
            if (best < rels.size() && rels[r].size() >= rels[best].size())
                continue;
            std::map<int, int> count;
            for (int x : rels[r])
                ++count[std::abs(x)];
            for (auto [g, k] : count)
                if (k == 1) {
                    best = r;
                    best_gen = g;
                    break;
                }
        }
        if (best == rels.size()) {
            res.verdict = Tristate::Unknown;
            res.reason = rels.empty() ? "free" : "stuck";
            res.remaining_generators = static_cast<std::size_t>(live);
            if (rels.empty()) {
                // no relators left: the group is free of positive rank
                res.verdict = Tristate::No;
                res.reason = "presentation";
            }
            return res;
        }
        Word rel = rels[best];
        auto pos = std::find_if(rel.begin(), rel.end(), [&](int x) { return std::abs(x) == best_gen; });
        std::rotate(rel.begin(), pos, rel.end());
        int sign = rel[0] > 0 ? 1 : -1;
        // g^sign * W = 1, so g = W^-1 when sign = +1 and g = W when sign = -1
        Word image(rel.begin() + 1, rel.end());
        if (sign > 0) {
            std::reverse(image.begin(), image.end());
            for (auto& x : image)
                x = -x;
        }
        Word image_inv(image.rbegin(), image.rend());
        for (auto& x : image_inv)
            x = -x;
        rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(best));
        std::vector<Word> next;
        next.reserve(rels.size());
        for (auto& w : rels) {
            Word out;
            for (int x : w) {
                if (x == best_gen)
                    out.insert(out.end(), image.begin(), image.end());
                else if (x == -best_gen)
                    out.insert(out.end(), image_inv.begin(), image_inv.end());
                else
                    out.push_back(x);
            }
            res.steps += out.size();
            free_reduce(out);
            if (!out.empty())
                next.push_back(std::move(out));
        }
        rels = std::move(next);
        --live;
        ++res.steps;
        if (res.steps > budget) {
            res.verdict = Tristate::Unknown;
            res.reason = "budget";
            res.remaining_generators = static_cast<std::size_t>(live);
            return res;
        }
    }
    res.verdict = Tristate::Yes;
    res.reason = "presentation";
    return res;
}

SimpleConnectivity is_simply_connected_bounded(const FlagComplex& complex, std::size_t budget)
{
    return is_simply_connected_bounded(TwoComplex::from_flag(complex), budget);
}

}  // namespace systolic
