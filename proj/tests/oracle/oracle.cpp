#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace oracle {

namespace {

using Tri = std::array<int, 3>;

Tri sorted3(int a, int b, int c)
{
    Tri t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

struct Completion {
    const FlagComplex& complex;
    std::vector<Vertex> verts;
    std::vector<Vertex> boundary;
    int m = 0;
    std::vector<int> count;
    std::vector<char> on_boundary;
    std::vector<Tri> chosen;
    std::size_t target = 0;

    int& cnt(int a, int b) { return count[static_cast<std::size_t>(a * m + b)]; }
    bool bd(int a, int b) const { return on_boundary[static_cast<std::size_t>(a * m + b)]; }
    bool adj(int a, int b) const { return complex.adjacent(verts[static_cast<std::size_t>(a)], verts[static_cast<std::size_t>(b)]); }

    void add(int a, int b, int d)
    {
        cnt(a, b) += d;
        cnt(b, a) += d;
    }

    bool search()
    {
        int ea = -1, eb = -1;
        for (int a = 0; a < m && ea < 0; ++a)
            for (int b = a + 1; b < m; ++b)
                if (bd(a, b) && cnt(a, b) == 0) {
                    ea = a, eb = b;
                    break;
                }
        for (int a = 0; a < m && ea < 0; ++a)
            for (int b = a + 1; b < m; ++b)
                if (!bd(a, b) && cnt(a, b) == 1) {
                    ea = a, eb = b;
                    break;
                }
        if (ea < 0)
            return chosen.size() == target && valid();
        if (chosen.size() >= target)
            return false;
        for (int c = 0; c < m; ++c) {
            if (c == ea || c == eb || !adj(ea, c) || !adj(eb, c))
                continue;
            Tri t = sorted3(ea, eb, c);
            if (std::find(chosen.begin(), chosen.end(), t) != chosen.end())
                continue;
            if (cnt(ea, c) + 1 > (bd(ea, c) ? 1 : 2) || cnt(eb, c) + 1 > (bd(eb, c) ? 1 : 2))
                continue;
            add(ea, eb, 1), add(ea, c, 1), add(eb, c, 1);
            chosen.push_back(t);
            if (search())
                return true;
            chosen.pop_back();
            add(ea, eb, -1), add(ea, c, -1), add(eb, c, -1);
        }
        return false;
    }

    bool valid() const
    {
        std::vector<Triangle> tris;
        for (const auto& t : chosen)
            tris.push_back({verts[static_cast<std::size_t>(t[0])], verts[static_cast<std::size_t>(t[1])],
                            verts[static_cast<std::size_t>(t[2])]});
        std::set<Vertex> used;
        for (const auto& t : tris)
            used.insert(t.begin(), t.end());
        return used.size() == verts.size() && is_disc(tris, boundary);
    }
};

bool try_fill(const FlagComplex& complex, const std::vector<Vertex>& cycle, const std::vector<Vertex>& interior)
{
    Completion s{complex, {}, cycle};
    s.verts = cycle;
    s.verts.insert(s.verts.end(), interior.begin(), interior.end());
    s.m = static_cast<int>(s.verts.size());
    s.count.assign(static_cast<std::size_t>(s.m * s.m), 0);
    s.on_boundary.assign(static_cast<std::size_t>(s.m * s.m), 0);
    const int l = static_cast<int>(cycle.size());
    for (int i = 0; i < l; ++i) {
        int j = (i + 1) % l;
        s.on_boundary[static_cast<std::size_t>(i * s.m + j)] = 1;
        s.on_boundary[static_cast<std::size_t>(j * s.m + i)] = 1;
    }
    s.target = cycle.size() + 2 * interior.size() - 2;
    return s.search();
}

// Calls fn on every k-subset of pool until it returns true.
template <class Fn>
bool any_subset(const std::vector<Vertex>& pool, std::size_t k, Fn&& fn)
{
    if (k > pool.size())
        return false;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Vertex> pick(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i)
            pick[i] = pool[idx[i]];
        if (fn(pick))
            return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == pool.size() - k + i - 1)
            --i;
        if (i == 0)
            return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

long rank_mod_p(std::vector<std::vector<long>> a, long p)
{
    long rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] % p == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[r]);
        auto inv = [&](long x) {
            long res = 1, e = p - 2;
            x = ((x % p) + p) % p;
            while (e) {
                if (e & 1)
                    res = res * x % p;
                x = x * x % p;
                e >>= 1;
            }
            return res;
        };
        long iv = inv(a[r][c]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] % p == 0)
                continue;
            long f = ((a[i][c] % p) + p) % p * iv % p;
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] = (((a[i][j] - f * a[r][j]) % p) + p) % p;
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace

std::optional<std::size_t> min_area(const FlagComplex& complex, const std::vector<Vertex>& cycle, int max_interior)
{
    std::vector<Vertex> pool;
    for (Vertex v = 0; v < complex.size(); ++v)
        if (std::find(cycle.begin(), cycle.end(), v) == cycle.end())
            pool.push_back(v);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(max_interior) && k <= pool.size(); ++k)
        if (any_subset(pool, k, [&](const std::vector<Vertex>& inner) { return try_fill(complex, cycle, inner); }))
            return cycle.size() + 2 * k - 2;
    return std::nullopt;
}

std::size_t count_cycles(const FlagComplex& complex, int length)
{
    const auto n = static_cast<Vertex>(complex.size());
    std::size_t total = 0;
    std::vector<char> on(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        auto dfs = [&](auto&& self, Vertex v, int depth) -> void {
            if (depth == length) {
                if (complex.adjacent(v, s))
                    ++total;
                return;
            }
            for (Vertex w = s + 1; w < n; ++w)
                if (!on[w] && complex.adjacent(v, w)) {
                    on[w] = 1;
                    self(self, w, depth + 1);
                    on[w] = 0;
                }
        };
        on[s] = 1;
        dfs(dfs, s, 1);
        on[s] = 0;
    }
    return total / 2;
}

bool brute_k_large(const FlagComplex& complex, int k)
{
    std::vector<Vertex> all(complex.size());
    std::iota(all.begin(), all.end(), 0);
    for (int len = 4; len < k; ++len) {
        bool found = any_subset(all, static_cast<std::size_t>(len), [&](const std::vector<Vertex>& s) {
            for (Vertex a : s) {
                int d = 0;
                for (Vertex b : s)
                    d += a != b && complex.adjacent(a, b);
                if (d != 2)
                    return false;
            }
            std::vector<Vertex> seen{s[0]}, stack{s[0]};
            while (!stack.empty()) {
                Vertex a = stack.back();
                stack.pop_back();
                for (Vertex b : s)
                    if (complex.adjacent(a, b) && std::find(seen.begin(), seen.end(), b) == seen.end()) {
                        seen.push_back(b);
                        stack.push_back(b);
                    }
            }
            return seen.size() == s.size();
        });
        if (found)
            return false;
    }
    return true;
}

long h1_rank_mod_p(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges,
                   const std::vector<Triangle>& triangles, long p)
{
    std::map<std::pair<Vertex, Vertex>, std::size_t> index;
    for (std::size_t i = 0; i < edges.size(); ++i)
        index[std::minmax(edges[i].first, edges[i].second)] = i;
    std::vector<std::vector<long>> d1(vertex_count, std::vector<long>(edges.size(), 0));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = std::minmax(edges[i].first, edges[i].second);
        d1[a][i] = p - 1;
        d1[b][i] = 1;
    }
    std::vector<std::vector<long>> d2(edges.size(), std::vector<long>(triangles.size(), 0));
    for (std::size_t j = 0; j < triangles.size(); ++j) {
        Triangle t = triangles[j];
        std::sort(t.begin(), t.end());
        d2[index.at({t[1], t[2]})][j] = 1;
        d2[index.at({t[0], t[2]})][j] = p - 1;
        d2[index.at({t[0], t[1]})][j] = 1;
    }
    return static_cast<long>(edges.size()) - rank_mod_p(d1, p) - rank_mod_p(d2, p);
}

bool is_disc(const std::vector<Triangle>& triangles, const std::vector<Vertex>& boundary)
{
    const std::size_t l = boundary.size();
    if (l < 3 || std::set<Vertex>(boundary.begin(), boundary.end()).size() != l)
        return false;
    std::set<Triangle> distinct;
    std::map<std::pair<Vertex, Vertex>, int> edge_count;
    std::set<Vertex> verts;
    for (Triangle t : triangles) {
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2] || !distinct.insert(t).second)
            return false;
        ++edge_count[{t[0], t[1]}];
        ++edge_count[{t[0], t[2]}];
        ++edge_count[{t[1], t[2]}];
        verts.insert(t.begin(), t.end());
    }
    std::set<std::pair<Vertex, Vertex>> bd;
    for (std::size_t i = 0; i < l; ++i)
        bd.insert(std::minmax(boundary[i], boundary[(i + 1) % l]));
    for (const auto& [e, k] : edge_count)
        if (k > 2 || (k == 1) != (bd.count(e) == 1))
            return false;
    for (const auto& e : bd)
        if (!edge_count.count(e))
            return false;
    const std::set<Vertex> bverts(boundary.begin(), boundary.end());
    for (Vertex v : verts) {
        std::map<Vertex, std::vector<Vertex>> link;
        std::size_t link_edges = 0;
        for (const auto& t : distinct) {
            if (std::find(t.begin(), t.end(), v) == t.end())
                continue;
            std::vector<Vertex> o;
            for (Vertex x : t)
                if (x != v)
                    o.push_back(x);
            link[o[0]].push_back(o[1]);
            link[o[1]].push_back(o[0]);
            ++link_edges;
        }
        std::size_t ends = 0;
        for (const auto& [x, ns] : link) {
            if (ns.size() > 2)
                return false;
            ends += ns.size() == 1;
        }
        const bool is_bd = bverts.count(v) == 1;
        if (is_bd ? (ends != 2 || link_edges + 1 != link.size()) : (ends != 0 || link_edges != link.size()))
            return false;
        std::set<Vertex> seen{link.begin()->first};
        std::vector<Vertex> stack{link.begin()->first};
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : link[x])
                if (seen.insert(y).second)
                    stack.push_back(y);
        }
        if (seen.size() != link.size())
            return false;
    }
    std::map<Vertex, Vertex> parent;
    for (Vertex v : verts)
        parent[v] = v;
    auto find = [&](Vertex v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [e, k] : edge_count)
        parent[find(e.first)] = find(e.second);
    for (Vertex v : verts)
        if (find(v) != find(*verts.begin()))
            return false;
    const long chi = static_cast<long>(verts.size()) - static_cast<long>(edge_count.size()) +
                     static_cast<long>(distinct.size());
    return chi == 1;
}

}  // namespace oracle
