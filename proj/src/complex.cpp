#include "systolic/complex.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "systolic/parallel.hpp"

namespace systolic {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Compares digit runs by value, other characters bytewise. Falls back to
// plain comparison so that the order is total ("x01" vs "x1").
int natural_compare(std::string_view a, std::string_view b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (is_digit(a[i]) && is_digit(b[j])) {
            std::size_t i0 = i, j0 = j;
            while (i0 < a.size() && a[i0] == '0')
                ++i0;
            while (j0 < b.size() && b[j0] == '0')
                ++j0;
            std::size_t i1 = i0, j1 = j0;
            while (i1 < a.size() && is_digit(a[i1]))
                ++i1;
            while (j1 < b.size() && is_digit(b[j1]))
                ++j1;
            if (i1 - i0 != j1 - j0)
                return i1 - i0 < j1 - j0 ? -1 : 1;
            if (int c = a.substr(i0, i1 - i0).compare(b.substr(j0, j1 - j0)); c != 0)
                return c < 0 ? -1 : 1;
            i = i1;
            j = j1;
        } else {
            if (a[i] != b[j])
                return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]) ? -1 : 1;
            ++i;
            ++j;
        }
    }
    if (i < a.size() || j < b.size())
        return i < a.size() ? 1 : -1;
    int c = a.compare(b);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) { return natural_compare(a, b) < 0; }

FlagComplex FlagComplex::from_indexed_edges(std::vector<std::string> names, const std::vector<Edge>& edges)
{
    const std::size_t n_in = names.size();
    std::vector<std::size_t> order(n_in);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return natural_less(names[x], names[y]); });

    FlagComplex c;
    std::vector<Vertex> remap(n_in);
    for (std::size_t k = 0; k < n_in; ++k) {
        const std::string& nm = names[order[k]];
        if (c.names_.empty() || c.names_.back() != nm)
            c.names_.push_back(nm);
        remap[order[k]] = static_cast<Vertex>(c.names_.size() - 1);
    }
    const std::size_t n = c.names_.size();
    for (Vertex v = 0; v < n; ++v)
        c.index_.emplace(c.names_[v], v);
    c.words_ = (n + 63) / 64;
    c.bits_.assign(n * c.words_, 0);
    c.adjacency_.assign(n, {});
    for (auto [a, b] : edges) {
        if (a >= n_in || b >= n_in)
            throw Error(Errc::UnknownVertex, "edge index out of range");
        Vertex x = remap[a], y = remap[b];
        if (x == y)
            throw Error(Errc::SelfLoop, "self-loop at " + c.names_[x]);
        if (c.adjacent(x, y))
            continue;
        c.bits_[x * c.words_ + (y >> 6)] |= std::uint64_t{1} << (y & 63);
        c.bits_[y * c.words_ + (x >> 6)] |= std::uint64_t{1} << (x & 63);
        c.adjacency_[x].push_back(y);
        c.adjacency_[y].push_back(x);
        ++c.edge_count_;
    }
    for (auto& nb : c.adjacency_)
        std::sort(nb.begin(), nb.end());
    return c;
}

FlagComplex FlagComplex::from_edge_list(std::vector<std::string> vertices,
                                        const std::vector<std::pair<std::string, std::string>>& edges)
{
    std::map<std::string, Vertex, std::less<>> idx;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        idx.emplace(vertices[i], static_cast<Vertex>(i));
    std::vector<Edge> indexed;
    indexed.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = idx.find(a);
        auto ib = idx.find(b);
        if (ia == idx.end())
            throw Error(Errc::UnknownVertex, "edge mentions undeclared vertex " + a);
        if (ib == idx.end())
            throw Error(Errc::UnknownVertex, "edge mentions undeclared vertex " + b);
        if (a == b)
            throw Error(Errc::SelfLoop, "self-loop at " + a);
        indexed.emplace_back(ia->second, ib->second);
    }
    return from_indexed_edges(std::move(vertices), indexed);
}

std::optional<Vertex> FlagComplex::find(std::string_view name) const
{
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Vertex FlagComplex::at(std::string_view name) const
{
    if (auto v = find(name))
        return *v;
    throw Error(Errc::UnknownVertex, "no vertex named " + std::string(name));
}

std::vector<Edge> FlagComplex::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex a = 0; a < size(); ++a)
        for (Vertex b : adjacency_[a])
            if (a < b)
                out.emplace_back(a, b);
    return out;
}

bool FlagComplex::is_clique(std::span<const Vertex> vertices) const
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || !adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

std::vector<Triangle> FlagComplex::triangles() const
{
    std::vector<Triangle> out;
    for (Vertex a = 0; a < size(); ++a)
        for (Vertex b : adjacency_[a]) {
            if (b <= a)
                continue;
            for (Vertex c : adjacency_[b])
                if (c > b && adjacent(a, c))
                    out.push_back({a, b, c});
        }
    return out;
}

std::vector<Vertex> FlagComplex::common_neighbors(std::span<const Vertex> vertices) const
{
    std::vector<Vertex> out;
    if (vertices.empty())
        return out;
    for (Vertex x : adjacency_.at(vertices[0])) {
        bool all = true;
        for (std::size_t i = 1; i < vertices.size() && all; ++i)
            all = adjacent(x, vertices[i]);
        if (all)
            out.push_back(x);
    }
    return out;
}

std::vector<std::vector<Vertex>> FlagComplex::maximal_cliques() const
{
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> current;
    // Bron-Kerbosch with pivoting.
    std::function<void(std::vector<Vertex>, std::vector<Vertex>)> expand =
        [&](std::vector<Vertex> cand, std::vector<Vertex> excl) {
            if (cand.empty()) {
                if (excl.empty()) {
                    auto clique = current;
                    std::sort(clique.begin(), clique.end());
                    out.push_back(std::move(clique));
                }
                return;
            }
            Vertex pivot = cand[0];
            std::size_t best = 0;
            for (const auto* pool : {&cand, &excl})
                for (Vertex u : *pool) {
                    std::size_t cnt = 0;
                    for (Vertex w : cand)
                        cnt += adjacent(u, w);
                    if (cnt > best || (cnt == best && u == cand[0])) {
                        best = cnt;
                        pivot = u;
                    }
                }
            std::vector<Vertex> todo;
            for (Vertex w : cand)
                if (!adjacent(pivot, w))
                    todo.push_back(w);
            for (Vertex w : todo) {
                std::vector<Vertex> nc, ne;
                for (Vertex x : cand)
                    if (adjacent(w, x))
                        nc.push_back(x);
                for (Vertex x : excl)
                    if (adjacent(w, x))
                        ne.push_back(x);
                current.push_back(w);
                expand(std::move(nc), std::move(ne));
                current.pop_back();
                cand.erase(std::find(cand.begin(), cand.end(), w));
                excl.push_back(w);
            }
        };
    std::vector<Vertex> all(size());
    std::iota(all.begin(), all.end(), 0);
    expand(all, {});
    std::sort(out.begin(), out.end());
    return out;
}

Subcomplex FlagComplex::full_subcomplex(std::span<const Vertex> vertices) const
{
    std::vector<Vertex> keep(vertices.begin(), vertices.end());
    for (Vertex v : keep)
        if (v >= size())
            throw Error(Errc::UnknownVertex, "vertex index out of range");
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<std::string> nm;
    nm.reserve(keep.size());
    for (Vertex v : keep)
        nm.push_back(names_[v]);
    std::vector<Edge> e;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j]))
                e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    // names are already in natural order, so indices survive unchanged
    return Subcomplex{from_indexed_edges(std::move(nm), e), std::move(keep)};
}

FlagComplex FlagComplex::link(Vertex v) const
{
    if (v >= size())
        throw Error(Errc::UnknownVertex, "vertex index out of range");
    return full_subcomplex(adjacency_[v]).complex;
}

Cycle canonical_cycle(std::vector<Vertex> vertices)
{
    Cycle c;
    if (vertices.empty())
        return c;
    auto it = std::min_element(vertices.begin(), vertices.end());
    std::rotate(vertices.begin(), it, vertices.end());
    if (vertices.size() > 2 && vertices.back() < vertices[1])
        std::reverse(vertices.begin() + 1, vertices.end());
    c.vertices = std::move(vertices);
    return c;
}

bool is_valid_path(const FlagComplex& complex, std::span<const Vertex> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= complex.size())
            return false;
        if (i > 0 && !complex.adjacent(vertices[i - 1], vertices[i]))
            return false;
    }
    return true;
}

bool is_valid_cycle(const FlagComplex& complex, std::span<const Vertex> vertices)
{
    const std::size_t n = vertices.size();
    if (n < 3 || !is_valid_path(complex, vertices))
        return false;
    if (!complex.adjacent(vertices[n - 1], vertices[0]))
        return false;
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

namespace {

// Simple cycles through `start` whose other vertices are all larger; each
// cycle is reported once by requiring path[1] < path.back().
void cycles_from(const FlagComplex& c, Vertex start, int min_len, int max_len, std::vector<Cycle>& out)
{
    std::vector<Vertex> path{start};
    std::vector<char> on(c.size(), 0);
    on[start] = 1;
    std::function<void()> dfs = [&] {
        Vertex tail = path.back();
        for (Vertex w : c.neighbors(tail)) {
            if (w <= start || on[w])
                continue;
            path.push_back(w);
            on[w] = 1;
            int len = static_cast<int>(path.size());
            if (len >= min_len && len >= 3 && c.adjacent(w, start) && path[1] < w)
                out.push_back(Cycle{path});
            if (len < max_len)
                dfs();
            on[w] = 0;
            path.pop_back();
        }
    };
    dfs();
}

// Chordless cycles through `start` (the minimum vertex) of length 4..max_len.
void chordless_from(const FlagComplex& c, Vertex start, int max_len, std::vector<Cycle>& out)
{
    std::vector<Vertex> path{start};
    std::function<void()> dfs = [&] {
        Vertex tail = path.back();
        const int len = static_cast<int>(path.size());
        for (Vertex w : c.neighbors(tail)) {
            if (w <= start)
                continue;
            bool ok = true;
            // w may touch only the tail and possibly the start
            for (std::size_t i = 1; i + 1 < path.size() && ok; ++i)
                if (path[i] == w || c.adjacent(path[i], w))
                    ok = false;
            if (!ok || w == tail)
                continue;
            bool closes = len >= 2 && c.adjacent(w, start);
            if (closes) {
                if (len + 1 >= 4 && path[1] < w) {
                    auto cyc = path;
                    cyc.push_back(w);
                    out.push_back(Cycle{std::move(cyc)});
                }
                continue;
            }
            if (len + 1 < max_len) {
                path.push_back(w);
                dfs();
                path.pop_back();
            }
        }
    };
    dfs();
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const FlagComplex& complex, int min_length, int max_length)
{
    std::vector<std::vector<Cycle>> per(complex.size());
    parallel_for(complex.size(), [&](std::size_t s) {
        cycles_from(complex, static_cast<Vertex>(s), min_length, max_length, per[s]);
    });
    std::vector<Cycle> out;
    for (auto& p : per)
        out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    for (auto& cyc : out)
        cyc = canonical_cycle(std::move(cyc.vertices));
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length())
            return a.length() < b.length();
        return a.vertices < b.vertices;
    });
    return out;
}

std::vector<Cycle> embedded_cycles_shorter_than(const FlagComplex& complex, int k)
{
    if (k < 4)
        throw Error(Errc::ParameterOutOfRange, "k must be at least 4");
    return enumerate_cycles(complex, 4, k - 1);
}

bool has_diagonal(const FlagComplex& complex, std::span<const Vertex> cycle)
{
    if (!is_valid_cycle(complex, cycle))
        throw Error(Errc::InvalidCycle, "not an embedded cycle of the complex");
    const std::size_t n = cycle.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1)
                continue;
            if (complex.adjacent(cycle[i], cycle[j]))
                return true;
        }
    return false;
}

LargenessResult is_k_large(const FlagComplex& complex, int k)
{
    if (k < 4)
        throw Error(Errc::ParameterOutOfRange, "k must be at least 4");
    LargenessResult res;
    if (k == 4)
        return res;
    std::vector<Cycle> found;
    for (Vertex s = 0; s < complex.size(); ++s)
        chordless_from(complex, s, k - 1, found);
    if (found.empty())
        return res;
    for (auto& cyc : found)
        cyc = canonical_cycle(std::move(cyc.vertices));
    auto best = std::min_element(found.begin(), found.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length())
            return a.length() < b.length();
        return a.vertices < b.vertices;
    });
    res.large = false;
    res.witness = *best;
    return res;
}

LocalLargenessResult is_locally_6_large(const FlagComplex& complex)
{
    std::vector<LargenessResult> per(complex.size());
    std::vector<Subcomplex> links(complex.size());
    parallel_for(complex.size(), [&](std::size_t v) {
        links[v] = complex.full_subcomplex(complex.neighbors(static_cast<Vertex>(v)));
        per[v] = is_k_large(links[v].complex, 6);
    });
    LocalLargenessResult res;
    for (Vertex v = 0; v < complex.size(); ++v) {
        if (per[v])
            continue;
        res.locally_6_large = false;
        res.vertex = v;
        std::vector<Vertex> mapped;
        for (Vertex x : per[v].witness->vertices)
            mapped.push_back(links[v].to_parent[x]);
        res.cycle = canonical_cycle(std::move(mapped));
        break;
    }
    return res;
}

std::vector<int> distances_from(const FlagComplex& complex, Vertex source)
{
    if (source >= complex.size())
        throw Error(Errc::UnknownVertex, "vertex index out of range");
    std::vector<int> dist(complex.size(), -1);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : complex.neighbors(x))
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    return dist;
}

std::optional<int> distance(const FlagComplex& complex, Vertex a, Vertex b)
{
    if (b >= complex.size())
        throw Error(Errc::UnknownVertex, "vertex index out of range");
    int d = distances_from(complex, a)[b];
    if (d < 0)
        return std::nullopt;
    return d;
}

std::optional<std::vector<Vertex>> shortest_path(const FlagComplex& complex, Vertex a, Vertex b)
{
    auto to_b = distances_from(complex, b);
    if (a >= complex.size() || to_b[a] < 0)
        return std::nullopt;
    std::vector<Vertex> path{a};
    while (path.back() != b) {
        Vertex x = path.back();
        for (Vertex y : complex.neighbors(x))
            if (to_b[y] == to_b[x] - 1) {
                path.push_back(y);
                break;
            }
    }
    return path;
}

std::vector<std::vector<Vertex>> connected_components(const FlagComplex& complex)
{
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(complex.size(), 0);
    for (Vertex s = 0; s < complex.size(); ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (Vertex y : complex.neighbors(x))
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const FlagComplex& complex)
{
    return !complex.empty() && connected_components(complex).size() == 1;
}

}  // namespace systolic
