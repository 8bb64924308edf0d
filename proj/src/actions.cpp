#include "systolic/actions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace systolic {

const Permutation& ActionSpec::generator(char name) const
{
    for (const auto& [g, p] : generators)
        if (g == name)
            return p;
    throw Error(Errc::PreconditionFailed, std::string("no generator named ") + name);
}

bool ActionSpec::has_generator(char name) const
{
    return std::any_of(generators.begin(), generators.end(), [&](const auto& g) { return g.first == name; });
}

Permutation identity_permutation(std::size_t n)
{
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation compose(const Permutation& first, const Permutation& then)
{
    Permutation p(first.size());
    for (std::size_t v = 0; v < first.size(); ++v)
        p[v] = then[first[v]];
    return p;
}

Permutation inverse(const Permutation& p)
{
    Permutation q(p.size());
    for (std::size_t v = 0; v < p.size(); ++v)
        q[p[v]] = static_cast<Vertex>(v);
    return q;
}

Permutation evaluate_word(const ActionSpec& spec, std::string_view word, std::size_t n)
{
    Permutation p = identity_permutation(n);
    for (char ch : word) {
        if (!spec.has_generator(ch))
            throw Error(Errc::ParseError, std::string("relation uses unknown generator ") + ch);
        const auto& g = spec.generator(ch);
        if (g.size() != n)
            throw Error(Errc::NotBijective, std::string("generator ") + ch + " has the wrong size");
        p = compose(p, g);
    }
    return p;
}

std::size_t permutation_order(const Permutation& p)
{
    std::size_t order = 1;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t v = 0; v < p.size(); ++v) {
        if (seen[v])
            continue;
        std::size_t len = 0;
        for (std::size_t x = v; !seen[x]; x = p[x]) {
            seen[x] = 1;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

std::string power(std::string_view w, int k)
{
    std::string out;
    for (int i = 0; i < k; ++i)
        out += w;
    return out;
}

std::vector<std::string> dihedral_relations(int n) { return {"uu", "vv", power("uv", n)}; }

std::vector<std::string> triangle_relations(int j)
{
    return {"rr", "ss", "tt", power("rs", 2), power("st", j), power("rt", 5)};
}

void verify_automorphism(const FlagComplex& complex, const Permutation& m)
{
    const std::size_t n = complex.size();
    if (m.size() != n)
        throw Error(Errc::NotBijective, "mapping is not total on the vertices");
    std::vector<char> hit(n, 0);
    for (Vertex x : m) {
        if (x >= n || hit[x])
            throw Error(Errc::NotBijective, "mapping is not a bijection");
        hit[x] = 1;
    }
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (complex.adjacent(a, b) != complex.adjacent(m[a], m[b]))
                throw Error(Errc::EdgeNotPreserved, "(" + complex.name(a) + "," + complex.name(b) + ") maps to (" +
                                                        complex.name(m[a]) + "," + complex.name(m[b]) + ")");
}

void verify_action(const FlagComplex& complex, const ActionSpec& spec)
{
    for (const auto& [g, p] : spec.generators)
        verify_automorphism(complex, p);
    for (const auto& w : spec.relations) {
        auto p = evaluate_word(spec, w, complex.size());
        for (Vertex v = 0; v < complex.size(); ++v)
            if (p[v] != v)
                throw Error(Errc::RelationViolated, "relation " + w + " moves " + complex.name(v));
    }
}

std::vector<Permutation> enumerate_group(const ActionSpec& spec, std::size_t n, std::size_t budget)
{
    std::set<Permutation> seen;
    std::vector<Permutation> out;
    std::deque<Permutation> queue;
    auto id = identity_permutation(n);
    seen.insert(id);
    out.push_back(id);
    queue.push_back(id);
    while (!queue.empty()) {
        auto g = queue.front();
        queue.pop_front();
        for (const auto& [name, p] : spec.generators) {
            auto h = compose(g, p);
            if (seen.insert(h).second) {
                if (out.size() >= budget)
                    throw Error(Errc::GroupEnumerationBudgetExceeded,
                                "more than " + std::to_string(budget) + " group elements");
                out.push_back(h);
                queue.push_back(std::move(h));
            }
        }
    }
    return out;
}

std::vector<Vertex> orbit(const ActionSpec& spec, std::size_t n, Vertex seed)
{
    std::vector<char> seen(n, 0);
    std::vector<Vertex> out{seed}, stack{seed};
    seen[seed] = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (const auto& [g, p] : spec.generators)
            if (!seen[p[x]]) {
                seen[p[x]] = 1;
                out.push_back(p[x]);
                stack.push_back(p[x]);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Vertex>> orbit(const ActionSpec& spec, std::size_t, std::vector<Vertex> seed)
{
    std::sort(seed.begin(), seed.end());
    std::set<std::vector<Vertex>> seen{seed};
    std::vector<std::vector<Vertex>> stack{seed};
    while (!stack.empty()) {
        auto s = stack.back();
        stack.pop_back();
        for (const auto& [g, p] : spec.generators) {
            std::vector<Vertex> img;
            for (Vertex x : s)
                img.push_back(p[x]);
            std::sort(img.begin(), img.end());
            if (seen.insert(img).second)
                stack.push_back(std::move(img));
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::vector<Vertex>> vertex_orbits(const ActionSpec& spec, std::size_t n)
{
    std::vector<std::vector<Vertex>> out;
    std::vector<char> done(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (done[v])
            continue;
        auto o = orbit(spec, n, v);
        for (Vertex x : o)
            done[x] = 1;
        out.push_back(std::move(o));
    }
    return out;
}

bool is_involution(const Permutation& u)
{
    for (std::size_t v = 0; v < u.size(); ++v)
        if (u[v] >= u.size() || u[u[v]] != v)
            return false;
    return true;
}

InvarianceSet invariance_set(const FlagComplex& complex, const Permutation& u)
{
    if (u.size() != complex.size() || !is_involution(u))
        throw Error(Errc::NotInvolution, "mapping is not an involution");
    InvarianceSet s;
    for (Vertex x = 0; x < complex.size(); ++x)
        if (u[x] == x || complex.adjacent(x, u[x]))
            s.vertices.push_back(x);
    s.carrier = complex.full_subcomplex(s.vertices);
    return s;
}

std::vector<Vertex> intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
{
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

namespace {

bool member(const std::vector<Vertex>& sorted, Vertex x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

std::vector<Vertex> image(const Permutation& p, const std::vector<Vertex>& s)
{
    std::vector<Vertex> out;
    for (Vertex x : s)
        out.push_back(p[x]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> set_union(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
{
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string names_of(const FlagComplex& c, const std::vector<Vertex>& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + c.name(s[i]);
    return out + "}";
}

}  // namespace

XuReport verify_Xu_properties(const FlagComplex& complex, const Permutation& u)
{
    auto xu = invariance_set(complex, u);
    const auto& car = xu.carrier;
    XuReport r;
    const std::size_t m = xu.vertices.size();
    for (std::size_t i = 0; i < m && r.full; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (complex.adjacent(xu.vertices[i], xu.vertices[j]) !=
                car.complex.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) {
                r.full = false;
                r.violations.push_back("full: " + complex.name(xu.vertices[i]) + "," + complex.name(xu.vertices[j]));
                break;
            }
    for (std::size_t i = 0; i < m && r.isometric; ++i) {
        auto inner = distances_from(car.complex, static_cast<Vertex>(i));
        auto outer = distances_from(complex, xu.vertices[i]);
        for (std::size_t j = 0; j < m; ++j)
            if (inner[j] != outer[xu.vertices[j]]) {
                r.isometric = false;
                r.violations.push_back("isometric: " + complex.name(xu.vertices[i]) + "," +
                                       complex.name(xu.vertices[j]));
                break;
            }
    }
    if (auto loc = is_locally_6_large(car.complex); !loc) {
        r.locally_6_large = false;
        r.violations.push_back("locally-6-large: link of " + car.complex.name(*loc.vertex));
    }
    for (const auto& sigma : car.complex.maximal_cliques()) {
        std::vector<Vertex> parent;
        for (Vertex x : sigma)
            parent.push_back(car.to_parent[x]);
        if (image(u, parent) != parent) {
            r.stable_maximal_simplices = false;
            r.violations.push_back("stable-maximal: " + names_of(complex, parent));
            break;
        }
    }
    return r;
}

std::vector<Vertex> u_invariant_simplex_from_clique(const FlagComplex& complex, const Permutation& u,
                                                    const std::vector<Vertex>& clique)
{
    auto xu = invariance_set(complex, u);
    std::vector<Vertex> s = clique;
    std::sort(s.begin(), s.end());
    for (Vertex x : s)
        if (!member(xu.vertices, x))
            throw Error(Errc::PreconditionFailed, complex.name(x) + " is not in X_u");
    if (!complex.is_clique(s))
        throw Error(Errc::PreconditionFailed, "input is not a clique");
    for (Vertex a : s)
        for (Vertex b : s)
            if (a != u[b] && !complex.adjacent(a, u[b]))
                throw Error(Errc::MissingEdge, complex.name(a) + " is not adjacent to the image of " + complex.name(b));
    auto out = set_union(s, image(u, s));
    if (!complex.is_clique(out))
        throw Error(Errc::MissingEdge, names_of(complex, out) + " is not a clique");
    return out;
}

std::vector<Vertex> commuting_orbit_simplex(const FlagComplex& complex, const Permutation& u, const Permutation& v,
                                            Vertex x)
{
    if (compose(u, v) != compose(v, u))
        throw Error(Errc::PreconditionFailed, "u and v do not commute");
    auto xu = invariance_set(complex, u);
    auto xv = invariance_set(complex, v);
    if (!member(xu.vertices, x) || !member(xv.vertices, x))
        throw Error(Errc::PreconditionFailed, complex.name(x) + " is not in X_u and X_v");
    std::vector<Vertex> out{x, u[x], v[x], u[v[x]]};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (!complex.is_clique(out))
        throw Error(Errc::MissingEdge, names_of(complex, out) + " is not a clique");
    return out;
}

std::vector<Vertex> mid_simplex(const FlagComplex& complex, const Permutation& u, Vertex x)
{
    if (u.size() != complex.size() || !is_involution(u))
        throw Error(Errc::NotInvolution, "mapping is not an involution");
    auto d = distance(complex, x, u[x]);
    if (!d || *d != 2)
        throw Error(Errc::WrongDistance, "d(x, x^u) is " + std::to_string(d.value_or(-1)) + ", not 2");
    Vertex pair[2] = {x, u[x]};
    auto common = complex.common_neighbors(pair);
    if (!complex.is_clique(common) || image(u, common) != common)
        throw Error(Errc::MissingEdge, names_of(complex, common) + " is not a u-invariant simplex");
    return common;
}

std::vector<Vertex> geodesic_in_Xu(const FlagComplex& complex, const Permutation& u, Vertex x, Vertex y)
{
    auto xu = invariance_set(complex, u);
    auto pos = [&](Vertex v) -> Vertex {
        auto it = std::lower_bound(xu.vertices.begin(), xu.vertices.end(), v);
        if (it == xu.vertices.end() || *it != v)
            throw Error(Errc::PreconditionFailed, complex.name(v) + " is not in X_u");
        return static_cast<Vertex>(it - xu.vertices.begin());
    };
    Vertex lx = pos(x), ly = pos(y);
    auto inner = shortest_path(xu.carrier.complex, lx, ly);
    auto d = distance(complex, x, y);
    if (!inner || !d || inner->size() != static_cast<std::size_t>(*d) + 1)
        throw Error(Errc::NoSuchPath, "no geodesic of the complex inside X_u");
    std::vector<Vertex> out;
    for (Vertex v : *inner)
        out.push_back(xu.carrier.to_parent[v]);
    return out;
}

std::optional<std::vector<Vertex>> invariant_simplex_search(const FlagComplex& complex, const ActionSpec& spec,
                                                            std::size_t budget)
{
    enumerate_group(spec, complex.size(), budget);
    std::vector<std::vector<Vertex>> orbits;
    for (auto& o : vertex_orbits(spec, complex.size()))
        if (complex.is_clique(o))
            orbits.push_back(std::move(o));
    const std::size_t k = orbits.size();
    std::vector<std::vector<char>> joined(k, std::vector<char>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            bool all = i != j;
            for (Vertex a : orbits[i])
                for (Vertex b : orbits[j])
                    all = all && complex.adjacent(a, b);
            joined[i][j] = all;
        }
    std::optional<std::vector<Vertex>> best;
    std::vector<std::size_t> chosen;
    std::vector<Vertex> current;
    // every clique of the orbit graph is a candidate
    auto dfs = [&](auto&& self, std::size_t from) -> void {
        for (std::size_t i = from; i < k; ++i) {
            bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return joined[c][i]; });
            if (!ok)
                continue;
            auto saved = current;
            current = set_union(current, orbits[i]);
            if (!best || current < *best)
                best = current;
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
            current = std::move(saved);
        }
    };
    dfs(dfs, 0);
    return best;
}

DihedralOrbit hamiltonian_or_simplex(const FlagComplex& complex, const ActionSpec& spec, Vertex a)
{
    const auto& u = spec.generator('u');
    const auto& v = spec.generator('v');
    auto xu = invariance_set(complex, u);
    auto xv = invariance_set(complex, v);
    if (!member(xu.vertices, a) || !member(xv.vertices, a))
        throw Error(Errc::HypothesisViolated, complex.name(a) + " is not in X_u and X_v");
    DihedralOrbit r;
    r.n = static_cast<int>(permutation_order(compose(u, v)));
    ActionSpec h;
    h.generators = {{'u', u}, {'v', v}};
    r.orbit = orbit(h, complex.size(), a);
    if (complex.is_clique(r.orbit)) {
        r.simplex = true;
        return r;
    }
    // p_k = a^(w_k) with w_k alternating in v and u and ending in u
    const int len = 2 * r.n;
    for (int k = 0; k < len; ++k) {
        Vertex x = a;
        for (int i = 0; i < k; ++i) {
            bool use_u = (k - 1 - i) % 2 == 0;
            x = (use_u ? u : v)[x];
        }
        r.cycle.push_back(x);
    }
    auto sorted = r.cycle;
    std::sort(sorted.begin(), sorted.end());
    bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (!distinct || sorted != r.orbit)
        throw Error(Errc::DichotomyViolated, "orbit of " + complex.name(a) + " is neither a simplex nor a " +
                                                 std::to_string(len) + "-cycle");
    if (!is_valid_cycle(complex, r.cycle) || has_diagonal(complex, r.cycle))
        throw Error(Errc::DichotomyViolated, "orbit cycle of " + complex.name(a) + " has a diagonal");
    return r;
}

std::string to_string(BicycleCase c)
{
    switch (c) {
    case BicycleCase::SimplexCase: return "simplex";
    case BicycleCase::CycleCase: return "cycle";
    case BicycleCase::Violation: return "violation";
    }
    return "violation";
}

BicycleReport bicycle_check(const FlagComplex& complex, const ActionSpec& spec, Vertex a, const BicycleOptions& opt)
{
    const auto& u = spec.generator('u');
    const auto& v = spec.generator('v');
    verify_action(complex, spec);
    auto xu = invariance_set(complex, u);
    auto xv = invariance_set(complex, v);
    auto both = intersect(xu.vertices, xv.vertices);
    const auto n = permutation_order(compose(u, v));
    std::string hypothesis;
    if (n > 5)
        hypothesis = "n = " + std::to_string(n) + " exceeds 5";
    else if (!member(both, a))
        hypothesis = complex.name(a) + " is not in X_u and X_v";
    else if (opt.verify_systolic && !check_systolic(complex, opt.budget).systolic())
        hypothesis = "complex is not certified systolic";
    if (!hypothesis.empty() && opt.strict)
        throw Error(Errc::HypothesisViolated, hypothesis);

    BicycleReport r;
    ActionSpec h;
    h.generators = {{'u', u}, {'v', v}};
    r.orbit = orbit(h, complex.size(), a);
    DihedralOrbit d;
    try {
        d = hamiltonian_or_simplex(complex, spec, a);
    } catch (const Error& e) {
        if (e.code() != Errc::DichotomyViolated && e.code() != Errc::HypothesisViolated)
            throw;
        r.kind = BicycleCase::Violation;
        r.failed_clause = e.code() == Errc::DichotomyViolated ? "dichotomy" : "hypothesis";
        return r;
    }
    if (d.simplex) {
        r.kind = BicycleCase::SimplexCase;
        return r;
    }
    r.hamiltonian_cycle = d.cycle;
    const std::vector<Vertex> cyc_sorted = r.orbit;

    std::string first_failure;
    auto try_b = [&](Vertex b) {
        auto sigma = orbit(h, complex.size(), b);
        std::string fail;
        if (!complex.is_clique(sigma))
            fail = "sigma-simplex";
        else if (!std::all_of(cyc_sorted.begin(), cyc_sorted.end(), [&](Vertex c) {
                     return std::all_of(sigma.begin(), sigma.end(), [&](Vertex s) { return complex.adjacent(c, s); });
                 }))
            fail = "bipartite";
        else if (!std::all_of(sigma.begin(), sigma.end(), [&](Vertex s) { return member(both, s); }))
            fail = "sigma-in-XuXv";
        if (!fail.empty()) {
            if (first_failure.empty())
                first_failure = fail;
            return false;
        }
        r.b = b;
        r.sigma = sigma;
        r.bipartite_ok = true;
        r.sigma_in_Xu_Xv = true;
        return true;
    };
    const auto& cyc = d.cycle;
    Vertex three[3] = {cyc.back(), cyc[0], cyc[1]};
    for (Vertex b : complex.common_neighbors(three))
        if (try_b(b)) {
            r.kind = BicycleCase::CycleCase;
            r.witness_source = "common-neighbours";
            return r;
        }
    for (Vertex b = 0; b < complex.size(); ++b)
        if (!member(cyc_sorted, b) && try_b(b)) {
            r.kind = BicycleCase::CycleCase;
            r.witness_source = "exhaustive";
            return r;
        }
    r.kind = BicycleCase::Violation;
    r.failed_clause = first_failure.empty() ? "no-witness" : first_failure;
    return r;
}

namespace {

// All shortest paths from x to y inside the carrier, at most `cap` of them.
std::vector<std::vector<Vertex>> carrier_geodesics(const InvarianceSet& xs, Vertex x, Vertex y, std::size_t cap)
{
    const auto& car = xs.carrier;
    auto local = [&](Vertex v) {
        return static_cast<Vertex>(std::lower_bound(xs.vertices.begin(), xs.vertices.end(), v) - xs.vertices.begin());
    };
    Vertex lx = local(x), ly = local(y);
    auto to_y = distances_from(car.complex, ly);
    std::vector<std::vector<Vertex>> out;
    if (to_y[lx] < 0)
        return out;
    std::vector<Vertex> path{lx};
    auto dfs = [&](auto&& self) -> void {
        if (out.size() >= cap)
            return;
        Vertex t = path.back();
        if (t == ly) {
            std::vector<Vertex> p;
            for (Vertex w : path)
                p.push_back(car.to_parent[w]);
            out.push_back(std::move(p));
            return;
        }
        for (Vertex w : car.complex.neighbors(t))
            if (to_y[w] == to_y[t] - 1) {
                path.push_back(w);
                self(self);
                path.pop_back();
            }
    };
    dfs(dfs);
    return out;
}

int carrier_distance(const InvarianceSet& xs, Vertex x, Vertex y)
{
    auto local = [&](Vertex v) {
        return static_cast<Vertex>(std::lower_bound(xs.vertices.begin(), xs.vertices.end(), v) - xs.vertices.begin());
    };
    return distances_from(xs.carrier.complex, local(x))[local(y)];
}

}  // namespace

CornerSurface corner_surface(const FlagComplex& complex, const Permutation& r, const Permutation& s,
                             const Permutation& t)
{
    auto xr = invariance_set(complex, r);
    auto xs = invariance_set(complex, s);
    auto xt = invariance_set(complex, t);
    auto A = intersect(xs.vertices, xr.vertices);
    auto B = intersect(xs.vertices, xt.vertices);
    auto C = intersect(xr.vertices, xt.vertices);
    if (A.empty())
        throw Error(Errc::EmptyIntersection, "X_s and X_r are disjoint");
    if (B.empty())
        throw Error(Errc::EmptyIntersection, "X_s and X_t are disjoint");
    if (C.empty())
        throw Error(Errc::EmptyIntersection, "X_r and X_t are disjoint");

    struct Triple {
        int perimeter;
        Vertex x, y, z;
    };
    std::vector<Triple> triples;
    for (Vertex x : A)
        for (Vertex y : B)
            for (Vertex z : C) {
                int a = carrier_distance(xs, x, y), b = carrier_distance(xt, y, z), c = carrier_distance(xr, z, x);
                if (a < 0 || b < 0 || c < 0)
                    continue;
                triples.push_back({a + b + c, x, y, z});
            }
    std::sort(triples.begin(), triples.end(), [](const Triple& p, const Triple& q) {
        return std::tie(p.perimeter, p.x, p.y, p.z) < std::tie(q.perimeter, q.x, q.y, q.z);
    });

    constexpr std::size_t cap = 64;
    std::optional<CornerSurface> best;
    int best_perimeter = -1;
    for (const auto& tr : triples) {
        if (best && tr.perimeter > best_perimeter)
            break;
        auto gs = carrier_geodesics(xs, tr.x, tr.y, cap);
        auto gt = carrier_geodesics(xt, tr.y, tr.z, cap);
        auto gr = carrier_geodesics(xr, tr.z, tr.x, cap);
        for (const auto& p1 : gs)
            for (const auto& p2 : gt)
                for (const auto& p3 : gr) {
                    std::vector<Vertex> cycle(p1.begin(), p1.end() - 1);
                    cycle.insert(cycle.end(), p2.begin(), p2.end() - 1);
                    cycle.insert(cycle.end(), p3.begin(), p3.end() - 1);
                    if (!is_valid_cycle(complex, cycle))
                        continue;
                    auto fill = fill_minimal(complex, cycle, isoperimetric_budget(cycle.size()));
                    if (fill.status != FillStatus::Filled)
                        continue;
                    if (best && fill.area >= best->surface.area())
                        continue;
                    CornerSurface cs;
                    cs.corners = {tr.x, tr.y, tr.z};
                    cs.sides = {p1, p2, p3};
                    cs.cycle = cycle;
                    cs.surface = std::move(*fill.surface);
                    best = std::move(cs);
                    best_perimeter = tr.perimeter;
                }
    }
    if (!best)
        throw Error(Errc::PreconditionFailed, "no corner triple spans a fillable embedded cycle");
    return std::move(*best);
}

TriangleSurfaceResult triangle_surface(const FlagComplex& complex, const ActionSpec& spec, std::size_t budget)
{
    verify_action(complex, spec);
    const auto& r = spec.generator('r');
    const auto& s = spec.generator('s');
    const auto& t = spec.generator('t');
    auto xr = invariance_set(complex, r);
    auto xs = invariance_set(complex, s);
    auto xt = invariance_set(complex, t);
    auto triple = intersect(intersect(xr.vertices, xs.vertices), xt.vertices);
    TriangleSurfaceResult res;
    if (triple.empty()) {
        res.surface = corner_surface(complex, r, s, t);
        return res;
    }
    res.degenerate = true;
    auto pair_orbit = [&](char g, char h, Vertex x) {
        ActionSpec sub;
        sub.generators = {{g, spec.generator(g)}, {h, spec.generator(h)}};
        return orbit(sub, complex.size(), x);
    };
    for (Vertex x : triple) {
        auto M = set_union(set_union(pair_orbit('r', 's', x), pair_orbit('r', 't', x)), pair_orbit('s', 't', x));
        auto span = set_union(set_union(M, image(t, M)), set_union(image(s, M), image(r, M)));
        bool invariant = true;
        for (const auto& [g, p] : spec.generators)
            invariant = invariant && image(p, span) == span;
        if (invariant && complex.is_clique(span)) {
            res.fixed_corner = x;
            res.invariant_simplex = span;
            res.simplex_source = "orbit-span";
            return res;
        }
    }
    res.fixed_corner = triple.front();
    if (auto found = invariant_simplex_search(complex, spec, budget)) {
        res.invariant_simplex = *found;
        res.simplex_source = "search";
    }
    return res;
}

}  // namespace systolic
