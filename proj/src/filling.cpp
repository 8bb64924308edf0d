#include "systolic/filling.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "systolic/systolicity.hpp"

namespace systolic {

std::vector<Triangle> Surface::image_triangles() const
{
    std::vector<Triangle> out;
    for (const auto& t : disc.triangles()) {
        Triangle m{embedding[t[0]], embedding[t[1]], embedding[t[2]]};
        std::sort(m.begin(), m.end());
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool same_cycle(std::vector<Vertex> a, std::vector<Vertex> b)
{
    if (a.size() != b.size())
        return false;
    return canonical_cycle(std::move(a)) == canonical_cycle(std::move(b));
}

}  // namespace

SurfaceCheck verify_surface(const FlagComplex& complex, const Surface& s, const std::vector<Vertex>& cycle)
{
    SurfaceCheck r;
    auto fail = [&](const char* clause) {
        r.ok = false;
        r.clause = clause;
        return r;
    };
    if (s.embedding.size() != s.disc.size())
        return fail("size");
    for (Vertex x : s.embedding)
        if (x >= complex.size())
            return fail("size");
    {
        auto img = s.embedding;
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end())
            return fail("injective");
    }
    for (auto [a, b] : s.disc.skeleton().edges())
        if (!complex.adjacent(s.embedding[a], s.embedding[b]))
            return fail("edges");
    // flagness of the ambient makes every image of a disc triangle a simplex
    for (const auto& t : s.disc.triangles()) {
        Vertex tri[3] = {s.embedding[t[0]], s.embedding[t[1]], s.embedding[t[2]]};
        if (!complex.is_clique(tri))
            return fail("triangles");
    }
    std::vector<Vertex> bd;
    for (Vertex v : s.disc.boundary())
        bd.push_back(s.embedding[v]);
    if (!same_cycle(bd, cycle))
        return fail("boundary");
    return r;
}

Surface surface_from_triangles(const FlagComplex& complex, const std::vector<Vertex>& cycle,
                               const std::vector<Triangle>& triangles)
{
    std::map<Vertex, Vertex> local;
    Permutation embedding;
    for (Vertex v : cycle) {
        local.emplace(v, static_cast<Vertex>(embedding.size()));
        embedding.push_back(v);
    }
    std::set<Vertex> extra;
    for (const auto& t : triangles)
        for (Vertex x : t)
            if (!local.count(x))
                extra.insert(x);
    for (Vertex v : extra) {
        local.emplace(v, static_cast<Vertex>(embedding.size()));
        embedding.push_back(v);
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < embedding.size(); ++i)
        names.push_back("d" + std::to_string(i));
    std::vector<Triangle> tris;
    for (const auto& t : triangles)
        tris.push_back({local.at(t[0]), local.at(t[1]), local.at(t[2])});
    std::vector<Vertex> bd;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        bd.push_back(static_cast<Vertex>(i));
    (void)complex;
    return Surface{DiscTriangulation::from_indices(std::move(names), tris, bd), std::move(embedding)};
}

std::string to_string(FillStatus s)
{
    switch (s) {
    case FillStatus::Filled: return "filled";
    case FillStatus::NoFilling: return "no-filling";
    case FillStatus::BudgetExhausted: return "budget-exhausted";
    }
    return "unknown";
}

std::size_t isoperimetric_budget(std::size_t length) { return length * length / 6; }

namespace {

// Polygon-reduction search. Each pending polygon is a region still to be
// triangulated; the triangle on a chosen polygon edge either uses another
// polygon vertex (ear or split) or an unused vertex, which joins the polygon.
class FillSearch {
public:
    FillSearch(const FlagComplex& c, const std::vector<Vertex>& cycle, int fresh_limit)
        : c_(c), n_(c.size()), fresh_limit_(fresh_limit), used_(n_, 0), present_(n_ * n_, 0)
    {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            used_[cycle[i]] = 1;
            set_present(cycle[i], cycle[(i + 1) % cycle.size()], 1);
        }
        polys_.push_back(cycle);
    }

    void run() { dfs(); }

    const std::optional<std::vector<Triangle>>& best() const { return best_; }
    std::size_t count() const { return count_; }
    std::size_t nodes() const { return nodes_; }

private:
    struct Move {
        Vertex x;
        int pos;  // index in the rotated polygon, -1 for an unused vertex
    };

    bool present(Vertex a, Vertex b) const { return present_[a * n_ + b]; }
    void set_present(Vertex a, Vertex b, char v)
    {
        present_[a * n_ + b] = v;
        present_[b * n_ + a] = v;
    }

    bool has_triangle(Vertex a, Vertex b, Vertex x) const
    {
        Triangle t{a, b, x};
        std::sort(t.begin(), t.end());
        return std::find(sorted_tris_.begin(), sorted_tris_.end(), t) != sorted_tris_.end();
    }

    // Moves for the edge (P[i], P[i+1]); stops early once `cap` is exceeded.
    void moves(const std::vector<Vertex>& P, std::size_t i, std::vector<Move>& out, std::size_t cap) const
    {
        const std::size_t m = P.size();
        const Vertex a = P[i], b = P[(i + 1) % m];
        for (std::size_t j = 2; j < m; ++j) {
            Vertex x = P[(i + j) % m];
            if (!c_.adjacent(x, a) || !c_.adjacent(x, b))
                continue;
            if (j != 2 && present(b, x))
                continue;
            if (j != m - 1 && present(a, x))
                continue;
            if (m == 3 && has_triangle(a, b, x))
                continue;
            out.push_back({x, static_cast<int>(j)});
            if (out.size() > cap)
                return;
        }
        if (fresh_ < fresh_limit_)
            for (Vertex x : c_.neighbors(a)) {
                if (used_[x] || !c_.adjacent(x, b))
                    continue;
                out.push_back({x, -1});
                if (out.size() > cap)
                    return;
            }
    }

    void record()
    {
        std::vector<Triangle> t = sorted_tris_;
        std::sort(t.begin(), t.end());
        ++count_;
        if (!best_ || t < *best_)
            best_ = std::move(t);
    }

    void dfs()
    {
        ++nodes_;
        if (polys_.empty()) {
            record();
            return;
        }
        // most constrained edge over all pending polygons
        std::size_t best_p = 0, best_i = 0;
        std::vector<Move> chosen, scratch;
        bool have = false;
        for (std::size_t p = 0; p < polys_.size(); ++p)
            for (std::size_t i = 0; i < polys_[p].size(); ++i) {
                scratch.clear();
                std::size_t cap = have ? chosen.size() : static_cast<std::size_t>(-1);
                moves(polys_[p], i, scratch, cap);
                if (!have || scratch.size() < chosen.size()) {
                    have = true;
                    chosen = scratch;
                    best_p = p;
                    best_i = i;
                    if (chosen.empty())
                        return;
                }
            }
        const std::vector<Vertex> P = polys_[best_p];
        const std::size_t m = P.size();
        const Vertex a = P[best_i], b = P[(best_i + 1) % m];
        const auto saved = polys_;
        for (const Move& mv : chosen) {
            polys_ = saved;
            polys_.erase(polys_.begin() + static_cast<std::ptrdiff_t>(best_p));
            Triangle tri{a, b, mv.x};
            std::sort(tri.begin(), tri.end());
            sorted_tris_.push_back(tri);
            std::vector<Edge> added;
            if (mv.pos < 0) {
                std::vector<Vertex> grown{a, mv.x, b};
                for (std::size_t j = 2; j < m; ++j)
                    grown.push_back(P[(best_i + j) % m]);
                polys_.push_back(std::move(grown));
                used_[mv.x] = 1;
                ++fresh_;
                added = {{a, mv.x}, {b, mv.x}};
            } else {
                const auto j = static_cast<std::size_t>(mv.pos);
                if (j > 2) {
                    std::vector<Vertex> left{b};
                    for (std::size_t k = 2; k <= j; ++k)
                        left.push_back(P[(best_i + k) % m]);
                    polys_.push_back(std::move(left));
                    added.push_back({b, mv.x});
                }
                if (j < m - 1) {
                    std::vector<Vertex> right;
                    for (std::size_t k = j; k < m; ++k)
                        right.push_back(P[(best_i + k) % m]);
                    right.push_back(a);
                    polys_.push_back(std::move(right));
                    added.push_back({a, mv.x});
                }
            }
            for (auto [x, y] : added)
                set_present(x, y, 1);
            dfs();
            for (auto [x, y] : added)
                set_present(x, y, 0);
            if (mv.pos < 0) {
                used_[mv.x] = 0;
                --fresh_;
            }
            sorted_tris_.pop_back();
        }
        polys_ = saved;
    }

    const FlagComplex& c_;
    std::size_t n_;
    int fresh_limit_;
    int fresh_ = 0;
    std::vector<char> used_;
    std::vector<char> present_;
    std::vector<std::vector<Vertex>> polys_;
    std::vector<Triangle> sorted_tris_;
    std::optional<std::vector<Triangle>> best_;
    std::size_t count_ = 0;
    std::size_t nodes_ = 0;
};

}  // namespace

FillResult fill_minimal(const FlagComplex& complex, const std::vector<Vertex>& cycle, std::size_t area_budget)
{
    if (!is_valid_cycle(complex, cycle))
        throw Error(Errc::InvalidCycle, "not an embedded cycle of the complex");
    FillResult res;
    res.budget = area_budget;
    const auto l = static_cast<long>(cycle.size());
    const long k_max = (static_cast<long>(area_budget) - l + 2) / 2;
    for (long k = 0; k <= k_max && static_cast<long>(area_budget) >= l - 2; ++k) {
        FillSearch search(complex, cycle, static_cast<int>(k));
        search.run();
        res.nodes += search.nodes();
        if (search.best()) {
            res.status = FillStatus::Filled;
            res.surface = surface_from_triangles(complex, cycle, *search.best());
            res.area = res.surface->area();
            res.minimal_count = search.count();
            return res;
        }
    }
    res.status = area_budget < isoperimetric_budget(cycle.size()) ? FillStatus::BudgetExhausted
                                                                   : FillStatus::NoFilling;
    return res;
}

FillResult fill_minimal(const FlagComplex& complex, const std::vector<Vertex>& cycle)
{
    if (!check_systolic(complex).systolic())
        throw Error(Errc::PreconditionFailed, "complex is not certified systolic; supply an area budget");
    return fill_minimal(complex, cycle, isoperimetric_budget(cycle.size()));
}

MinimalSystolicReport assert_minimal_is_systolic(const FlagComplex& complex, const std::vector<Vertex>& cycle,
                                                 bool certify)
{
    if (certify && !check_systolic(complex).systolic())
        throw Error(Errc::PreconditionFailed, "complex is not certified systolic");
    MinimalSystolicReport r;
    r.fill = fill_minimal(complex, cycle, isoperimetric_budget(cycle.size()));
    if (r.fill.status != FillStatus::Filled) {
        r.failure = to_string(r.fill.status);
        return r;
    }
    try {
        auto s = is_systolic_disc(r.fill.surface->disc);
        r.systolic = s.systolic;
        r.witness = s.witness;
        if (!s.systolic)
            r.failure = "interior-defect";
    } catch (const Error& e) {
        if (e.code() != Errc::NotFlag)
            throw;
        r.failure = "not-flag";
    }
    return r;
}

}  // namespace systolic
