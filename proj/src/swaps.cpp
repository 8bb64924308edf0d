#include "systolic/swaps.hpp"

#include <algorithm>

namespace systolic {

namespace {

[[noreturn]] void bad_label(const std::string& why) { throw Error(Errc::InvalidLabeling, why); }

bool is_ambient_geodesic(const FlagComplex& complex, const Surface& s, const std::vector<Vertex>& side)
{
    auto d = distance(complex, s.embedding[side.front()], s.embedding[side.back()]);
    return d && static_cast<std::size_t>(*d) + 1 == side.size();
}

std::array<int, 3> side_defects(const LabeledSurface& ls)
{
    std::array<int, 3> out{};
    for (int i = 0; i < 3; ++i)
        out[static_cast<std::size_t>(i)] = defect_along(ls.surface.disc, ls.sides[static_cast<std::size_t>(i)]);
    return out;
}

std::array<int, 3> corner_defects(const LabeledSurface& ls)
{
    std::array<int, 3> out{};
    for (std::size_t i = 0; i < 3; ++i)
        out[i] = defect(ls.surface.disc, ls.corners[i]);
    return out;
}

}  // namespace

LabeledSurface label_surface(const FlagComplex& complex, Surface surface, std::array<Vertex, 3> corners)
{
    const auto& disc = surface.disc;
    const auto L = static_cast<int>(disc.boundary().size());
    std::array<int, 3> pos{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (corners[i] >= disc.size() || !disc.on_boundary(corners[i]))
            bad_label("corner is not a boundary vertex");
        pos[i] = disc.boundary_position(corners[i]);
    }
    int d01 = (pos[1] - pos[0] + L) % L, d02 = (pos[2] - pos[0] + L) % L;
    if (d01 == 0 || d02 == 0 || d01 == d02)
        bad_label("corners are not distinct");
    if (d01 > d02)
        bad_label("corners are not in boundary order");
    LabeledSurface ls{std::move(surface), corners, {}};
    for (std::size_t i = 0; i < 3; ++i)
        ls.sides[i] = boundary_arc(ls.surface.disc, static_cast<std::size_t>(pos[i]),
                                   static_cast<std::size_t>(pos[(i + 1) % 3]));
    verify_labeling(complex, ls);
    return ls;
}

void verify_labeling(const FlagComplex& complex, const LabeledSurface& ls)
{
    const auto& disc = ls.surface.disc;
    std::vector<Vertex> joined;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& side = ls.sides[i];
        if (side.size() < 2 || side.front() != ls.corners[i] || side.back() != ls.corners[(i + 1) % 3])
            bad_label("side " + std::to_string(i) + " does not run between its corners");
        if (!is_ambient_geodesic(complex, ls.surface, side))
            bad_label("side " + std::to_string(i) + " is not a geodesic of the complex");
        joined.insert(joined.end(), side.begin(), side.end() - 1);
    }
    const auto& bd = disc.boundary();
    if (joined.size() != bd.size())
        bad_label("sides do not partition the boundary");
    auto it = std::find(bd.begin(), bd.end(), joined.front());
    if (it == bd.end())
        bad_label("sides leave the boundary");
    std::vector<Vertex> rotated(it, bd.end());
    rotated.insert(rotated.end(), bd.begin(), it);
    if (rotated != joined)
        bad_label("sides do not follow the boundary");
}

int side_of_move(const LabeledSurface& ls, Vertex p, Vertex q)
{
    for (int i = 0; i < 3; ++i) {
        const auto& s = ls.sides[static_cast<std::size_t>(i)];
        for (std::size_t k = 1; k + 2 < s.size(); ++k)
            if ((s[k] == p && s[k + 1] == q) || (s[k] == q && s[k + 1] == p))
                return i;
    }
    return -1;
}

LabeledSurface edge_swap(const FlagComplex& complex, const LabeledSurface& ls, const SwapMove& mv)
{
    const auto& disc = ls.surface.disc;
    const auto& emb = ls.surface.embedding;
    for (Vertex x : {mv.p, mv.q, mv.m, mv.m2})
        if (x >= disc.size())
            throw Error(Errc::MoveInvalid, "move names an unknown vertex");
    if (side_of_move(ls, mv.p, mv.q) < 0)
        throw Error(Errc::MoveInvalid, "p and q are not adjacent inner vertices of a side");
    if (mv.m == mv.m2 || !disc.has_triangle(mv.p, mv.q, mv.m) || !disc.has_triangle(mv.q, mv.m, mv.m2))
        throw Error(Errc::MoveInvalid, "triangles pqm and qmm' are not both in the surface");
    if (mv.p == mv.m2 || disc.skeleton().adjacent(mv.p, mv.m2))
        throw Error(Errc::MoveInvalid, "p and m' are already joined in the surface");
    if (!complex.adjacent(emb[mv.p], emb[mv.m2]))
        throw Error(Errc::MissingAmbientEdge,
                    complex.name(emb[mv.p]) + " and " + complex.name(emb[mv.m2]) + " are not adjacent");
    auto sorted = [](Triangle t) {
        std::sort(t.begin(), t.end());
        return t;
    };
    const Triangle gone1 = sorted({mv.p, mv.q, mv.m}), gone2 = sorted({mv.q, mv.m, mv.m2});
    std::vector<Triangle> tris;
    for (const auto& t : disc.triangles())
        if (t != gone1 && t != gone2)
            tris.push_back(t);
    tris.push_back({mv.p, mv.m, mv.m2});
    tris.push_back({mv.p, mv.m2, mv.q});
    LabeledSurface out = ls;
    try {
        out.surface.disc = DiscTriangulation::from_indices(disc.names(), tris, disc.boundary());
    } catch (const Error& e) {
        throw Error(Errc::MoveInvalid, std::string("swap breaks the disc: ") + e.what());
    }
    std::vector<Vertex> cycle;
    for (Vertex v : disc.boundary())
        cycle.push_back(emb[v]);
    if (auto chk = verify_surface(complex, out.surface, cycle); !chk)
        throw Error(Errc::MoveInvalid, "swapped surface fails clause " + chk.clause);
    return out;
}

std::optional<SwapMove> find_swap(const FlagComplex& complex, const LabeledSurface& ls, int side, Vertex p, Vertex q)
{
    const auto& disc = ls.surface.disc;
    if (side < 0 || side > 2 || side_of_move(ls, p, q) != side)
        throw Error(Errc::DefectPatternMismatch, "p and q are not adjacent inner vertices of the side");
    if (defect(disc, p) != 1 || defect(disc, q) != 0)
        throw Error(Errc::DefectPatternMismatch, "defects of p and q are " + std::to_string(defect(disc, p)) + " and " +
                                                     std::to_string(defect(disc, q)) + ", not 1 and 0");
    auto opp = disc.opposite(p, q);
    if (opp.size() != 1)
        return std::nullopt;
    SwapMove mv{p, q, opp[0], 0};
    auto opp2 = disc.opposite(q, mv.m);
    opp2.erase(std::remove(opp2.begin(), opp2.end(), p), opp2.end());
    if (opp2.size() != 1)
        return std::nullopt;
    mv.m2 = opp2[0];
    if (disc.skeleton().adjacent(p, mv.m2))
        return std::nullopt;
    const auto& emb = ls.surface.embedding;
    Vertex simplex[4] = {emb[p], emb[q], emb[mv.m], emb[mv.m2]};
    if (!complex.is_clique(simplex))
        throw Error(Errc::MissingAmbientEdge, "p, q, m, m' do not span a simplex of the complex");
    return mv;
}

LabeledSurface shift_defect_to_corner(const FlagComplex& complex, const LabeledSurface& ls, int side, int corner,
                                      int* swaps_done)
{
    if (side < 0 || side > 2 || (corner != 0 && corner != 1))
        throw Error(Errc::PreconditionFailed, "side must be 0..2 and corner 0 or 1");
    LabeledSurface cur = ls;
    std::vector<Vertex> inner(cur.sides[static_cast<std::size_t>(side)].begin() + 1,
                              cur.sides[static_cast<std::size_t>(side)].end() - 1);
    if (corner == 1)
        std::reverse(inner.begin(), inner.end());
    std::size_t k = 0;
    while (k < inner.size() && defect(cur.surface.disc, inner[k]) == 0)
        ++k;
    if (k == inner.size() || defect(cur.surface.disc, inner[k]) != 1)
        throw Error(Errc::PreconditionFailed, "nearest nonzero inner defect is not 1");
    int done = 0;
    for (; k > 0; --k) {
        auto mv = find_swap(complex, cur, side, inner[k], inner[k - 1]);
        if (!mv)
            throw Error(Errc::PreconditionFailed, "no edge-swap available");
        cur = edge_swap(complex, cur, *mv);
        ++done;
    }
    if (swaps_done)
        *swaps_done = done;
    return cur;
}

SwapEffectReport swap_effect_report(const LabeledSurface& before, const LabeledSurface& after, const SwapMove& move)
{
    SwapEffectReport r;
    r.side = side_of_move(before, move.p, move.q);
    r.side_defect_before = side_defects(before);
    r.side_defect_after = side_defects(after);
    r.corner_defect_before = corner_defects(before);
    r.corner_defect_after = corner_defects(after);
    if (r.side < 0) {
        r.violations.push_back("move is not on a side");
        return r;
    }
    const auto s = static_cast<std::size_t>(r.side);
    if (r.side_defect_before[s] != r.side_defect_after[s])
        r.violations.push_back("defect of the swapped side changed");
    for (std::size_t i = 0; i < 3; ++i)
        if (i != s && std::abs(r.side_defect_before[i] - r.side_defect_after[i]) > 1)
            r.violations.push_back("defect of side " + std::to_string(i) + " changed by more than 1");
    for (std::size_t c : {s, (s + 1) % 3})
        if (r.corner_defect_before[c] != r.corner_defect_after[c])
            r.violations.push_back("defect of corner " + std::to_string(c) + " on the swapped side changed");
    const std::size_t third = (s + 2) % 3;
    if ((r.corner_defect_before[third] == 2) != (r.corner_defect_after[third] == 2))
        r.violations.push_back("third corner gained or lost defect 2");
    return r;
}

}  // namespace systolic
