#include <doctest.h>

#include "swap_corpus.hpp"
#include "support.hpp"

using namespace systolic;
using namespace swap_corpus;

namespace {

Errc code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::ParseError;
}

Vertex bd(const DiscTriangulation& d, std::size_t i) { return ring(d)[i]; }

/// Radius-2 patch with corners at boundary positions 0, 4, 8; in side 0 the
/// inner defects read 0, 1, 0 and the diagonal for the swap at (b2, b3) is present.
Case hex2()
{
    auto d = gen_hex_patch(2);
    auto diag = diagonals(d, {{bd(d, 2), bd(d, 3)}});
    REQUIRE(diag);
    auto c = labeled(d, ambient(d, *diag), {0, 4, 8});
    REQUIRE(c);
    return *c;
}

}  // namespace

TEST_SUITE("swaps")
{
    TEST_CASE("labelling")
    {
        auto c = hex2();
        const auto& d = c.surface.surface.disc;
        CHECK(c.surface.sides[0].size() == 5);
        CHECK(c.surface.sides[0].front() == bd(d, 0));
        CHECK(c.surface.sides[2].back() == bd(d, 0));
        verify_labeling(c.ambient, c.surface);

        auto bad = c.surface;
        std::swap(bad.corners[1], bad.corners[2]);
        CHECK(code_of([&] { verify_labeling(c.ambient, bad); }) == Errc::InvalidLabeling);
        // side 0 would run over five edges between vertices at distance four
        CHECK_FALSE(labeled(d, c.ambient, {0, 5, 8}));
        CHECK(code_of([&] { label_surface(c.ambient, c.surface.surface, {bd(d, 0), bd(d, 0), bd(d, 4)}); }) ==
              Errc::InvalidLabeling);
    }

    TEST_CASE("a swap moves the defect along the side")
    {
        auto c = hex2();
        const auto& d = c.surface.surface.disc;
        Vertex p = bd(d, 2), q = bd(d, 3);
        CHECK(defect(d, p) == 1);
        CHECK(defect(d, q) == 0);
        auto mv = find_swap(c.ambient, c.surface, 0, p, q);
        REQUIRE(mv);
        CHECK(d.name(mv->m) == "h0_1");
        CHECK(d.name(mv->m2) == "h1_0");
        auto after = edge_swap(c.ambient, c.surface, *mv);
        const auto& d2 = after.surface.disc;
        CHECK(defect(d2, p) == 0);
        CHECK(defect(d2, q) == 1);
        CHECK(d2.skeleton().adjacent(p, mv->m2));
        CHECK_FALSE(d2.skeleton().adjacent(q, mv->m));
        CHECK(gauss_bonnet_sum(d2) == 6);

        auto rep = swap_effect_report(c.surface, after, *mv);
        CHECK(rep.ok());
        CHECK(rep.side == 0);
        CHECK(rep.side_defect_before == rep.side_defect_after);

        // the reverse quadrilateral restores the surface
        auto back = edge_swap(c.ambient, after, {q, p, mv->m2, mv->m});
        CHECK(back.surface.disc == d);
    }

    TEST_CASE("move errors")
    {
        auto c = hex2();
        const auto& d = c.surface.surface.disc;
        CHECK(code_of([&] { find_swap(c.ambient, c.surface, 0, bd(d, 1), bd(d, 0)); }) == Errc::DefectPatternMismatch);
        CHECK(code_of([&] { find_swap(c.ambient, c.surface, 0, bd(d, 3), bd(d, 2)); }) == Errc::DefectPatternMismatch);
        CHECK(code_of([&] { find_swap(c.ambient, c.surface, 1, bd(d, 2), bd(d, 3)); }) == Errc::DefectPatternMismatch);

        // without the diagonal in the ambient complex
        auto plain = labeled(d, ambient(d, {}), {0, 4, 8});
        REQUIRE(plain);
        CHECK(code_of([&] { find_swap(plain->ambient, plain->surface, 0, bd(d, 2), bd(d, 3)); }) ==
              Errc::MissingAmbientEdge);
        auto mv = find_swap(c.ambient, c.surface, 0, bd(d, 2), bd(d, 3));
        REQUIRE(mv);
        CHECK(code_of([&] { edge_swap(plain->ambient, plain->surface, *mv); }) == Errc::MissingAmbientEdge);
        auto wrong = *mv;
        std::swap(wrong.m, wrong.m2);
        CHECK(code_of([&] { edge_swap(c.ambient, c.surface, wrong); }) == Errc::MoveInvalid);
    }

    TEST_CASE("shifting a defect to a corner")
    {
        // radius-3 patch, sides of length six, inner defects 0, 0, 1, 0, 0
        auto d = gen_hex_patch(3);
        auto diag = diagonals(d, {{bd(d, 3), bd(d, 2)}, {bd(d, 2), bd(d, 1)}});
        REQUIRE(diag);
        auto c = labeled(d, ambient(d, *diag), {0, 6, 12});
        REQUIRE(c);
        int swaps = -1;
        auto moved = shift_defect_to_corner(c->ambient, c->surface, 0, 0, &swaps);
        CHECK(swaps == 2);
        CHECK(defect(moved.surface.disc, bd(d, 1)) == 1);
        CHECK(defect(moved.surface.disc, bd(d, 3)) == 0);
        int again = -1;
        auto same = shift_defect_to_corner(c->ambient, moved, 0, 0, &again);
        CHECK(again == 0);
        CHECK(same.surface.disc == moved.surface.disc);

        auto h = hex2();
        int one = -1;
        auto toward_end = shift_defect_to_corner(h.ambient, h.surface, 0, 1, &one);
        CHECK(one == 1);
        CHECK(defect(toward_end.surface.disc, bd(h.surface.surface.disc, 3)) == 1);
        CHECK(code_of([&] { shift_defect_to_corner(h.ambient, h.surface, 0, 2); }) == Errc::PreconditionFailed);
    }

    TEST_CASE("one swap toward the start corner")
    {
        auto d = gen_hex_patch(2);
        auto diag = diagonals(d, {{bd(d, 2), bd(d, 1)}});
        REQUIRE(diag);
        auto c = labeled(d, ambient(d, *diag), {0, 4, 8});
        REQUIRE(c);
        int swaps = -1;
        auto moved = shift_defect_to_corner(c->ambient, c->surface, 0, 0, &swaps);
        CHECK(swaps == 1);
        CHECK(defect(moved.surface.disc, bd(d, 1)) == 1);
    }
}
