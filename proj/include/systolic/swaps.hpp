#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "systolic/complex.hpp"
#include "systolic/filling.hpp"

namespace systolic {

/// Surface with three corners and the three sides between them. Corners and
/// sides are disc vertices; side i runs from corner i to corner i+1 and the
/// sides concatenate to the boundary cycle.
struct LabeledSurface {
    Surface surface;
    std::array<Vertex, 3> corners{};
    std::array<std::vector<Vertex>, 3> sides;
};

/// Derives the sides from the corners by walking the boundary in its stored
/// order. Throws InvalidLabeling unless the corners are distinct boundary
/// vertices in boundary order and every side is a geodesic of the complex.
LabeledSurface label_surface(const FlagComplex& complex, Surface surface, std::array<Vertex, 3> corners);

/// Throws InvalidLabeling on any violated invariant.
void verify_labeling(const FlagComplex& complex, const LabeledSurface& ls);

/// Disc vertices of a swap: triangles {p,q,m} and {q,m,m2} become
/// {p,m,m2} and {p,m2,q}.
struct SwapMove {
    Vertex p = 0, q = 0, m = 0, m2 = 0;
};

/// Index of the side having p and q as adjacent inner vertices, or -1.
int side_of_move(const LabeledSurface& ls, Vertex p, Vertex q);

/// Throws MoveInvalid when the move does not describe two surface triangles
/// on adjacent inner side vertices, MissingAmbientEdge when p^m2 is not an
/// edge of the complex.
LabeledSurface edge_swap(const FlagComplex& complex, const LabeledSurface& ls, const SwapMove& move);

/// m is the interior neighbour of p, m2 the other neighbour of q off the side.
/// Throws DefectPatternMismatch unless p, q have defects 1 and 0, and
/// MissingAmbientEdge when p, q, m, m2 do not span a simplex.
std::optional<SwapMove> find_swap(const FlagComplex& complex, const LabeledSurface& ls, int side, Vertex p, Vertex q);

/// Swaps along the side until the side neighbour of the corner has defect 1.
/// `corner` is 0 for the side's start and 1 for its end. Throws PreconditionFailed.
LabeledSurface shift_defect_to_corner(const FlagComplex& complex, const LabeledSurface& ls, int side, int corner,
                                      int* swaps_done = nullptr);

struct SwapEffectReport {
    int side = -1;
    std::array<int, 3> side_defect_before{}, side_defect_after{};
    std::array<int, 3> corner_defect_before{}, corner_defect_after{};
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

SwapEffectReport swap_effect_report(const LabeledSurface& before, const LabeledSurface& after, const SwapMove& move);

}  // namespace systolic
