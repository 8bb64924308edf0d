#pragma once

#include <functional>
#include <string>
#include <vector>

#include "systolic/actions.hpp"
#include "systolic/complex.hpp"
#include "systolic/disc.hpp"
#include "systolic/filling.hpp"

namespace systolic {

/// Cone "c" over the cycle x0..x{2n-1} with all distance-2 chords. n >= 3.
FlagComplex gen_chorded_wheel(int n);
/// Chorded wheel plus the cycle y0..y{2n-1}, y_i joined to x_{i-1}, x_i, x_{i+1}. n >= 3.
FlagComplex gen_double_cycle(int n);
/// Cone "c" over the plain cycle x0..x{n-1}. n >= 3.
FlagComplex gen_wheel(int n);
/// Complete graph on k0..k{n-1}. n >= 1.
FlagComplex gen_simplex(int n);
/// Triangular-lattice hexagon; vertices "h{q}_{r}" in axial coordinates.
DiscTriangulation gen_hex_patch(int radius);

/// Outcome of the exhaustive search for the special 10-gon disc.
struct SpecialSurfaceSearch {
    std::vector<std::vector<Triangle>> labeled;      ///< every solution found, vertices 0..13
    std::vector<std::vector<Triangle>> classes;      ///< one canonical form per isomorphism class
    std::size_t leaves = 0;
};

/// Searches all discs with boundary 10, four interior vertices spanning two
/// triangles, six boundary defects 1 and four 0, interior defects <= 0.
SpecialSurfaceSearch special_surface_search();
/// Least relabelling of a disc on boundary 0..9 and interior 10..13 under
/// boundary rotations and reflections and interior permutations.
std::vector<Triangle> special_canonical_form(const std::vector<Triangle>& triangles);
/// The unique solution, boundary s0..s9 and interior s10..s13. Cached.
const DiscTriangulation& gen_special_surface();
/// Flag complex on the 1-skeleton of the special surface, and the surface
/// embedded in it by the identity.
FlagComplex gen_bicycle_complex();
Surface special_surface_in_bicycle_complex();

/// Permutation acting on the indices of x{i} and y{i} modulo `modulus`; any
/// other vertex (the cone) is fixed.
Permutation rim_permutation(const FlagComplex& complex, int modulus, const std::function<long(long)>& f);

enum class Axes { Vertex, Edge };
/// Dihedral action of order 2n on a fixture with rim length 2n. Vertex axes
/// use u: i -> -i, v: i -> 2-i; edge axes use u: i -> 1-i, v: i -> -1-i.
ActionSpec dihedral_rim_action(const FlagComplex& complex, int n, Axes axes);
/// Rotation by `step` on a rim of the given length, as a single generator "g".
ActionSpec rim_rotation_action(const FlagComplex& complex, int modulus, int step);

/// Hex-patch automorphisms on the patch skeleton.
Permutation hex_rotation(const FlagComplex& patch);
Permutation hex_reflection(const FlagComplex& patch);

}  // namespace systolic
