#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "systolic/complex.hpp"

namespace systolic {

/// Abstract triangulated 2-disc with a distinguished boundary cycle.
///
/// Vertices are natural-sorted by name like FlagComplex. The boundary keeps
/// the orientation it was given with, rotated to start at its least vertex.
class DiscTriangulation {
public:
    DiscTriangulation() = default;

    /// Throws UnknownVertex for undeclared names and InvalidDisc for anything
    /// that is not a triangulated disc with exactly that boundary.
    static DiscTriangulation from_names(std::vector<std::string> vertices,
                                        const std::vector<std::array<std::string, 3>>& triangles,
                                        const std::vector<std::string>& boundary);
    /// Triangles and boundary index into `names`.
    static DiscTriangulation from_indices(std::vector<std::string> names, const std::vector<Triangle>& triangles,
                                          const std::vector<Vertex>& boundary);

    std::size_t size() const noexcept { return skeleton_.size(); }
    const std::string& name(Vertex v) const { return skeleton_.name(v); }
    const std::vector<std::string>& names() const noexcept { return skeleton_.names(); }
    Vertex at(std::string_view name) const { return skeleton_.at(name); }
    std::optional<Vertex> find(std::string_view name) const { return skeleton_.find(name); }

    const std::vector<Triangle>& triangles() const noexcept { return triangles_; }
    const std::vector<Vertex>& boundary() const noexcept { return boundary_; }
    std::size_t area() const noexcept { return triangles_.size(); }
    bool on_boundary(Vertex v) const { return boundary_pos_.at(v) >= 0; }
    /// Position on the boundary cycle, or -1.
    int boundary_position(Vertex v) const { return boundary_pos_.at(v); }
    std::size_t triangle_count(Vertex v) const { return incident_.at(v); }
    std::vector<Vertex> interior_vertices() const;
    /// 1-skeleton as a flag complex (same vertex indices).
    const FlagComplex& skeleton() const noexcept { return skeleton_; }
    bool has_triangle(Vertex a, Vertex b, Vertex c) const;
    /// Third vertices of the triangles on edge (a, b).
    std::vector<Vertex> opposite(Vertex a, Vertex b) const;

    bool operator==(const DiscTriangulation& o) const
    {
        return names() == o.names() && triangles_ == o.triangles_ && boundary_ == o.boundary_;
    }

private:
    FlagComplex skeleton_;
    std::vector<Triangle> triangles_;
    std::vector<Vertex> boundary_;
    std::vector<int> boundary_pos_;
    std::vector<std::size_t> incident_;
};

/// 6 minus the triangle count for interior vertices, 3 minus it on the boundary.
int defect(const DiscTriangulation& disc, Vertex v);
int defect(const DiscTriangulation& disc, std::string_view v);

/// Sum of defects over the inner vertices of a boundary path. Throws
/// PathNotOnBoundary unless consecutive vertices are boundary neighbours.
int defect_along(const DiscTriangulation& disc, const std::vector<Vertex>& path);

int gauss_bonnet_sum(const DiscTriangulation& disc);

/// True iff every 3-clique of the 1-skeleton is a triangle of the disc.
bool is_flag_disc(const DiscTriangulation& disc);

struct SystolicDiscResult {
    bool systolic = true;
    std::optional<Vertex> witness;  ///< interior vertex with fewer than six triangles
    explicit operator bool() const noexcept { return systolic; }
};

/// Throws NotFlag when the 1-skeleton spans a triangle that is not in the disc.
SystolicDiscResult is_systolic_disc(const DiscTriangulation& disc);

struct BoundaryDefectCheck {
    int sum = 0;
    bool has_negative_interior = false;
    bool equality_iff_no_negative_interior = false;
};

/// Throws NotSystolicDisc on non-systolic input.
BoundaryDefectCheck boundary_defect_check(const DiscTriangulation& disc);

struct LemmaViolation {
    int clause = 0;
    Vertex vertex = 0;
    std::string message;
};

struct GeodesicLemmaReport {
    std::vector<int> inner_defects;
    int defect_along = 0;
    std::vector<LemmaViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the three boundary geodesic clauses. Throws NotSystolicDisc,
/// PathNotOnBoundary, or NotGeodesic when the path is longer than the disc
/// distance between its endpoints.
GeodesicLemmaReport verify_geodesic_defect_lemma(const DiscTriangulation& disc, const std::vector<Vertex>& geodesic);

struct AreaIdentities {
    std::size_t area = 0;
    std::size_t inner_count = 0;
    std::size_t boundary_count = 0;
    bool pick_holds = false;
    bool systolic = false;
    bool isoperimetric_holds = true;  ///< only meaningful when systolic
};

AreaIdentities euler_area_identities(const DiscTriangulation& disc);

/// Forward boundary arc from position i to position j (inclusive).
std::vector<Vertex> boundary_arc(const DiscTriangulation& disc, std::size_t i, std::size_t j);

/// Replaces the triangles (a,b,c), (a,b,d) by (a,c,d), (b,c,d). Requires an
/// interior edge and c not adjacent to d; otherwise nullopt.
std::optional<DiscTriangulation> flip_edge(const DiscTriangulation& disc, Vertex a, Vertex b);

enum class FlipPolicy { Any, KeepSystolic };

/// Hex patch of the given radius with `flips` random interior edge flips.
DiscTriangulation random_flip_disc(int radius, int flips, std::mt19937_64& rng, FlipPolicy policy = FlipPolicy::Any);

}  // namespace systolic
