#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "systolic/complex.hpp"

namespace systolic {

/// A 2-dimensional simplicial complex given explicitly. Needed for spaces
/// whose triangles are not the cliques of their 1-skeleton (the 7-vertex torus).
struct TwoComplex {
    std::size_t vertex_count = 0;
    std::vector<Edge> edges;          ///< (a, b) with a < b
    std::vector<Triangle> triangles;  ///< sorted triples; edges must be present

    static TwoComplex from_flag(const FlagComplex& complex);
    /// Edges are derived from the triangles plus the extra edges given.
    static TwoComplex from_triangles(std::size_t vertex_count, const std::vector<Triangle>& triangles,
                                     const std::vector<Edge>& extra_edges = {});
};

struct HomologySummary {
    std::int64_t h1_rank = 0;
    std::vector<std::int64_t> h1_torsion;  ///< invariant factors > 1, ascending
    bool connected = false;
    bool trivial() const { return h1_rank == 0 && h1_torsion.empty(); }
};

HomologySummary homology_h1(const TwoComplex& complex);
HomologySummary homology_h1(const FlagComplex& complex);

/// Invariant factors (nonzero diagonal of the Smith normal form) of an
/// integer matrix given row-major. Throws ParameterOutOfRange on overflow.
std::vector<std::int64_t> smith_invariants(std::vector<std::vector<std::int64_t>> matrix);

enum class Tristate { Yes, No, Unknown };
std::string to_string(Tristate t);

struct SimpleConnectivity {
    Tristate verdict = Tristate::Unknown;
    std::string reason;                 ///< "disconnected", "h1", "presentation", "budget", "stuck"
    std::vector<Vertex> witness_loop;   ///< closed edge path (first vertex not repeated) for No via h1
    std::size_t steps = 0;              ///< rewriting steps spent
    std::size_t remaining_generators = 0;
};

/// Bounded semi-decision of simple connectivity. Builds the edge-path group
/// presentation (generators: edges off a BFS spanning tree, relators:
/// triangles) and eliminates generators occurring once in some relator.
SimpleConnectivity is_simply_connected_bounded(const TwoComplex& complex, std::size_t budget);
SimpleConnectivity is_simply_connected_bounded(const FlagComplex& complex, std::size_t budget);

}  // namespace systolic
