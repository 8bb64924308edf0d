#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "systolic/error.hpp"

namespace systolic {

/// Dense index of a vertex in the canonical order of its complex.
using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using Triangle = std::array<Vertex, 3>;
/// Vertex map by index: image of v is perm[v].
using Permutation = std::vector<Vertex>;

/// Orders names with embedded numbers numerically ("x2" < "x10").
bool natural_less(std::string_view a, std::string_view b);

struct Subcomplex;

/// A finite flag simplicial complex, stored as its 1-skeleton.
///
/// Simplices are the cliques of the adjacency relation. Vertex names are
/// sorted into natural order on construction; all tie-breaks elsewhere in
/// the library use that order.
class FlagComplex {
public:
    FlagComplex() = default;

    /// Throws UnknownVertex for edges naming undeclared vertices and SelfLoop
    /// for (a, a). Duplicate vertices and edges are collapsed.
    static FlagComplex from_edge_list(std::vector<std::string> vertices,
                                      const std::vector<std::pair<std::string, std::string>>& edges);

    /// Edges given as indices into `names`; indices are remapped to canonical order.
    static FlagComplex from_indexed_edges(std::vector<std::string> names,
                                          const std::vector<Edge>& edges);

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }
    const std::string& name(Vertex v) const { return names_.at(v); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<Vertex> find(std::string_view name) const;
    /// Like find, but throws UnknownVertex.
    Vertex at(std::string_view name) const;

    bool adjacent(Vertex a, Vertex b) const noexcept
    {
        return (bits_[a * words_ + (b >> 6)] >> (b & 63)) & 1u;
    }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    /// Edges (a, b) with a < b, sorted.
    std::vector<Edge> edges() const;

    bool is_clique(std::span<const Vertex> vertices) const;
    /// All 3-cliques as sorted triples, sorted.
    std::vector<Triangle> triangles() const;
    /// Maximal cliques, each sorted, the list sorted.
    std::vector<std::vector<Vertex>> maximal_cliques() const;
    /// Common neighbours of all given vertices, sorted.
    std::vector<Vertex> common_neighbors(std::span<const Vertex> vertices) const;

    Subcomplex full_subcomplex(std::span<const Vertex> vertices) const;
    FlagComplex link(Vertex v) const;

    bool operator==(const FlagComplex& other) const
    {
        return names_ == other.names_ && adjacency_ == other.adjacency_;
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, Vertex, std::less<>> index_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::uint64_t> bits_;
    std::size_t words_ = 0;
    std::size_t edge_count_ = 0;
};

/// Full subcomplex together with the map back to the parent's vertices.
/// Relative vertex order is inherited from the parent.
struct Subcomplex {
    FlagComplex complex;
    std::vector<Vertex> to_parent;
};

/// An embedded cycle: distinct vertices, consecutive ones adjacent, length >= 3.
/// Stored in canonical form: smallest vertex first, then the direction with the
/// smaller second vertex.
struct Cycle {
    std::vector<Vertex> vertices;

    std::size_t length() const noexcept { return vertices.size(); }
    auto operator<=>(const Cycle&) const = default;
};

Cycle canonical_cycle(std::vector<Vertex> vertices);
bool is_valid_cycle(const FlagComplex& complex, std::span<const Vertex> vertices);
bool is_valid_path(const FlagComplex& complex, std::span<const Vertex> vertices);

/// Every embedded cycle with min_length <= length <= max_length, each once up
/// to rotation and reflection, sorted by (length, vertices).
std::vector<Cycle> enumerate_cycles(const FlagComplex& complex, int min_length, int max_length);

/// Cycles of length 4 .. k-1 (triangles are always filled in a flag complex). k >= 4.
std::vector<Cycle> embedded_cycles_shorter_than(const FlagComplex& complex, int k);

/// True iff two nonconsecutive cycle vertices are adjacent. Throws InvalidCycle.
bool has_diagonal(const FlagComplex& complex, std::span<const Vertex> cycle);

struct LargenessResult {
    bool large = true;
    std::optional<Cycle> witness;  ///< smallest chordless cycle of length < k
    explicit operator bool() const noexcept { return large; }
};

/// k-largeness (k >= 4): every cycle of length < k has a diagonal.
LargenessResult is_k_large(const FlagComplex& complex, int k);

struct LocalLargenessResult {
    bool locally_6_large = true;
    std::optional<Vertex> vertex;  ///< first vertex with a non-6-large link
    std::optional<Cycle> cycle;    ///< chordless link cycle, in the complex's indices
    explicit operator bool() const noexcept { return locally_6_large; }
};

LocalLargenessResult is_locally_6_large(const FlagComplex& complex);

/// Graph distance; nullopt when b is not reachable from a.
std::optional<int> distance(const FlagComplex& complex, Vertex a, Vertex b);
/// BFS distances from source, -1 for unreachable vertices.
std::vector<int> distances_from(const FlagComplex& complex, Vertex source);
/// A shortest path, choosing the smallest next vertex at every step.
std::optional<std::vector<Vertex>> shortest_path(const FlagComplex& complex, Vertex a, Vertex b);
/// Components as sorted vertex lists, ordered by their smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const FlagComplex& complex);
bool is_connected(const FlagComplex& complex);

}  // namespace systolic
