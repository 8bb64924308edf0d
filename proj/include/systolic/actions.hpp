#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "systolic/complex.hpp"
#include "systolic/filling.hpp"
#include "systolic/systolicity.hpp"

namespace systolic {

/// Named generators acting on the right: x^(gh) = (x^g)^h, so words are
/// applied left to right.
struct ActionSpec {
    std::vector<std::pair<char, Permutation>> generators;
    std::vector<std::string> relations;  ///< words over generator names
    std::string preset;                  ///< informational, e.g. "dihedral-5"

    const Permutation& generator(char name) const;
    bool has_generator(char name) const;
};

inline constexpr std::size_t default_group_budget = 10000;

Permutation identity_permutation(std::size_t n);
Permutation compose(const Permutation& first, const Permutation& then);
Permutation inverse(const Permutation& p);
/// Image of every vertex under the word.
Permutation evaluate_word(const ActionSpec& spec, std::string_view word, std::size_t n);
std::size_t permutation_order(const Permutation& p);

/// "uu", "vv" and (uv)^n.
std::vector<std::string> dihedral_relations(int n);
/// rr, ss, tt, (rs)^2, (st)^j, (rt)^5.
std::vector<std::string> triangle_relations(int j);
/// w repeated k times.
std::string power(std::string_view w, int k);

/// Throws NotBijective or EdgeNotPreserved (message names the pair).
void verify_automorphism(const FlagComplex& complex, const Permutation& mapping);
/// Verifies every generator, then every relation. Throws RelationViolated.
void verify_action(const FlagComplex& complex, const ActionSpec& spec);

/// All group elements generated by the spec. Throws GroupEnumerationBudgetExceeded.
std::vector<Permutation> enumerate_group(const ActionSpec& spec, std::size_t n, std::size_t budget = default_group_budget);

std::vector<Vertex> orbit(const ActionSpec& spec, std::size_t n, Vertex seed);
/// Orbit of a vertex set; each member sorted, list sorted.
std::vector<std::vector<Vertex>> orbit(const ActionSpec& spec, std::size_t n, std::vector<Vertex> seed);
/// Vertex orbits under the generated group, ordered by least element.
std::vector<std::vector<Vertex>> vertex_orbits(const ActionSpec& spec, std::size_t n);

struct InvarianceSet {
    std::vector<Vertex> vertices;  ///< in the base complex, sorted
    Subcomplex carrier;
};

bool is_involution(const Permutation& u);
/// Throws NotInvolution.
InvarianceSet invariance_set(const FlagComplex& complex, const Permutation& u);
/// Sorted intersection of vertex sets.
std::vector<Vertex> intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b);

struct XuReport {
    bool full = true;
    bool isometric = true;
    bool locally_6_large = true;
    bool stable_maximal_simplices = true;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

XuReport verify_Xu_properties(const FlagComplex& complex, const Permutation& u);

/// clique together with its image; throws MissingEdge when that is not a clique.
std::vector<Vertex> u_invariant_simplex_from_clique(const FlagComplex& complex, const Permutation& u,
                                                    const std::vector<Vertex>& clique);
/// Orbit of x under <u, v>; throws MissingEdge when it is not a clique,
/// PreconditionFailed when u and v do not commute or x is outside X_u or X_v.
std::vector<Vertex> commuting_orbit_simplex(const FlagComplex& complex, const Permutation& u, const Permutation& v,
                                            Vertex x);
/// Common neighbours of x and x^u. Throws WrongDistance unless d(x, x^u) = 2
/// and MissingEdge when they do not span a u-invariant simplex.
std::vector<Vertex> mid_simplex(const FlagComplex& complex, const Permutation& u, Vertex x);
/// Shortest path inside X_u; throws NoSuchPath if it is longer than d(x, y).
std::vector<Vertex> geodesic_in_Xu(const FlagComplex& complex, const Permutation& u, Vertex x, Vertex y);

/// Lexicographically least clique that every generator maps onto itself.
std::optional<std::vector<Vertex>> invariant_simplex_search(const FlagComplex& complex, const ActionSpec& spec,
                                                            std::size_t budget = default_group_budget);

struct DihedralOrbit {
    bool simplex = false;
    std::vector<Vertex> orbit;        ///< sorted
    std::vector<Vertex> cycle;        ///< (a, a^u, a^vu, a^uvu, ...) when not a simplex
    int n = 0;                        ///< order of uv
};

/// Simplex or chordless Hamiltonian orbit cycle of length 2n. Throws
/// HypothesisViolated when a is not in X_u and X_v, DichotomyViolated otherwise.
DihedralOrbit hamiltonian_or_simplex(const FlagComplex& complex, const ActionSpec& spec, Vertex a);

enum class BicycleCase { SimplexCase, CycleCase, Violation };
std::string to_string(BicycleCase c);

struct BicycleReport {
    BicycleCase kind = BicycleCase::Violation;
    std::vector<Vertex> orbit;
    std::vector<Vertex> hamiltonian_cycle;
    std::optional<Vertex> b;
    std::vector<Vertex> sigma;
    bool bipartite_ok = false;
    bool sigma_in_Xu_Xv = false;
    std::string witness_source;  ///< "common-neighbours" or "exhaustive"
    std::string failed_clause;   ///< set for Violation
};

struct BicycleOptions {
    bool strict = true;          ///< throw HypothesisViolated instead of reporting
    bool verify_systolic = true;
    std::size_t budget = default_sc_budget;
};

BicycleReport bicycle_check(const FlagComplex& complex, const ActionSpec& spec, Vertex a,
                            const BicycleOptions& options = {});

struct CornerSurface {
    std::array<Vertex, 3> corners{};       ///< x in X_s^X_r, y in X_s^X_t, z in X_r^X_t
    std::array<std::vector<Vertex>, 3> sides;  ///< gamma_s: x..y, gamma_t: y..z, gamma_r: z..x
    std::vector<Vertex> cycle;
    Surface surface;
};

struct TriangleSurfaceResult {
    bool degenerate = false;
    std::optional<Vertex> fixed_corner;       ///< witness in X_r^X_s^X_t
    std::vector<Vertex> invariant_simplex;
    std::string simplex_source;               ///< "orbit-span" or "search"
    std::optional<CornerSurface> surface;
};

/// Corner triple of least perimeter and a minimal surface on it. Does not
/// check relations. Throws EmptyIntersection.
CornerSurface corner_surface(const FlagComplex& complex, const Permutation& r, const Permutation& s,
                             const Permutation& t);

/// Requires generators r, s, t. Verifies the action first.
TriangleSurfaceResult triangle_surface(const FlagComplex& complex, const ActionSpec& spec,
                                       std::size_t budget = default_group_budget);

}  // namespace systolic
