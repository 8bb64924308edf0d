#pragma once

#include <optional>
#include <string>
#include <vector>

#include "systolic/complex.hpp"
#include "systolic/disc.hpp"

namespace systolic {

/// A disc mapped into a complex. The disc's vertices are named d0, d1, ...
/// with the boundary first, following the spanned cycle.
struct Surface {
    DiscTriangulation disc;
    Permutation embedding;  ///< disc vertex -> complex vertex

    std::size_t area() const { return disc.area(); }
    /// Images of the disc triangles, each sorted, the list sorted.
    std::vector<Triangle> image_triangles() const;
};

struct SurfaceCheck {
    bool ok = true;
    std::string clause;  ///< first violated clause: "size", "injective", "edges", "triangles", "boundary"
    explicit operator bool() const noexcept { return ok; }
};

SurfaceCheck verify_surface(const FlagComplex& complex, const Surface& surface, const std::vector<Vertex>& cycle);

/// Builds the surface whose disc has the given complex triangles and whose
/// boundary follows `cycle`. Throws InvalidDisc if they do not form one.
Surface surface_from_triangles(const FlagComplex& complex, const std::vector<Vertex>& cycle,
                               const std::vector<Triangle>& triangles);

enum class FillStatus { Filled, NoFilling, BudgetExhausted };
std::string to_string(FillStatus s);

struct FillResult {
    FillStatus status = FillStatus::NoFilling;
    std::optional<Surface> surface;
    std::size_t area = 0;
    std::size_t budget = 0;
    std::size_t nodes = 0;      ///< search nodes visited
    std::size_t minimal_count = 0;  ///< fillings of minimal area seen for the tie-break
};

/// floor(l^2 / 6).
std::size_t isoperimetric_budget(std::size_t length);

/// Minimal-area filling with area at most `area_budget`. Among minimal
/// fillings the one with the least sorted list of image triangles wins.
/// Throws InvalidCycle.
FillResult fill_minimal(const FlagComplex& complex, const std::vector<Vertex>& cycle, std::size_t area_budget);
/// Uses the isoperimetric budget after certifying the complex; throws
/// PreconditionFailed when the complex is not certified systolic.
FillResult fill_minimal(const FlagComplex& complex, const std::vector<Vertex>& cycle);

struct MinimalSystolicReport {
    FillResult fill;
    bool systolic = false;
    std::optional<Vertex> witness;  ///< disc vertex breaking systolicity
    std::string failure;            ///< "not-flag", "interior-defect" or a fill status
};

/// Throws PreconditionFailed unless `certify` is false or the complex is systolic.
MinimalSystolicReport assert_minimal_is_systolic(const FlagComplex& complex, const std::vector<Vertex>& cycle,
                                                 bool certify = true);

}  // namespace systolic
