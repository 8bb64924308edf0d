#pragma once

#include <optional>
#include <string>
#include <vector>

#include "systolic/complex.hpp"
#include "systolic/homology.hpp"

namespace systolic {

inline constexpr std::size_t default_sc_budget = 100000;

enum class SystolicVerdict { Systolic, NotLocally6Large, NotSimplyConnected, Disconnected, Unknown };
std::string to_string(SystolicVerdict v);

struct SystolicReport {
    SystolicVerdict verdict = SystolicVerdict::Unknown;
    std::optional<Vertex> link_vertex;      ///< NotLocally6Large: vertex with a bad link
    std::optional<Cycle> link_cycle;        ///< and the chordless cycle in that link
    std::vector<Vertex> loop;               ///< NotSimplyConnected: nontrivial loop
    SimpleConnectivity simple_connectivity; ///< populated when that stage ran
    bool systolic() const { return verdict == SystolicVerdict::Systolic; }
};

/// Checks connectivity, then local 6-largeness, then bounded simple connectivity.
SystolicReport check_systolic(const FlagComplex& complex, std::size_t budget = default_sc_budget);

}  // namespace systolic
