#pragma once

#include <string>

#include <json.hpp>

#include "systolic/actions.hpp"
#include "systolic/complex.hpp"
#include "systolic/disc.hpp"
#include "systolic/filling.hpp"
#include "systolic/swaps.hpp"

namespace systolic {

using Json = nlohmann::json;

// All readers throw ParseError on malformed documents.

Json to_json(const FlagComplex& complex);
FlagComplex complex_from_json(const Json& j);

Json to_json(const DiscTriangulation& disc);
DiscTriangulation disc_from_json(const Json& j);

/// {"disc": {...}, "embedding": {"d0": "x0", ...}}
Json to_json(const Surface& surface, const FlagComplex& complex);
Surface surface_from_json(const Json& j, const FlagComplex& complex);

/// Surface JSON plus "corners" and "sides" given by complex vertex names.
Json to_json(const LabeledSurface& ls, const FlagComplex& complex);
LabeledSurface labeled_surface_from_json(const Json& j, const FlagComplex& complex);

/// Generators map vertex names to names; omitted vertices are fixed. A
/// preset ("dihedral-n", "triangle-2-4-5", "triangle-2-5-5") supplies the
/// relations when none are listed.
ActionSpec action_from_json(const Json& j, const FlagComplex& complex);
Json to_json(const ActionSpec& spec, const FlagComplex& complex);
std::vector<std::string> preset_relations(const std::string& preset);

std::string to_dot(const FlagComplex& complex);

Json names_json(const FlagComplex& complex, const std::vector<Vertex>& vertices);

}  // namespace systolic
