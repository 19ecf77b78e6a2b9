#pragma once

#include <string>

#include "trihex/map.hpp"
#include "trihex/signature.hpp"

namespace trihex {

// Planar drawing of a validated map: the outer face (the lowest-numbered
// hexagon, or the lowest-numbered face when no hexagon exists) is pinned to a
// circle and interior vertices are relaxed barycentrically to tolerance 1e-9.
// Output is deterministic for a given map.
std::string map_svg(const CombinatorialMap& m);

// Window of the hexagonal tiling (columns x rows flat-top hexagons) with the
// rotation centers marked and one fundamental domain -- two adjacent lattice
// parallelograms -- shaded.
std::string tiling_svg(const Signature& sig, int columns, int rows);

}  // namespace trihex
