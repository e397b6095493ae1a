#pragma once

#include <string>
#include <vector>

#include "radon/regions.hpp"

namespace radon {

/// Deterministic SVG of a 2-D region in the unit square, with labeled
/// vertices (exact fraction labels).
std::string svg_region2(const Region2& r);

/// Fixed-z or fixed-x slice of a 3-D family: each triangle's trace drawn
/// as a labeled segment over the unit square (fixed-z) or the (y, s)
/// rectangle (fixed-x). Throws input_error when the slice is empty.
std::string svg_family_slice(const RegionFamily& f, char axis, const Rat& value);

}  // namespace radon
