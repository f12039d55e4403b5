#pragma once

#include <string>
#include <vector>

#include "steklov/geometry.hpp"

// Built-in example domains.  Parametrised presets take a suffix after a
// colon, e.g. "droplet:pi/3" or "sector:3pi/4".

namespace steklov {

PolygonSpec preset_polygon(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace steklov
