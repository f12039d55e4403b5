#pragma once

#include <optional>
#include <string>
#include <variant>

#include "steklov/geometry.hpp"

// JSON input files describing a polygon or zigzag:
//
//   {
//     "angles": [
//       {"value": "pi/3", "force": "auto"},
//       {"value": 1.5707963267948966, "force": "exceptional", "k": 1},
//       "2pi/3"
//     ],
//     "lengths": [1.0, 1.0, 1.0],
//     "bc": ["N", "D"],          // present -> zigzag
//     "unsafe_angles": false
//   }
//
// Angle values are radians or exact fractions of pi ("pi/3", "2pi/5",
// "0.5pi").  "force" overrides the numeric classification per vertex.

namespace steklov {

using BoundarySpec = std::variant<PolygonSpec, ZigzagSpec>;

// Parses "pi/3"-style strings or plain decimal radians.
double parse_angle_value(const std::string& text);

BoundarySpec parse_spec_text(const std::string& json_text,
                             const ClassifyOptions& opts = {});
BoundarySpec load_spec_file(const std::string& path,
                            const ClassifyOptions& opts = {});

}  // namespace steklov
