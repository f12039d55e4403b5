#include "steklov/presets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "steklov/specfile.hpp"

namespace steklov {

namespace {
constexpr double kPi = std::numbers::pi;
}

PolygonSpec preset_polygon(const std::string& name) {
    std::string base = name;
    std::string param;
    if (const auto at = name.find(':'); at != std::string::npos) {
        base = name.substr(0, at);
        param = name.substr(at + 1);
    }
    if (base == "triangle-equilateral")
        return make_polygon({kPi / 3, kPi / 3, kPi / 3}, {1.0, 1.0, 1.0});
    if (base == "square")
        return make_polygon({kPi / 2, kPi / 2, kPi / 2, kPi / 2},
                            {1.0, 1.0, 1.0, 1.0});
    if (base == "pentagon")
        return make_polygon({3 * kPi / 5, 3 * kPi / 5, 3 * kPi / 5, 3 * kPi / 5,
                             3 * kPi / 5},
                            {1.0, 1.0, 1.0, 1.0, 1.0});
    if (base == "T1")
        return make_polygon({kPi / 4, kPi / 4, kPi / 2},
                            {1.0, std::sqrt(2.0), 1.0});
    if (base == "T2")
        return make_polygon({kPi / 3, kPi / 6, kPi / 2},
                            {1.0, 2.0, std::sqrt(3.0)});
    if (base == "droplet") {
        const double alpha = param.empty() ? kPi / 3 : parse_angle_value(param);
        return make_polygon({alpha}, {1.0});
    }
    if (base == "sector") {
        const double alpha = param.empty() ? 3 * kPi / 4 : parse_angle_value(param);
        ClassifyOptions opts;
        opts.unsafe_angles = alpha >= kPi;
        return make_polygon({alpha, kPi / 2, kPi / 2}, {1.0, 1.0, alpha}, opts);
    }
    throw std::invalid_argument("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
    return {"triangle-equilateral", "square", "pentagon",
            "T1",                   "T2",     "droplet:<alpha>",
            "sector:<alpha>"};
}

}  // namespace steklov
