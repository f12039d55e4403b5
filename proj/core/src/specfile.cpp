#include "steklov/specfile.hpp"

#include <cctype>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace steklov {

namespace {
using nlohmann::json;
constexpr double kPi = std::numbers::pi;

AngleKind parse_kind(const std::string& s) {
    if (s == "special") return AngleKind::Special;
    if (s == "exceptional") return AngleKind::Exceptional;
    if (s == "generic") return AngleKind::Generic;
    throw std::invalid_argument("unknown angle class '" + s + "'");
}

int default_k(AngleKind kind, double value) {
    // nearest k for a forced special/exceptional classification
    const double j = kPi / value;
    if (kind == AngleKind::Exceptional)
        return std::max(1, static_cast<int>(std::lround(j / 2.0)));
    return std::max(0, static_cast<int>(std::lround((j - 1.0) / 2.0)));
}

AngleClass parse_angle(const json& entry, const ClassifyOptions& opts) {
    if (entry.is_number()) return classify_angle(entry.get<double>(), opts);
    if (entry.is_string())
        return classify_angle(parse_angle_value(entry.get<std::string>()), opts);
    if (!entry.is_object())
        throw std::invalid_argument("angle entry must be a number, string or object");
    double value;
    const json& v = entry.at("value");
    if (v.is_string())
        value = parse_angle_value(v.get<std::string>());
    else
        value = v.get<double>();
    const std::string force = entry.value("force", std::string("auto"));
    if (force == "auto") return classify_angle(value, opts);
    const AngleKind kind = parse_kind(force);
    const int k = entry.contains("k") ? entry.at("k").get<int>()
                                      : default_k(kind, value);
    return force_angle(value, kind, k, opts);
}

Bc parse_bc(const std::string& s) {
    if (s == "N" || s == "n") return Bc::N;
    if (s == "D" || s == "d") return Bc::D;
    throw std::invalid_argument("boundary condition must be N or D");
}
}  // namespace

double parse_angle_value(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') s += c;
    const std::size_t at = s.find("pi");
    if (at == std::string::npos) {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad angle '" + text + "'");
        return v;
    }
    double factor = 1.0;
    if (at > 0) factor = std::stod(s.substr(0, at));
    double divisor = 1.0;
    const std::string rest = s.substr(at + 2);
    if (!rest.empty()) {
        if (rest[0] != '/')
            throw std::invalid_argument("bad angle '" + text + "'");
        divisor = std::stod(rest.substr(1));
    }
    return factor * kPi / divisor;
}

BoundarySpec parse_spec_text(const std::string& json_text,
                             const ClassifyOptions& opts) {
    const json doc = json::parse(json_text);
    std::vector<AngleClass> angles;
    for (const json& entry : doc.at("angles"))
        angles.push_back(parse_angle(entry, opts));
    std::vector<double> lengths;
    for (const json& entry : doc.at("lengths"))
        lengths.push_back(entry.get<double>());
    const bool unsafe = doc.value("unsafe_angles", opts.unsafe_angles);

    if (doc.contains("bc")) {
        const json& bc = doc.at("bc");
        if (!bc.is_array() || bc.size() != 2)
            throw std::invalid_argument("bc must be a two-letter array");
        return ZigzagSpec(std::move(angles), std::move(lengths),
                          parse_bc(bc[0].get<std::string>()),
                          parse_bc(bc[1].get<std::string>()), unsafe);
    }
    return PolygonSpec(std::move(angles), std::move(lengths), unsafe);
}

BoundarySpec load_spec_file(const std::string& path,
                            const ClassifyOptions& opts) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open spec file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_spec_text(buffer.str(), opts);
}

}  // namespace steklov
