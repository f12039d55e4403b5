#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Boundary combinatorics of curvilinear polygons and zigzags: angle
// classification into special / exceptional / generic, and the splitting of an
// exceptional polygon boundary into components between exceptional vertices.
// Only side lengths and angles matter; no planar embedding is kept.

namespace steklov {

enum class AngleKind { Special, Exceptional, Generic };

// An interior angle together with its arithmetic type.  An angle is
// exceptional when it equals pi/(2k) and special when it equals pi/(2k+1);
// the parity (-1)^k drives all downstream spectral formulas.
struct AngleClass {
    double value = 0.0;                  // radians, in (0, pi) unless unsafe
    AngleKind kind = AngleKind::Generic;
    int k = 0;                           // defined for special/exceptional
    int parity = 0;                      // (-1)^k, 0 for generic

    bool exceptional() const { return kind == AngleKind::Exceptional; }
    bool special() const { return kind == AngleKind::Special; }
};

struct ClassifyOptions {
    double tol_angle = 1e-12;
    int j_max = 200;
    bool unsafe_angles = false;  // permit (0, 2*pi), no warranty
};

// Classifies by the smallest j with |value - pi/j| <= tol_angle.
AngleClass classify_angle(double value, const ClassifyOptions& opts = {});
AngleClass classify_angle(double value, double tol_angle);

// User override: fix the kind (and k) regardless of the numeric value.
AngleClass force_angle(double value, AngleKind kind, int k,
                       const ClassifyOptions& opts = {});

// mu_alpha = pi^2 / (2 alpha), the phase that enters every vertex matrix.
double mu_alpha(double alpha);

struct PolygonSpec {
    std::vector<AngleClass> angles;  // angles[i] sits at vertex i
    std::vector<double> lengths;     // lengths[i] = side ending at vertex i

    PolygonSpec() = default;
    PolygonSpec(std::vector<AngleClass> a, std::vector<double> l,
                bool unsafe_angles = false);

    std::size_t size() const { return angles.size(); }
    bool exceptional() const;
    bool all_special() const;
};

PolygonSpec make_polygon(const std::vector<double>& angle_values,
                         const std::vector<double>& lengths,
                         const ClassifyOptions& opts = {});

enum class Bc { N, D };

inline char bc_letter(Bc b) { return b == Bc::N ? 'N' : 'D'; }

struct ZigzagSpec {
    std::vector<AngleClass> angles;  // n-1 interior angles
    std::vector<double> lengths;     // n side lengths
    Bc bc_start = Bc::N;
    Bc bc_end = Bc::N;

    ZigzagSpec() = default;
    ZigzagSpec(std::vector<AngleClass> a, std::vector<double> l, Bc start,
               Bc end, bool unsafe_angles = false);

    std::size_t pieces() const { return lengths.size(); }
    bool exceptional() const;
};

ZigzagSpec make_zigzag(const std::vector<double>& angle_values,
                       const std::vector<double>& lengths, Bc start, Bc end,
                       const ClassifyOptions& opts = {});

// One boundary arc between two consecutive exceptional vertices.  The right
// terminal angle is the component's own exceptional vertex; the left one
// belongs to the previous component.
struct ExceptionalComponent {
    std::vector<AngleClass> interior_angles;  // non-exceptional, may be empty
    std::vector<double> lengths;              // interior_angles.size() + 1
    std::vector<std::size_t> edge_indices;    // positions in the parent spec
    AngleClass left_exceptional;
    AngleClass right_exceptional;
    bool odd = false;  // terminal parities differ

    double total_length() const;
};

struct ExceptionalDecomposition {
    std::vector<ExceptionalComponent> components;

    std::size_t count() const { return components.size(); }
    int odd_count() const;
    // Multiplicity of the quasi-eigenvalue sigma = 0: half the odd count.
    int zero_multiplicity() const { return odd_count() / 2; }
};

// Splits the boundary at the exceptional vertices.  Components are listed
// cyclically starting after the exceptional vertex of largest index.
// Throws std::invalid_argument for a non-exceptional polygon.
ExceptionalDecomposition decompose(const PolygonSpec& p);

// Endpoint piece of an exceptional zigzag: from a free endpoint (carrying a
// D or N condition) to its nearest exceptional vertex.
struct ZigzagEndpointComponent {
    std::vector<AngleClass> interior_angles;
    std::vector<double> lengths;  // interior_angles.size() + 1
    AngleClass exceptional;       // terminal exceptional angle
};

struct ZigzagDecomposition {
    ZigzagEndpointComponent start;
    std::vector<ExceptionalComponent> interior;  // may be empty
    ZigzagEndpointComponent end;
};

// Splits an exceptional zigzag at its exceptional vertices.
ZigzagDecomposition decompose(const ZigzagSpec& z);

double perimeter(const PolygonSpec& p);
double total_length(const ZigzagSpec& z);

}  // namespace steklov
