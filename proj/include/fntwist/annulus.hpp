#pragma once

#include "fntwist/mobius.hpp"

#include <array>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <utility>

namespace fntwist {

/// Raised for coordinate vectors that do not describe a point of the
/// enhanced Teichmuller space (non-positive, non-finite, or degenerate core).
class InvalidCoordinatesError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Cross-ratio coordinates (X1, X2, X3, X4) of the once-marked annulus.
///
/// Arcs 1 and 2 join the two boundary marked points and cut the annulus
/// into two triangles. Arc 3 is the boundary segment of the inner boundary
/// and arc 4 that of the outer boundary; their coordinates only make sense
/// once the annulus sits inside a larger surface, but the twist acts on them.
class AnnulusCoords {
public:
    /// Throws InvalidCoordinatesError unless all four values are positive
    /// and finite and |tr f2| > 2 + 1e-12.
    AnnulusCoords(double X1, double X2, double X3, double X4);
    explicit AnnulusCoords(const std::array<double, 4>& values)
        : AnnulusCoords(values[0], values[1], values[2], values[3])
    {
    }

    /// 0-based access; coordinate X_{i+1}.
    double operator[](std::size_t i) const { return values_.at(i); }
    const std::array<double, 4>& values() const noexcept { return values_; }

    friend bool operator==(const AnnulusCoords&, const AnnulusCoords&) = default;

private:
    std::array<double, 4> values_;
};

std::ostream& operator<<(std::ostream& os, const AnnulusCoords& X);

/// Vertices of the lifted quadrilaterals, listed in counterclockwise order on
/// R u {inf}: x2 < x1 < x3 < 0 < 1 < x4 < inf.
enum class Vertex { X2, X1, X3, Zero, One, X4, Infinity };

/// The seven ideal vertices used by the coordinate chart. Zero, One and
/// Infinity are pinned by the normalization; x1..x4 depend on X.
struct EndpointConfig {
    ProjectivePoint x1;
    ProjectivePoint x2;
    ProjectivePoint x3;
    ProjectivePoint x4;

    ProjectivePoint at(Vertex v) const;
};

/// Ideal vertices (x, y, z, w) of the quadrilateral around one arc, in
/// counterclockwise order, with x an endpoint of the arc (the arc is the
/// diagonal x-z).
using Quadrilateral = std::array<Vertex, 4>;

/// Quadrilateral of arc i at index i - 1.
///
///   arc 1: (0, 1, inf, x1)    diagonal 0 - inf
///   arc 2: (inf, x2, x1, 0)   diagonal inf - x1
///   arc 3: (0, inf, x1, x3)   diagonal 0 - x1
///   arc 4: (1, x4, inf, 0)    diagonal 1 - inf
///
/// Triangles of the lifted strip: (0, 1, inf), (x1, 0, inf), (inf, x2, x1);
/// x3 and x4 are the far vertices of the triangles glued along the two
/// boundary segments x1 - 0 and 1 - inf.
inline constexpr std::array<Quadrilateral, 4> kArcQuadrilaterals{{
    {Vertex::Zero, Vertex::One, Vertex::Infinity, Vertex::X1},
    {Vertex::Infinity, Vertex::X2, Vertex::X1, Vertex::Zero},
    {Vertex::Zero, Vertex::Infinity, Vertex::X1, Vertex::X3},
    {Vertex::One, Vertex::X4, Vertex::Infinity, Vertex::Zero},
}};

/// Data of the core geodesic, the axis of the holonomy f2.
struct CoreGeodesic {
    double trace_abs;  ///< |tr f2| > 2
    double length;     ///< L(f2) = 2 acosh(|tr f2| / 2)
    double p1;         ///< repelling fixed point of f2, in (0, 1)
    double p2;         ///< attracting fixed point of f2, negative
};

/// x1 = -X1, x2 = -X1 (X2 + 1), x3 = -X1 X3 / (X3 + 1), x4 = (X4 + 1) / X4.
EndpointConfig endpoints(const AnnulusCoords& X);

/// Inverse of endpoints(): the cross ratio of each arc's quadrilateral.
/// Throws InvalidCoordinatesError when x2 < x1 < x3 < 0 < 1 < x4 fails.
AnnulusCoords coords_from_endpoints(const EndpointConfig& e);

/// The deck transformation glued along arc 2,
/// (1 / sqrt(X1 X2)) [[X1 (X2 + 1), -X1], [-1, 1]].
/// It sends 0 -> x1, 1 -> inf and inf -> x2.
MobiusMap holonomy_f2(const AnnulusCoords& X);

/// Closed-form |tr f2| = (X1 (X2 + 1) + 1) / sqrt(X1 X2).
double core_trace(double X1, double X2) noexcept;

/// Trace, length and fixed points of f2. The fixed points are the roots of
/// p^2 + (X1 (X2 + 1) - 1) p - X1 = 0, evaluated without cancellation.
CoreGeodesic core_geodesic(const AnnulusCoords& X);

/// Fixed points (p1, p2) in the exponential form
/// p1 = 1 - sqrt(X1 X2) e^{-L/2}, p2 = 1 - sqrt(X1 X2) e^{L/2}.
std::pair<double, double> fixed_points_exponential(const AnnulusCoords& X);

}  // namespace fntwist
