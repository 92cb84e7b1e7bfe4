#include "fntwist/annulus.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <string>

namespace fntwist {

namespace {

constexpr double kHyperbolicMargin = 1e-12;

std::string describe(double v)
{
    std::ostringstream oss;
    oss.precision(17);
    oss << v;
    return oss.str();
}

}  // namespace

AnnulusCoords::AnnulusCoords(double X1, double X2, double X3, double X4) : values_{X1, X2, X3, X4}
{
    for (std::size_t i = 0; i < 4; ++i) {
        const double v = values_[i];
        if (!std::isfinite(v) || !(v > 0.0))
            throw InvalidCoordinatesError("coordinate X" + std::to_string(i + 1) +
                                          " must be strictly positive and finite (got " + describe(v) + ")");
    }
    const double tr = core_trace(X1, X2);
    if (!(tr > 2.0 + kHyperbolicMargin))
        throw InvalidCoordinatesError("holonomy f2 must be hyperbolic: |tr f2| = " + describe(tr) + " <= 2 + 1e-12");
}

std::ostream& operator<<(std::ostream& os, const AnnulusCoords& X)
{
    return os << "(" << X[0] << ", " << X[1] << ", " << X[2] << ", " << X[3] << ")";
}

ProjectivePoint EndpointConfig::at(Vertex v) const
{
    switch (v) {
    case Vertex::X1: return x1;
    case Vertex::X2: return x2;
    case Vertex::X3: return x3;
    case Vertex::X4: return x4;
    case Vertex::Zero: return ProjectivePoint{0.0};
    case Vertex::One: return ProjectivePoint{1.0};
    case Vertex::Infinity: return ProjectivePoint::infinity();
    }
    throw std::logic_error("EndpointConfig::at: unknown vertex");
}

EndpointConfig endpoints(const AnnulusCoords& X)
{
    const double X1 = X[0], X2 = X[1], X3 = X[2], X4 = X[3];
    return EndpointConfig{
        ProjectivePoint{-X1},
        ProjectivePoint{-X1 * (X2 + 1.0)},
        ProjectivePoint{-X1 * X3 / (X3 + 1.0)},
        ProjectivePoint{(X4 + 1.0) / X4},
    };
}

AnnulusCoords coords_from_endpoints(const EndpointConfig& e)
{
    const std::array<const ProjectivePoint*, 4> movable{&e.x1, &e.x2, &e.x3, &e.x4};
    for (std::size_t i = 0; i < 4; ++i)
        if (movable[i]->is_infinite())
            throw InvalidCoordinatesError("endpoint x" + std::to_string(i + 1) + " must be finite");

    const double x1 = e.x1.value(), x2 = e.x2.value(), x3 = e.x3.value(), x4 = e.x4.value();
    if (!(x2 < x1 && x1 < x3 && x3 < 0.0 && 1.0 < x4))
        throw InvalidCoordinatesError("endpoints violate the cyclic order x2 < x1 < x3 < 0 < 1 < x4 (got x1=" +
                                      describe(x1) + ", x2=" + describe(x2) + ", x3=" + describe(x3) +
                                      ", x4=" + describe(x4) + ")");

    std::array<double, 4> X{};
    for (std::size_t arc = 0; arc < 4; ++arc) {
        const auto& q = kArcQuadrilaterals[arc];
        X[arc] = cross_ratio(e.at(q[0]), e.at(q[1]), e.at(q[2]), e.at(q[3]));
    }
    return AnnulusCoords{X};
}

double core_trace(double X1, double X2) noexcept
{
    return (X1 * (X2 + 1.0) + 1.0) / std::sqrt(X1 * X2);
}

MobiusMap holonomy_f2(const AnnulusCoords& X)
{
    const double X1 = X[0], X2 = X[1];
    const double s = std::sqrt(X1 * X2);
    return MobiusMap{X1 * (X2 + 1.0) / s, -X1 / s, -1.0 / s, 1.0 / s};
}

CoreGeodesic core_geodesic(const AnnulusCoords& X)
{
    const double X1 = X[0], X2 = X[1];
    const double tr = core_trace(X1, X2);
    const double length = 2.0 * std::acosh(tr / 2.0);

    // p^2 + B p - X1 = 0 with B = X1 (X2 + 1) - 1; roots have product -X1.
    const double B = X1 * (X2 + 1.0) - 1.0;
    const double q = -0.5 * (B + std::copysign(std::sqrt(B * B + 4.0 * X1), B));
    double p1 = 0.0;
    double p2 = 0.0;
    if (q > 0.0) {
        p1 = q;
        p2 = -X1 / q;
    } else {
        p2 = q;
        p1 = -X1 / q;
    }
    return CoreGeodesic{tr, length, p1, p2};
}

std::pair<double, double> fixed_points_exponential(const AnnulusCoords& X)
{
    const double s = std::sqrt(X[0] * X[1]);
    const double half = 0.5 * core_geodesic(X).length;
    return {1.0 - s * std::exp(-half), 1.0 - s * std::exp(half)};
}

}  // namespace fntwist
