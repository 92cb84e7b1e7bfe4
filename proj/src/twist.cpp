#include "fntwist/twist.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace fntwist {

namespace {

constexpr double kFactoredExponent = 300.0;

AnnulusCoords checked(const std::array<double, 4>& Y, const char* route)
{
    for (std::size_t i = 0; i < 4; ++i)
        if (!std::isfinite(Y[i]) || !(Y[i] > 0.0))
            throw TwistRangeError(std::string(route) + ": twisted X" + std::to_string(i + 1) +
                                  " is outside the representable range");
    return AnnulusCoords{Y};
}

MobiusMap axis_chart(double p1, double p2)
{
    const double root = std::sqrt(p1 - p2);
    return MobiusMap{1.0 / root, -p1 / root, 1.0 / root, -p2 / root};
}

bool in_inner_gap(const ProjectivePoint& v, double p1, double p2)
{
    return v.is_finite() && p2 < v.value() && v.value() < p1;
}

}  // namespace

TwistParameter::TwistParameter(double t) : t_(t)
{
    if (!std::isfinite(t))
        throw std::invalid_argument("twist parameter must be finite");
}

StratumMap stratum_map(const AnnulusCoords& X, TwistParameter t)
{
    const CoreGeodesic core = core_geodesic(X);
    const double p1 = core.p1;
    const double p2 = core.p2;
    const double gap = p1 - p2;
    const double displacement = t.value() * core.length;

    // (1 / (gap e^{tL/2})) [[p1 - p2 e^{tL}, p1 p2 (e^{tL} - 1)], [1 - e^{tL}, p1 e^{tL} - p2]],
    // rewritten with 2 sinh(tL/2) so that t = 0 gives the identity exactly.
    const double half = 0.5 * displacement;
    const double shrink = std::exp(-half);
    const double sh = 2.0 * std::sinh(half) / gap;
    if (!std::isfinite(sh))
        throw TwistRangeError("stratum_map: e^{tL/2} overflows for tL = " + std::to_string(displacement));

    // Past |tL| ~ 70 the entries are ~e^{|tL|/2} and ad - bc = 1 is lost to cancellation.
    std::optional<MobiusMap> map;
    try {
        map.emplace(shrink - p2 * sh, p1 * p2 * sh, -sh, shrink + p1 * sh);
    } catch (const std::invalid_argument&) {
        throw TwistRangeError("stratum_map: matrix is numerically singular for tL = " + std::to_string(displacement));
    }
    return StratumMap{*map, axis_chart(p1, p2), p1, p2, displacement};
}

TwistedEndpoints twisted_endpoints(const AnnulusCoords& X, TwistParameter t)
{
    const StratumMap E = stratum_map(X, t);
    const EndpointConfig e = endpoints(X);
    return TwistedEndpoints{apply(E.map, ProjectivePoint{0.0}), apply(E.map, e.x1), apply(E.map, e.x3)};
}

AnnulusCoords twist_p_form(const AnnulusCoords& X, TwistParameter t)
{
    const double X1 = X[0], X2 = X[1], X3 = X[2], X4 = X[3];
    const CoreGeodesic core = core_geodesic(X);
    const double p1 = core.p1;
    const double p2 = core.p2;
    const double K = p1 * p1 + p2 * p2 + 2.0 * X1;
    const double tL = t.value() * core.length;
    if (tL == 0.0)
        return X;

    // X1 + p1 > 0 and X1 + p2 = p2 (1 - p1) < 0, so D and p1 E - p2 are
    // sums of positive terms in either scaling.
    std::array<double, 4> Y{};
    if (tL >= 0.0) {
        const double u = std::exp(-tL);
        const double D = (X1 + p1) - (X1 + p2) * u;
        const double g = p1 - p2 * u;
        const double ratio = D / g;
        Y = {X1 * K * u / (D * D), X2 * (g * g / K) * std::exp(tL), X3 * ratio, X4 * ratio};
    } else {
        const double E = std::exp(tL);
        const double D = (X1 + p1) * E - (X1 + p2);
        const double g = p1 * E - p2;
        const double ratio = D / g;
        Y = {X1 * K * E / (D * D), X2 * (g * g / K) * std::exp(-tL), X3 * ratio, X4 * ratio};
    }
    return checked(Y, "twist_p_form");
}

AnnulusCoords twist_closed_form(const AnnulusCoords& X, TwistParameter t)
{
    const double X1 = X[0], X2 = X[1], X3 = X[2], X4 = X[3];
    const double L = core_geodesic(X).length;
    const double s = std::sqrt(X1 * X2);
    const double tL = t.value() * L;

    const double kappa = 2.0 * (X1 * X2 * std::cosh(L) - 2.0 * s * std::cosh(L / 2.0) + X1 + 1.0);
    const double a_in = s * std::exp(-L / 2.0) - X1 - 1.0;
    const double a_out = s * std::exp(L / 2.0) - X1 - 1.0;
    const double b_in = s * std::exp(-L / 2.0) - 1.0;
    const double b_out = s * std::exp(L / 2.0) - 1.0;

    std::array<double, 4> Y{};
    if (tL <= kFactoredExponent) {
        const double E = std::exp(tL);
        const double A = a_in * E - a_out;
        const double B = b_in * E - b_out;
        Y = {X1 * kappa * E / (A * A), X2 * B * B / (kappa * E), X3 * A / B, X4 * A / B};
    } else {
        const double u = std::exp(-tL);
        const double A = a_in - a_out * u;
        const double B = b_in - b_out * u;
        Y = {X1 * kappa * u / (A * A), X2 * (B * B / kappa) * std::exp(tL), X3 * A / B, X4 * A / B};
    }
    return checked(Y, "twist_closed_form");
}

AnnulusCoords twist_oracle(const AnnulusCoords& X, TwistParameter t)
{
    const CoreGeodesic core = core_geodesic(X);
    const MobiusMap chart = axis_chart(core.p1, core.p2);
    const double tL = t.value() * core.length;
    const EndpointConfig e = endpoints(X);
    const double scale = std::exp(tL);
    if (!std::isfinite(scale) || !(scale > 0.0))
        throw TwistRangeError("twist_oracle: e^{tL} out of range for tL = " + std::to_string(tL));

    // Outer gap (containing 1 and inf) is the base gap and stays fixed.
    // Cross ratios are Mobius invariant, so evaluate them in the axis chart
    // where the stratum map is w -> e^{tL} w, without forming its matrix.
    auto image = [&](Vertex v) {
        const ProjectivePoint p = e.at(v);
        const ProjectivePoint w = apply(chart, p);
        if (!in_inner_gap(p, core.p1, core.p2))
            return w;
        const double moved = scale * w.value();
        if (!std::isfinite(moved))
            throw TwistRangeError("twist_oracle: twisted vertex overflows for tL = " + std::to_string(tL));
        return ProjectivePoint{moved};
    };

    std::array<double, 4> Y{};
    for (std::size_t arc = 0; arc < 4; ++arc) {
        const auto& q = kArcQuadrilaterals[arc];
        Y[arc] = cross_ratio(image(q[0]), image(q[1]), image(q[2]), image(q[3]));
    }
    return checked(Y, "twist_oracle");
}

AnnulusCoords dehn_twist(const AnnulusCoords& X, int m)
{
    return checked(dehn_twist_rational(X.values(), m), "dehn_twist");
}

TwistMethod parse_twist_method(std::string_view name)
{
    if (name == "closed")
        return TwistMethod::Closed;
    if (name == "p-form")
        return TwistMethod::PForm;
    if (name == "oracle")
        return TwistMethod::Oracle;
    throw std::invalid_argument("unknown twist method '" + std::string(name) + "' (expected closed, p-form or oracle)");
}

std::string_view to_string(TwistMethod method) noexcept
{
    switch (method) {
    case TwistMethod::Closed: return "closed";
    case TwistMethod::PForm: return "p-form";
    case TwistMethod::Oracle: return "oracle";
    }
    return "p-form";
}

AnnulusCoords twist(const AnnulusCoords& X, TwistParameter t, TwistMethod method)
{
    switch (method) {
    case TwistMethod::Closed: return twist_closed_form(X, t);
    case TwistMethod::Oracle: return twist_oracle(X, t);
    case TwistMethod::PForm: break;
    }
    return twist_p_form(X, t);
}

}  // namespace fntwist
