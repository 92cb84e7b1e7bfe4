#pragma once

#include "fntwist/annulus.hpp"
#include "fntwist/mobius.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fntwist {

/// Raised when a twisted coordinate over- or underflows double range.
class TwistRangeError : public std::range_error {
public:
    using std::range_error::range_error;
};

/// Twist amount in units of the core length L(f2). Any finite value; t = 1
/// is one Dehn twist, negative values twist the other way.
class TwistParameter {
public:
    /// Throws std::invalid_argument when t is not finite.
    explicit TwistParameter(double t);

    double value() const noexcept { return t_; }

private:
    double t_;
};

/// The hyperbolic element applied to the gap on the inner side of the core
/// geodesic. Same axis as f2 (fixed points p1, p2), translation length |t| L.
struct StratumMap {
    MobiusMap map;
    /// A1 = (1 / sqrt(p1 - p2)) [[1, -p1], [1, -p2]], sends p1 -> 0 and
    /// p2 -> inf; in this chart `map` is multiplication by e^{tL}.
    MobiusMap axis_chart;
    double p1;
    double p2;
    /// t L(f2), signed.
    double displacement;
};

StratumMap stratum_map(const AnnulusCoords& X, TwistParameter t);

/// Images of the inner-gap vertices 0, x1, x3 under the stratum map.
struct TwistedEndpoints {
    ProjectivePoint zero;
    ProjectivePoint x1;
    ProjectivePoint x3;
};

TwistedEndpoints twisted_endpoints(const AnnulusCoords& X, TwistParameter t);

/// Closed form in the fixed points p1, p2 of f2. With E = e^{tL} and
/// D = (X1 + p1) E - (X1 + p2):
///
///   X1' = X1 (p1^2 + p2^2 + 2 X1) E / D^2
///   X2' = X2 (p1 E - p2)^2 / ((p1^2 + p2^2 + 2 X1) E)
///   X3' = X3 D / (p1 E - p2)
///   X4' = X4 D / (p1 E - p2)
///
/// Every sum above has terms of one sign once E is factored out on the
/// appropriate side, so the evaluation is free of cancellation.
AnnulusCoords twist_p_form(const AnnulusCoords& X, TwistParameter t);

/// The cosh / exponential closed form in L(f2) and sqrt(X1 X2), evaluated as
/// printed for |tL| <= 300 and with e^{tL} factored out beyond.
AnnulusCoords twist_closed_form(const AnnulusCoords& X, TwistParameter t);

/// Geometric reference: build the ideal vertices, move those lying in the
/// inner gap (between p2 and p1) by the stratum map, keep the rest, and take
/// the cross ratio of each arc's quadrilateral.
AnnulusCoords twist_oracle(const AnnulusCoords& X, TwistParameter t);

/// One Dehn twist on coordinates:
/// (X1^2 X2 / (X1 + 1)^2, 1 / X1, (X1 + 1) X3, (X1 + 1) X4).
template <class Field>
std::array<Field, 4> dehn_step(const std::array<Field, 4>& X)
{
    const Field one(1);
    const Field s = X[0] + one;
    return {X[0] * X[0] * X[1] / (s * s), one / X[0], s * X[2], s * X[3]};
}

/// Inverse of dehn_step.
template <class Field>
std::array<Field, 4> dehn_inverse_step(const std::array<Field, 4>& Y)
{
    const Field one(1);
    const Field s = Y[1] + one;
    return {one / Y[1], Y[0] * s * s, Y[2] * Y[1] / s, Y[3] * Y[1] / s};
}

/// m-fold Dehn twist over any field type; only field operations are used.
template <class Field>
std::array<Field, 4> dehn_twist_rational(std::array<Field, 4> X, int m)
{
    for (; m > 0; --m)
        X = dehn_step(X);
    for (; m < 0; ++m)
        X = dehn_inverse_step(X);
    return X;
}

AnnulusCoords dehn_twist(const AnnulusCoords& X, int m);

enum class TwistMethod { Closed, PForm, Oracle };

/// "closed", "p-form" or "oracle". Throws std::invalid_argument otherwise.
TwistMethod parse_twist_method(std::string_view name);
std::string_view to_string(TwistMethod method) noexcept;

AnnulusCoords twist(const AnnulusCoords& X, TwistParameter t, TwistMethod method = TwistMethod::PForm);

}  // namespace fntwist
