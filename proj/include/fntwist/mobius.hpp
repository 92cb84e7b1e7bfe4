#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace fntwist {

/// Raised when an operation needs a hyperbolic element (|tr| > 2) and gets
/// an elliptic or parabolic one.
class NonHyperbolicError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a cross ratio is requested for a quadruple with two
/// coincident points.
class DegenerateCrossRatioError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A point of the circle at infinity R u {inf} of the upper half-plane.
class ProjectivePoint {
public:
    /// Finite point. Throws std::invalid_argument on NaN or +-inf.
    ProjectivePoint(double value);  // NOLINT(google-explicit-constructor)

    static ProjectivePoint infinity() noexcept { return ProjectivePoint{}; }

    bool is_infinite() const noexcept { return infinite_; }
    bool is_finite() const noexcept { return !infinite_; }

    /// Finite value. Throws std::logic_error for the point at infinity.
    double value() const;

    /// Exact comparison: same infinity flag and bit-equal finite value.
    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) noexcept
    {
        if (a.infinite_ || b.infinite_)
            return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }

private:
    ProjectivePoint() noexcept : value_(0.0), infinite_(true) {}

    double value_;
    bool infinite_;
};

std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p);
std::string to_string(const ProjectivePoint& p);

/// Tolerant equality: exact on the infinity flag, relative `rel` on finite
/// values, with an absolute floor `abs` near zero.
bool approx_equal(const ProjectivePoint& a, const ProjectivePoint& b,
                  double rel = 1e-9, double abs = 1e-9) noexcept;

/// An element of PSL(2,R), stored as the canonical representative with
/// ad - bc = 1 whose first nonzero entry (in a, b, c, d order) is positive.
class MobiusMap {
public:
    /// Normalizes (a, b, c, d) by sqrt(det). Throws std::invalid_argument if
    /// the determinant is not strictly positive or an entry is not finite.
    MobiusMap(double a, double b, double c, double d);

    static MobiusMap identity() noexcept { return MobiusMap{Raw{}, 1.0, 0.0, 0.0, 1.0}; }

    double a() const noexcept { return m_[0]; }
    double b() const noexcept { return m_[1]; }
    double c() const noexcept { return m_[2]; }
    double d() const noexcept { return m_[3]; }
    const std::array<double, 4>& entries() const noexcept { return m_; }

    MobiusMap inverse() const noexcept { return MobiusMap{Raw{}, m_[3], -m_[1], -m_[2], m_[0]}; }

    /// Exact comparison of canonical representatives.
    friend bool operator==(const MobiusMap&, const MobiusMap&) = default;

private:
    struct Raw {};
    // Trusted constructor for entries already known to be canonical.
    MobiusMap(Raw, double a, double b, double c, double d) noexcept : m_{a, b, c, d} {}

    std::array<double, 4> m_;
};

std::ostream& operator<<(std::ostream& os, const MobiusMap& m);

/// Entrywise comparison of canonical representatives within absolute `tol`.
bool approx_equal(const MobiusMap& m1, const MobiusMap& m2, double tol = 1e-12) noexcept;

/// Cross ratio [x:y:z:w] = (w-x)/(w-z) * (z-y)/(y-x).
///
/// Any one argument may be the point at infinity; the two factors that
/// contain it cancel algebraically. Throws DegenerateCrossRatioError when two
/// of the points coincide.
double cross_ratio(const ProjectivePoint& x, const ProjectivePoint& y,
                   const ProjectivePoint& z, const ProjectivePoint& w);

/// Fractional-linear action p -> (a p + b) / (c p + d) on R u {inf}.
ProjectivePoint apply(const MobiusMap& m, const ProjectivePoint& p) noexcept;

/// Matrix product m1 * m2 (apply m2 first), renormalized.
MobiusMap compose(const MobiusMap& m1, const MobiusMap& m2);

double trace_abs(const MobiusMap& m) noexcept;

bool is_hyperbolic(const MobiusMap& m) noexcept;

/// 2 acosh(|tr| / 2). Throws NonHyperbolicError when |tr| <= 2.
double translation_length(const MobiusMap& m);

/// Fixed points of a hyperbolic map as (attracting, repelling).
///
/// The attracting point is the one whose eigenvalue c p + d has the larger
/// magnitude. When |c| < 1e-14 one of the fixed points is infinity.
/// Throws NonHyperbolicError for |tr| <= 2.
std::pair<ProjectivePoint, ProjectivePoint> fixed_points(const MobiusMap& m);

}  // namespace fntwist
