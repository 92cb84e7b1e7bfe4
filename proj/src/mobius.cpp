#include "fntwist/mobius.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace fntwist {

namespace {

constexpr double kVanishingLowerLeft = 1e-14;

}  // namespace

ProjectivePoint::ProjectivePoint(double value) : value_(value), infinite_(false)
{
    if (!std::isfinite(value))
        throw std::invalid_argument("ProjectivePoint: finite value required (use ProjectivePoint::infinity())");
}

double ProjectivePoint::value() const
{
    if (infinite_)
        throw std::logic_error("ProjectivePoint::value() called on the point at infinity");
    return value_;
}

std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p)
{
    if (p.is_infinite())
        return os << "inf";
    return os << p.value();
}

std::string to_string(const ProjectivePoint& p)
{
    std::ostringstream oss;
    oss.precision(17);
    oss << p;
    return oss.str();
}

bool approx_equal(const ProjectivePoint& a, const ProjectivePoint& b, double rel, double abs) noexcept
{
    if (a.is_infinite() || b.is_infinite())
        return a.is_infinite() == b.is_infinite();
    const double u = a.value();
    const double v = b.value();
    const double diff = std::fabs(u - v);
    return diff <= abs || diff <= rel * std::max(std::fabs(u), std::fabs(v));
}

MobiusMap::MobiusMap(double a, double b, double c, double d)
{
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d))
        throw std::invalid_argument("MobiusMap: entries must be finite");
    // Power-of-two prescaling keeps ad - bc in range and is exact.
    int exponent = 0;
    std::frexp(std::max({std::fabs(a), std::fabs(b), std::fabs(c), std::fabs(d)}), &exponent);
    m_ = {std::ldexp(a, -exponent), std::ldexp(b, -exponent), std::ldexp(c, -exponent), std::ldexp(d, -exponent)};

    const double det = m_[0] * m_[3] - m_[1] * m_[2];
    if (!(det > 0.0))
        throw std::invalid_argument("MobiusMap: determinant must be positive");
    const double s = std::sqrt(det);
    for (double& v : m_)
        v /= s;

    // Canonical sign: first nonzero entry positive.
    const auto first = std::find_if(m_.begin(), m_.end(), [](double v) { return v != 0.0; });
    if (*first < 0.0)
        for (double& v : m_)
            v = -v;
}

std::ostream& operator<<(std::ostream& os, const MobiusMap& m)
{
    return os << "[[" << m.a() << ", " << m.b() << "], [" << m.c() << ", " << m.d() << "]]";
}

bool approx_equal(const MobiusMap& m1, const MobiusMap& m2, double tol) noexcept
{
    for (std::size_t i = 0; i < 4; ++i)
        if (std::fabs(m1.entries()[i] - m2.entries()[i]) > tol)
            return false;
    return true;
}

double cross_ratio(const ProjectivePoint& x, const ProjectivePoint& y,
                   const ProjectivePoint& z, const ProjectivePoint& w)
{
    const std::array<const ProjectivePoint*, 4> pts{&x, &y, &z, &w};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (*pts[i] == *pts[j])
                throw DegenerateCrossRatioError("cross_ratio: points " + std::to_string(i + 1) + " and " +
                                                std::to_string(j + 1) + " coincide (" + to_string(*pts[i]) + ")");

    // The two factors containing the infinite point tend to +-1.
    if (x.is_infinite())
        return (z.value() - y.value()) / (w.value() - z.value());
    if (y.is_infinite())
        return -(w.value() - x.value()) / (w.value() - z.value());
    if (z.is_infinite())
        return -(w.value() - x.value()) / (y.value() - x.value());
    if (w.is_infinite())
        return (z.value() - y.value()) / (y.value() - x.value());

    const double xv = x.value(), yv = y.value(), zv = z.value(), wv = w.value();
    return (wv - xv) / (wv - zv) * ((zv - yv) / (yv - xv));
}

ProjectivePoint apply(const MobiusMap& m, const ProjectivePoint& p) noexcept
{
    if (p.is_infinite()) {
        if (m.c() == 0.0)
            return ProjectivePoint::infinity();
        return ProjectivePoint{m.a() / m.c()};
    }
    const double v = p.value();
    const double den = m.c() * v + m.d();
    if (den == 0.0)
        return ProjectivePoint::infinity();
    const double image = (m.a() * v + m.b()) / den;
    if (!std::isfinite(image))
        return ProjectivePoint::infinity();
    return ProjectivePoint{image};
}

MobiusMap compose(const MobiusMap& m1, const MobiusMap& m2)
{
    return MobiusMap{m1.a() * m2.a() + m1.b() * m2.c(), m1.a() * m2.b() + m1.b() * m2.d(),
                     m1.c() * m2.a() + m1.d() * m2.c(), m1.c() * m2.b() + m1.d() * m2.d()};
}

double trace_abs(const MobiusMap& m) noexcept
{
    return std::fabs(m.a() + m.d());
}

bool is_hyperbolic(const MobiusMap& m) noexcept
{
    return trace_abs(m) > 2.0;
}

double translation_length(const MobiusMap& m)
{
    const double tr = trace_abs(m);
    if (!(tr > 2.0))
        throw NonHyperbolicError("translation_length: |tr| = " + std::to_string(tr) + " <= 2, element is not hyperbolic");
    return 2.0 * std::acosh(tr / 2.0);
}

std::pair<ProjectivePoint, ProjectivePoint> fixed_points(const MobiusMap& m)
{
    const double tr = trace_abs(m);
    if (!(tr > 2.0))
        throw NonHyperbolicError("fixed_points: |tr| = " + std::to_string(tr) + " <= 2, element is not hyperbolic");

    const double a = m.a(), b = m.b(), c = m.c(), d = m.d();

    if (std::fabs(c) < kVanishingLowerLeft) {
        // Upper triangular: infinity has eigenvalue a, the finite point
        // b / (d - a) has eigenvalue d.
        const ProjectivePoint finite{b / (d - a)};
        if (std::fabs(a) > std::fabs(d))
            return {ProjectivePoint::infinity(), finite};
        return {finite, ProjectivePoint::infinity()};
    }

    // c p^2 + (d - a) p - b = 0, larger-magnitude root first, the other from
    // the product of roots -b / c.
    const double lin = d - a;
    const double disc = std::max(lin * lin + 4.0 * b * c, 0.0);
    const double q = -0.5 * (lin + std::copysign(std::sqrt(disc), lin));
    const double r1 = q / c;
    const double r2 = -b / q;

    const double lambda1 = std::fabs(c * r1 + d);
    const double lambda2 = std::fabs(c * r2 + d);
    if (lambda1 >= lambda2)
        return {ProjectivePoint{r1}, ProjectivePoint{r2}};
    return {ProjectivePoint{r2}, ProjectivePoint{r1}};
}

}  // namespace fntwist
