#pragma once

#include "fntwist/annulus.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace fntwist::test {

inline double rel_diff(double a, double b)
{
    return std::fabs(a - b) / std::max(std::fabs(b), 1e-300);
}

inline bool close(double a, double b, double rel)
{
    return rel_diff(a, b) <= rel;
}

inline bool close(const AnnulusCoords& a, const AnnulusCoords& b, double rel)
{
    for (std::size_t i = 0; i < 4; ++i)
        if (!close(a[i], b[i], rel))
            return false;
    return true;
}

/// Log-uniform coordinates on (0.1, 10), independent of the library's own
/// SampleGenerator.
inline AnnulusCoords random_coords(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(std::log(0.1), std::log(10.0));
    return AnnulusCoords{std::exp(u(rng)), std::exp(u(rng)), std::exp(u(rng)), std::exp(u(rng))};
}

}  // namespace fntwist::test
