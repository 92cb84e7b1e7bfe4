#pragma once

#include "fntwist/annulus.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace fntwist {

/// Reproducible random inputs.
///
/// The engine is std::mt19937_64 seeded with `seed` (its output sequence is
/// fixed by the C++ standard). Each 64-bit output r becomes the double
/// u = (r >> 11) * 2^-53 in [0, 1). Uniform draws on [lo, hi) are
/// lo + (hi - lo) u, log-uniform draws are exp(log lo + (log hi - log lo) u).
class SampleGenerator {
public:
    explicit SampleGenerator(std::uint64_t seed) : engine_(seed) {}

    double unit();
    double uniform(double lo, double hi);
    double log_uniform(double lo, double hi);

    /// Four log-uniform draws on (0.1, 10), in the order X1, X2, X3, X4.
    AnnulusCoords annulus_coords();

private:
    std::mt19937_64 engine_;
};

/// max_i |a_i - b_i| / |b_i|
double max_relative_error(const AnnulusCoords& a, const AnnulusCoords& b) noexcept;

struct SuiteResult {
    std::string name;
    double max_error = 0.0;
    std::size_t cases = 0;
};

struct VerificationReport {
    std::vector<SuiteResult> suites;

    bool passed(double tol) const noexcept;
};

/// Runs the oracle-equivalence, flow-additivity, trace-invariance,
/// Dehn-compatibility and round-trip suites on `samples` seeded inputs.
///
/// Per sample the generator is drawn in this order: X (4 log-uniform values),
/// t in [0, 3), then s and t' in [0, 2) for the additivity check.
/// Throws std::invalid_argument when samples == 0.
VerificationReport run_verification(std::size_t samples, std::uint64_t seed);

}  // namespace fntwist
