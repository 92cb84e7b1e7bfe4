#include "fntwist/verification.hpp"

#include "fntwist/twist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fntwist {

double SampleGenerator::unit()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SampleGenerator::uniform(double lo, double hi)
{
    return lo + (hi - lo) * unit();
}

double SampleGenerator::log_uniform(double lo, double hi)
{
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

AnnulusCoords SampleGenerator::annulus_coords()
{
    std::array<double, 4> X{};
    for (double& v : X)
        v = log_uniform(0.1, 10.0);
    return AnnulusCoords{X};
}

double max_relative_error(const AnnulusCoords& a, const AnnulusCoords& b) noexcept
{
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        worst = std::max(worst, std::fabs(a[i] - b[i]) / std::fabs(b[i]));
    return worst;
}

bool VerificationReport::passed(double tol) const noexcept
{
    return std::all_of(suites.begin(), suites.end(), [tol](const SuiteResult& s) { return s.max_error <= tol; });
}

VerificationReport run_verification(std::size_t samples, std::uint64_t seed)
{
    if (samples == 0)
        throw std::invalid_argument("verification needs at least one sample");

    SuiteResult oracle{"oracle-equivalence"};
    SuiteResult additivity{"flow-additivity"};
    SuiteResult trace{"trace-invariance"};
    SuiteResult dehn{"dehn-compatibility"};
    SuiteResult round_trip{"round-trip"};

    auto record = [](SuiteResult& suite, double err) {
        if (std::isnan(err))
            err = std::numeric_limits<double>::infinity();
        suite.max_error = std::max(suite.max_error, err);
        ++suite.cases;
    };

    SampleGenerator gen(seed);
    for (std::size_t k = 0; k < samples; ++k) {
        const AnnulusCoords X = gen.annulus_coords();
        const TwistParameter t(gen.uniform(0.0, 3.0));
        const double s_step = gen.uniform(0.0, 2.0);
        const double t_step = gen.uniform(0.0, 2.0);

        const AnnulusCoords closed = twist_closed_form(X, t);
        const AnnulusCoords pform = twist_p_form(X, t);
        const AnnulusCoords geometric = twist_oracle(X, t);
        record(oracle, std::max({max_relative_error(closed, pform), max_relative_error(geometric, closed),
                                 max_relative_error(geometric, pform)}));

        const double tr0 = core_trace(X[0], X[1]);
        for (const AnnulusCoords* Y : {&closed, &pform})
            record(trace, std::fabs(core_trace((*Y)[0], (*Y)[1]) - tr0) / tr0);

        const AnnulusCoords two_steps = twist_closed_form(twist_closed_form(X, TwistParameter(s_step)), TwistParameter(t_step));
        record(additivity, max_relative_error(two_steps, twist_closed_form(X, TwistParameter(s_step + t_step))));

        for (int m = 1; m <= 3; ++m)
            record(dehn, max_relative_error(dehn_twist(X, m), twist_closed_form(X, TwistParameter(m))));

        record(round_trip, max_relative_error(coords_from_endpoints(endpoints(X)), X));
    }

    return VerificationReport{{oracle, additivity, trace, dehn, round_trip}};
}

}  // namespace fntwist
