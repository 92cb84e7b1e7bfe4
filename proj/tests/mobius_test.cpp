#include "fntwist/annulus.hpp"
#include "fntwist/mobius.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <cmath>
#include <random>

using namespace fntwist;
using fntwist::test::close;

namespace {

const ProjectivePoint kInf = ProjectivePoint::infinity();

MobiusMap random_map(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (;;) {
        const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        const double det = a * d - b * c;
        if (std::fabs(det) < 0.5)
            continue;
        // Flip a column to make the determinant positive.
        return det > 0 ? MobiusMap{a, b, c, d} : MobiusMap{-a, b, -c, d};
    }
}

}  // namespace

TEST_CASE("ProjectivePoint rejects non-finite values and keeps infinity tagged")
{
    CHECK_THROWS_AS(ProjectivePoint{std::nan("")}, std::invalid_argument);
    CHECK_THROWS_AS(ProjectivePoint{HUGE_VAL}, std::invalid_argument);
    CHECK(kInf.is_infinite());
    CHECK_THROWS_AS(kInf.value(), std::logic_error);
    CHECK(approx_equal(ProjectivePoint{1.0}, ProjectivePoint{1.0 + 1e-12}));
    CHECK(approx_equal(ProjectivePoint{0.0}, ProjectivePoint{1e-10}));
    CHECK_FALSE(approx_equal(ProjectivePoint{1.0}, ProjectivePoint{1.001}));
    CHECK_FALSE(approx_equal(ProjectivePoint{1e300}, kInf));
}

TEST_CASE("cross_ratio values")
{
    CHECK(cross_ratio(-1.0, 0.0, 1.0, kInf) == doctest::Approx(1.0));
    CHECK(cross_ratio(0.0, 1.0, 2.0, 3.0) == doctest::Approx(3.0));

    SUBCASE("infinity in each slot agrees with a large finite stand-in")
    {
        const double big = 1e9;
        CHECK(cross_ratio(kInf, 0.0, 1.0, 3.0) == doctest::Approx(cross_ratio(-big, 0.0, 1.0, 3.0)).epsilon(1e-8));
        CHECK(cross_ratio(-2.0, kInf, 1.0, 3.0) == doctest::Approx(cross_ratio(-2.0, -big, 1.0, 3.0)).epsilon(1e-8));
        CHECK(cross_ratio(-2.0, 0.0, kInf, 3.0) == doctest::Approx(cross_ratio(-2.0, 0.0, big, 3.0)).epsilon(1e-8));
        CHECK(cross_ratio(-2.0, 0.0, 1.0, kInf) == doctest::Approx(cross_ratio(-2.0, 0.0, 1.0, big)).epsilon(1e-8));
    }

    SUBCASE("arc 1 quadrilateral at X = (1,1,1,1)")
    {
        const EndpointConfig e = endpoints(AnnulusCoords{1, 1, 1, 1});
        const auto& q = kArcQuadrilaterals[0];
        CHECK(cross_ratio(e.at(q[0]), e.at(q[1]), e.at(q[2]), e.at(q[3])) == doctest::Approx(1.0));
    }

    SUBCASE("coincident points are an error")
    {
        CHECK_THROWS_AS(cross_ratio(0.0, 0.0, 1.0, 2.0), DegenerateCrossRatioError);
        CHECK_THROWS_AS(cross_ratio(0.0, 1.0, 2.0, 1.0), DegenerateCrossRatioError);
        CHECK_THROWS_AS(cross_ratio(kInf, 1.0, kInf, 2.0), DegenerateCrossRatioError);
    }
}

TEST_CASE("MobiusMap normalization")
{
    const MobiusMap m{2.0, 1.0, 1.0, 1.0};
    CHECK(m.a() * m.d() - m.b() * m.c() == doctest::Approx(1.0));
    CHECK(MobiusMap{-2.0, -1.0, -1.0, -1.0} == m);
    CHECK(approx_equal(MobiusMap{6.0, 3.0, 3.0, 3.0}, m, 1e-15));
    CHECK(MobiusMap{0.0, -1.0, 1.0, 0.0}.b() == 1.0);  // first nonzero entry made positive

    CHECK_THROWS_AS((MobiusMap{1.0, 2.0, 2.0, 4.0}), std::invalid_argument);
    CHECK_THROWS_AS((MobiusMap{0.0, 1.0, 1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS((MobiusMap{1.0, 0.0, 0.0, std::nan("")}), std::invalid_argument);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> scale(0.01, 100.0);
    for (int i = 0; i < 200; ++i) {
        const MobiusMap base = random_map(rng);
        const double k = scale(rng);
        CHECK(approx_equal(MobiusMap{k * base.a(), k * base.b(), k * base.c(), k * base.d()}, base, 1e-13));
    }
}

TEST_CASE("apply")
{
    CHECK(apply(MobiusMap::identity(), 2.5) == ProjectivePoint{2.5});
    CHECK(apply(MobiusMap::identity(), kInf).is_infinite());

    const MobiusMap m{2.0, 1.0, 1.0, 1.0};
    CHECK(apply(m, -1.0).is_infinite());                       // -d/c
    CHECK(apply(m, kInf).value() == doctest::Approx(2.0));     // a/c
    CHECK(apply(MobiusMap{2.0, 1.0, 0.0, 0.5}, kInf).is_infinite());

    const MobiusMap f2 = holonomy_f2(AnnulusCoords{1, 1, 1, 1});
    CHECK(apply(f2, 0.0).value() == doctest::Approx(-1.0));
    CHECK(apply(f2, 1.0).is_infinite());
}

TEST_CASE("compose")
{
    std::mt19937_64 rng(11);
    const MobiusMap m = random_map(rng);
    CHECK(approx_equal(compose(MobiusMap::identity(), m), m, 1e-15));
    CHECK(approx_equal(compose(m, m.inverse()), MobiusMap::identity(), 1e-12));

    // Parabolic generators: z -> z + 1 and z -> z / (1 - 2z).
    const MobiusMap shift{1.0, 1.0, 0.0, 1.0};
    const MobiusMap lower{1.0, 0.0, -2.0, 1.0};
    const double A[2][2] = {{1, 1}, {0, 1}};
    const double B[2][2] = {{1, 0}, {-2, 1}};
    double P[2][2] = {};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                P[i][j] += A[i][k] * B[k][j];
    CHECK(compose(shift, lower) == MobiusMap{P[0][0], P[0][1], P[1][0], P[1][1]});
    CHECK(trace_abs(compose(shift, lower)) == doctest::Approx(0.0));
}

TEST_CASE("trace_abs and translation_length")
{
    CHECK(trace_abs(MobiusMap::identity()) == 2.0);
    CHECK(trace_abs(holonomy_f2(AnnulusCoords{1, 1, 1, 1})) == doctest::Approx(3.0));
    CHECK(trace_abs(holonomy_f2(AnnulusCoords{4, 1, 1, 1})) == doctest::Approx(4.5));

    const double c = std::cosh(1.0);
    CHECK(translation_length(MobiusMap{c, std::sinh(1.0), std::sinh(1.0), c}) == doctest::Approx(2.0));
    CHECK(translation_length(holonomy_f2(AnnulusCoords{1, 1, 1, 1})) == doctest::Approx(1.9248473002384138));

    const double th = 0.3;
    const MobiusMap rotation{std::cos(th), -std::sin(th), std::sin(th), std::cos(th)};
    CHECK_THROWS_AS(translation_length(rotation), NonHyperbolicError);
    CHECK_THROWS_AS(translation_length(MobiusMap{1.0, 1.0, 0.0, 1.0}), NonHyperbolicError);
    CHECK_THROWS_AS(fixed_points(rotation), NonHyperbolicError);
}

TEST_CASE("fixed_points")
{
    const double lambda = 3.0;
    const auto diag = fixed_points(MobiusMap{lambda, 0.0, 0.0, 1.0 / lambda});
    CHECK(diag.first.is_infinite());
    CHECK(diag.second == ProjectivePoint{0.0});

    const auto inv = fixed_points(MobiusMap{1.0 / lambda, 0.0, 0.0, lambda});
    CHECK(inv.first == ProjectivePoint{0.0});
    CHECK(inv.second.is_infinite());

    // f2 at (1,1,1,1) pushes towards p2 = -(sqrt5 + 1) / 2.
    const auto f2 = fixed_points(holonomy_f2(AnnulusCoords{1, 1, 1, 1}));
    CHECK(f2.first.value() == doctest::Approx(-(std::sqrt(5.0) + 1.0) / 2.0).epsilon(1e-14));
    CHECK(f2.second.value() == doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0).epsilon(1e-14));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const AnnulusCoords X = test::random_coords(rng);
        const auto [attracting, repelling] = fixed_points(holonomy_f2(X));
        CHECK(attracting.value() * repelling.value() == doctest::Approx(-X[0]).epsilon(1e-12));
    }
}

TEST_CASE("property: Mobius invariance of the cross ratio")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> pos(-10.0, 10.0);
    std::uniform_int_distribution<int> slot(0, 7);
    for (int i = 0; i < 1000; ++i) {
        std::array<ProjectivePoint, 4> q{0.0, 0.0, 0.0, 0.0};
        for (auto& p : q)
            p = ProjectivePoint{pos(rng)};
        const int inf_slot = slot(rng);
        if (inf_slot < 4)
            q[static_cast<std::size_t>(inf_slot)] = kInf;
        bool distinct = true;
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = a + 1; b < 4; ++b)
                if (q[a].is_finite() && q[b].is_finite() && std::fabs(q[a].value() - q[b].value()) < 1e-3)
                    distinct = false;
        if (!distinct)
            continue;

        const MobiusMap m = random_map(rng);
        const double before = cross_ratio(q[0], q[1], q[2], q[3]);
        const double after = cross_ratio(apply(m, q[0]), apply(m, q[1]), apply(m, q[2]), apply(m, q[3]));
        CHECK(close(after, before, 1e-10));
    }
}

TEST_CASE("property: action is a homomorphism and invariants are conjugation-invariant")
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> pos(-10.0, 10.0);
    for (int i = 0; i < 300; ++i) {
        const MobiusMap m1 = random_map(rng);
        const MobiusMap m2 = random_map(rng);
        const ProjectivePoint p{pos(rng)};
        CHECK(approx_equal(apply(compose(m1, m2), p), apply(m1, apply(m2, p)), 1e-8, 1e-8));

        const AnnulusCoords X = test::random_coords(rng);
        const MobiusMap f2 = holonomy_f2(X);
        const MobiusMap conj = compose(compose(m1, f2), m1.inverse());
        CHECK(close(trace_abs(conj), trace_abs(f2), 1e-9));
        CHECK(close(translation_length(conj), translation_length(f2), 1e-8));

        for (const ProjectivePoint& fp : {fixed_points(conj).first, fixed_points(conj).second})
            CHECK(approx_equal(apply(conj, fp), fp, 1e-8, 1e-8));
    }
}
