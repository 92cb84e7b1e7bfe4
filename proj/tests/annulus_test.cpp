#include "fntwist/annulus.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <cmath>
#include <limits>
#include <random>

using namespace fntwist;
using fntwist::test::close;

TEST_CASE("AnnulusCoords validation")
{
    CHECK_NOTHROW(AnnulusCoords{1, 1, 1, 1});
    CHECK_THROWS_AS(AnnulusCoords(1, -1, 1, 1), InvalidCoordinatesError);
    CHECK_THROWS_AS(AnnulusCoords(0, 1, 1, 1), InvalidCoordinatesError);
    CHECK_THROWS_AS(AnnulusCoords(1, 1, std::numeric_limits<double>::infinity(), 1), InvalidCoordinatesError);
    CHECK_THROWS_AS(AnnulusCoords(1, 1, 1, std::nan("")), InvalidCoordinatesError);
    // |tr f2| -> 2 as X1 -> 0 with X1 X2 = 1.
    CHECK_THROWS_AS(AnnulusCoords(1e-13, 1e13, 1, 1), InvalidCoordinatesError);

    try {
        AnnulusCoords(1, -1, 1, 1);
        FAIL("expected throw");
    } catch (const InvalidCoordinatesError& e) {
        CHECK(std::string(e.what()).find("X2") != std::string::npos);
    }
}

TEST_CASE("endpoints")
{
    const EndpointConfig a = endpoints(AnnulusCoords{1, 1, 1, 1});
    CHECK(a.x1.value() == -1.0);
    CHECK(a.x2.value() == -2.0);
    CHECK(a.x3.value() == -0.5);
    CHECK(a.x4.value() == 2.0);

    const EndpointConfig b = endpoints(AnnulusCoords{2, 1, 1, 1});
    CHECK(b.x1.value() == -2.0);
    CHECK(b.x2.value() == -4.0);
    CHECK(b.x3.value() == -1.0);
    CHECK(b.x4.value() == 2.0);

    CHECK(a.at(Vertex::Infinity).is_infinite());
    CHECK(a.at(Vertex::One) == ProjectivePoint{1.0});

    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        const EndpointConfig e = endpoints(test::random_coords(rng));
        CHECK(e.x2.value() < e.x1.value());
        CHECK(e.x1.value() < e.x3.value());
        CHECK(e.x3.value() < 0.0);
        CHECK(1.0 < e.x4.value());
    }
}

TEST_CASE("coords_from_endpoints")
{
    CHECK(close(coords_from_endpoints(endpoints(AnnulusCoords{1, 1, 1, 1})), AnnulusCoords{1, 1, 1, 1}, 1e-15));
    CHECK(close(coords_from_endpoints(endpoints(AnnulusCoords{2, 3, 0.5, 4})), AnnulusCoords{2, 3, 0.5, 4}, 1e-10));

    EndpointConfig bad = endpoints(AnnulusCoords{1, 1, 1, 1});
    bad.x3 = ProjectivePoint{-1.5};  // now x3 < x1
    CHECK_THROWS_AS(coords_from_endpoints(bad), InvalidCoordinatesError);
    bad = endpoints(AnnulusCoords{1, 1, 1, 1});
    bad.x4 = ProjectivePoint{0.5};
    CHECK_THROWS_AS(coords_from_endpoints(bad), InvalidCoordinatesError);
    bad.x4 = ProjectivePoint::infinity();
    CHECK_THROWS_AS(coords_from_endpoints(bad), InvalidCoordinatesError);

    std::mt19937_64 rng(6);
    for (int i = 0; i < 1000; ++i) {
        const AnnulusCoords X = test::random_coords(rng);
        CHECK(close(coords_from_endpoints(endpoints(X)), X, 1e-10));
    }
}

TEST_CASE("holonomy_f2")
{
    const AnnulusCoords one{1, 1, 1, 1};
    CHECK(holonomy_f2(one) == MobiusMap{2.0, -1.0, -1.0, 1.0});

    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        const AnnulusCoords X = test::random_coords(rng);
        const MobiusMap f2 = holonomy_f2(X);
        const EndpointConfig e = endpoints(X);
        // Glues the lift 0 - 1 of arc 2 to inf - x1, and the outer boundary
        // lift 1 - inf to inf - x2.
        CHECK(approx_equal(apply(f2, 0.0), e.x1, 1e-12, 1e-12));
        CHECK(apply(f2, 1.0).is_infinite());
        CHECK(approx_equal(apply(f2, ProjectivePoint::infinity()), e.x2, 1e-12, 1e-12));
        CHECK(close(trace_abs(f2), (X[0] * (X[1] + 1) + 1) / std::sqrt(X[0] * X[1]), 1e-14));
    }
}

TEST_CASE("core_geodesic")
{
    const CoreGeodesic g = core_geodesic(AnnulusCoords{1, 1, 1, 1});
    CHECK(g.trace_abs == doctest::Approx(3.0));
    CHECK(g.length == doctest::Approx(1.9248473002384138).epsilon(1e-14));
    CHECK(g.p1 == doctest::Approx(0.6180339887498949).epsilon(1e-14));
    CHECK(g.p2 == doctest::Approx(-1.618033988749895).epsilon(1e-14));

    // Frozen high-precision values for X = (2, 3, 0.5, 4).
    const CoreGeodesic h = core_geodesic(AnnulusCoords{2, 3, 0.5, 4});
    CHECK(h.trace_abs == doctest::Approx(3.6742346141747671).epsilon(1e-14));
    CHECK(h.length == doctest::Approx(2.4346983653758534).epsilon(1e-14));
}

TEST_CASE("property: fixed point identities")
{
    std::mt19937_64 rng(1000);
    for (int i = 0; i < 1000; ++i) {
        const AnnulusCoords X = test::random_coords(rng);
        const double X1 = X[0], X2 = X[1];
        const CoreGeodesic g = core_geodesic(X);

        CHECK(std::fabs(g.p1 * g.p2 + X1) <= 1e-10 * X1);
        CHECK(close(g.p1 + g.p2, 1.0 - X1 * X2 - X1, 1e-10));
        CHECK(g.p1 > 0.0);
        CHECK(g.p1 < 1.0);
        CHECK(g.p2 < 0.0);
        CHECK(close(std::cosh(g.length / 2) * 2 * std::sqrt(X1 * X2), X1 * X2 + X1 + 1, 1e-10));

        const auto [e1, e2] = fixed_points_exponential(X);
        CHECK(close(e1, g.p1, 1e-10));
        CHECK(close(e2, g.p2, 1e-10));

        // Against the generic quadratic root-finder on the matrix.
        const auto [attracting, repelling] = fixed_points(holonomy_f2(X));
        CHECK(close(attracting.value(), g.p2, 1e-10));
        CHECK(close(repelling.value(), g.p1, 1e-10));
    }
}
