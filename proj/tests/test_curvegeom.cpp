#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hedgehog/hedgehog.hpp"
#include "hedgehog/inequality.hpp"
#include "hedgehog/oracle.hpp"
#include "helpers.hpp"

using namespace hedgehog;

TEST_CASE("parameterization") {
    const Hedgehog circle(TrigPoly(2.0));
    const Point2 top = circle.point_at(kPi / 2.0);
    CHECK(top.x == doctest::Approx(0.0).scale(1.0));
    CHECK(top.y == doctest::Approx(2.0));

    const Hedgehog oval(testutil::oval20_support());
    const Point2 p0 = oval.point_at(0.0);
    CHECK(p0.x == doctest::Approx(21.0));
    CHECK(p0.y == doctest::Approx(2.0));

    testutil::Rng rng(5);
    for (int m = 0; m < 20; ++m) {
        const double s = rng.uniform(0.0, kTwoPi);
        CHECK(norm(oval.point_at(s + kTwoPi) - oval.point_at(s)) < 1e-10);
    }
}

TEST_CASE("quarter-turn curve") {
    const Hedgehog oval(testutil::oval20_support());
    testutil::Rng rng(6);
    for (int m = 0; m < 20; ++m) {
        const double s = rng.uniform(0.0, kTwoPi);
        const Point2 p = oval.point_at(s);
        const Point2 q = oval.perp_point_at(s);
        CHECK(q.x == doctest::Approx(-p.y));
        CHECK(q.y == doctest::Approx(p.x));
        const Point2 four = perp(perp(perp(perp(p))));
        CHECK(norm(four - p) == 0.0);
    }
    const Hedgehog circle(TrigPoly(1.5));
    CHECK(norm(circle.perp_point_at(0.0) - Point2{0.0, 1.5}) < 1e-15);
}

TEST_CASE("rotation") {
    const Hedgehog oval(testutil::oval30_support());
    CHECK(oval.rotated(0.0).support() == oval.support());
    const TrigPoly back = oval.rotated(kTwoPi).support();
    for (const Harmonic& t : oval.support().harmonics()) {
        auto [a, b] = back.coefficient(t.n);
        CHECK(std::abs(a - t.a) < 1e-12);
        CHECK(std::abs(b - t.b) < 1e-12);
    }
    const Hedgehog circle(TrigPoly(3.0));
    CHECK(circle.rotated(1.234).support() == circle.support());

    SUBCASE("rotation law on points") {
        testutil::Rng rng(7);
        const double alpha = 0.77;
        const Hedgehog turned = oval.rotated(alpha);
        for (int m = 0; m < 20; ++m) {
            const double s = rng.uniform(0.0, kTwoPi);
            CHECK(norm(turned.point_at(s + alpha) - rotate(oval.point_at(s), alpha)) < 1e-9);
        }
    }
}

TEST_CASE("width and average width") {
    const Hedgehog golden(testutil::golden_support());
    CHECK(golden.average_width() == doctest::Approx(274.0));

    const Hedgehog circle(TrigPoly(2.5));
    for (double s : {0.0, 0.9, 4.4}) CHECK(circle.width(s) == doctest::Approx(5.0));

    const Hedgehog odd(TrigPoly(11.0, {{3, 1.0, 0.0}}));
    CHECK(odd.width(0.0) == doctest::Approx(22.0));
}

TEST_CASE("Steiner point and disk") {
    const Hedgehog golden(testutil::golden_support());
    CHECK(norm(golden.steiner_point()) == 0.0);
    CHECK(golden.steiner_disk().radius == doctest::Approx(137.0));

    const Hedgehog shifted(TrigPoly(5.0, {{1, 3.0, -2.0}}));
    CHECK(shifted.steiner_point().x == doctest::Approx(3.0));
    CHECK(shifted.steiner_point().y == doctest::Approx(-2.0));
    CHECK(shifted.steiner_disk().radius == doctest::Approx(5.0));

    const Hedgehog degenerate(TrigPoly(0.0, {{2, 1.0, 0.0}}));
    CHECK(norm(degenerate.steiner_point()) == 0.0);
    CHECK(degenerate.steiner_disk().radius == 0.0);

    SUBCASE("agrees with the defining integral") {
        testutil::Rng rng(8);
        for (int trial = 0; trial < 10; ++trial) {
            const Hedgehog h(testutil::random_support(rng, 10));
            Point2 quad{0.0, 0.0};
            constexpr int n = 4096;
            for (int i = 0; i < n; ++i) {
                const double s = kTwoPi * i / n;
                quad += h.support().evaluate(s) * unit_dir(s);
            }
            quad = (kTwoPi / n / kPi) * quad;
            CHECK(norm(quad - h.steiner_point()) < 1e-8);
        }
    }
}

TEST_CASE("length and oriented area") {
    const Hedgehog golden(testutil::golden_support());
    CHECK(testutil::rel_err(golden.algebraic_length(), 274.0 * kPi) < 1e-14);
    CHECK(testutil::rel_err(golden.oriented_area(), 325225.0 * kPi / 18.0) < 1e-14);

    const Hedgehog circle(TrigPoly(3.0));
    CHECK(circle.algebraic_length() == doctest::Approx(6.0 * kPi));
    CHECK(circle.oriented_area() == doctest::Approx(9.0 * kPi));

    const Hedgehog pentagonal(TrigPoly(0.0, {{5, 0.0, 1.0}, {10, 0.0, 1.0 / 3.0}}));
    CHECK(testutil::rel_err(pentagonal.oriented_area(), -35.0 * kPi / 2.0) < 1e-14);

    SUBCASE("both agree with quadrature on random inputs") {
        testutil::Rng rng(9);
        for (int trial = 0; trial < 10; ++trial) {
            const Hedgehog h(testutil::random_support(rng, rng.uniform_int(1, 10)));
            const double area = oracle::green_area(oracle::sample_hedgehog(h, 1 << 16));
            CHECK(std::abs(area - h.oriented_area()) <
                  1e-8 * std::max(1.0, std::abs(h.oriented_area())));
            const double length = oracle::quadrature_integral(
                [&h](double s) { return h.support().evaluate(s); }, 4096);
            CHECK(std::abs(length - h.algebraic_length()) <
                  1e-8 * std::max(1.0, std::abs(h.algebraic_length())));
        }
    }

    SUBCASE("tiny curves meet the absolute quadrature tolerance") {
        const Hedgehog tiny(TrigPoly(0.0, {{2, 0.01, 0.0}}));
        CHECK(std::abs(tiny.oriented_area()) < 1e-3);
        const double area = oracle::green_area(oracle::sample_hedgehog(tiny, 1 << 14));
        CHECK(std::abs(area - tiny.oriented_area()) < 1e-9);
    }
}

TEST_CASE("radius of curvature") {
    const Hedgehog circle(TrigPoly(4.0));
    for (double s : {0.0, 1.0, 5.5})
        CHECK(circle.radius_of_curvature(s) == doctest::Approx(4.0));

    const Hedgehog f(TrigPoly(7.0, {{3, 1.0, 0.0}}));
    testutil::Rng rng(10);
    for (int m = 0; m < 20; ++m) {
        const double s = rng.uniform(0.0, kTwoPi);
        CHECK(f.radius_of_curvature(s) == doctest::Approx(7.0 - 8.0 * std::cos(3.0 * s)));
    }

    const Hedgehog golden(testutil::golden_support());
    CHECK(golden.radius_of_curvature(0.0) ==
          doctest::Approx(golden.support().evaluate(0.0) + golden.support().evaluate(0.0, 2)));
    CHECK(golden.radius_of_curvature(0.0) == doctest::Approx(39.0));
}

TEST_CASE("convexity classification") {
    CHECK(Hedgehog(testutil::oval20_support()).is_convex());
    CHECK(Hedgehog(testutil::golden_support()).is_convex());
    CHECK_FALSE(Hedgehog(testutil::singular10_support()).is_convex());
    CHECK(Hedgehog(testutil::singular10_support()).convexity() == Convexity::nonconvex);
    CHECK(Hedgehog(TrigPoly(1.0)).is_convex());

    // rho = 3 (1 - cos 2s) touches zero: marginal, and not convex as a boolean
    const Hedgehog touching(TrigPoly(3.0, {{2, 1.0, 0.0}}));
    CHECK(touching.convexity() == Convexity::marginal);
    CHECK_FALSE(touching.is_convex());

    // reversed orientation still has constant-sign curvature
    const Hedgehog reversed(TrigPoly(-2.0));
    CHECK(reversed.is_convex());
}

TEST_CASE("singular points") {
    SUBCASE("pure third harmonic has six cusps") {
        const Hedgehog h(TrigPoly(0.0, {{3, 1.0, 0.0}}));
        const auto points = h.singular_points();
        REQUIRE(points.size() == 6);
        for (std::size_t m = 0; m < points.size(); ++m) {
            CHECK(points[m].is_cusp);
            CHECK(std::abs(points[m].s - (kPi / 6.0 + m * kPi / 3.0)) < 1e-9);
            CHECK(std::abs(h.radius_of_curvature(points[m].s)) < 1e-9);
            CHECK(norm(points[m].location - h.point_at(points[m].s)) == 0.0);
        }
    }

    SUBCASE("regular curves have none") {
        CHECK(Hedgehog(TrigPoly(5.0)).singular_points().empty());
        CHECK(Hedgehog(testutil::oval20_support()).singular_points().empty());
    }

    SUBCASE("tangential zeros are reported without a cusp flag") {
        const Hedgehog touching(TrigPoly(3.0, {{2, 1.0, 0.0}}));
        const auto points = touching.singular_points();
        REQUIRE(points.size() == 2);
        CHECK_FALSE(points[0].is_cusp);
        CHECK_FALSE(points[1].is_cusp);
        CHECK(std::abs(points[0].s - 0.0) < 1e-6);
        CHECK(std::abs(points[1].s - kPi) < 1e-6);
    }

    SUBCASE("degenerate point curve yields an empty list") {
        CHECK(Hedgehog().singular_points().empty());
    }

    SUBCASE("root count never exceeds the trig bound") {
        testutil::Rng rng(11);
        for (int trial = 0; trial < 20; ++trial) {
            const TrigPoly f = testutil::random_support(rng, rng.uniform_int(2, 10), 0.0,
                                                        2.0, 3.0);
            const Hedgehog h(f);
            const auto points = h.singular_points();
            CHECK(points.size() <= std::size_t(2 * h.curvature_poly().degree()));
            for (const auto& p : points)
                CHECK(std::abs(h.radius_of_curvature(p.s)) < 1e-8);
        }
    }
}

TEST_CASE("support consistency and tangent direction") {
    testutil::Rng rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        const Hedgehog h(testutil::random_support(rng, 10));
        const double guard = 1e-3 * (1.0 + h.curvature_poly().amplitude_bound());
        for (int m = 0; m < 100; ++m) {
            const double s = rng.uniform(0.0, kTwoPi);
            CHECK(std::abs(dot(h.point_at(s), unit_dir(s)) - h.support().evaluate(s)) <
                  1e-10);
            if (std::abs(h.radius_of_curvature(s)) > guard) {
                constexpr double eps = 1e-6;
                const Point2 secant = h.point_at(s + eps) - h.point_at(s);
                const Point2 tangent = unit_normal_rot(s);
                const double angle =
                    std::atan2(std::abs(cross(secant, tangent)), std::abs(dot(secant, tangent)));
                CHECK(angle < 1e-4);
            }
        }
    }
}

TEST_CASE("isogonal families") {
    const Hedgehog circle(TrigPoly(2.0));
    const auto family = circle.isogonal_family(0.0, 4);
    REQUIRE(family.size() == 4);
    const Point2 expected[] = {{0.0, 2.0}, {-2.0, 0.0}, {0.0, -2.0}, {2.0, 0.0}};
    for (int j = 0; j < 4; ++j) CHECK(norm(family[j].point - expected[j]) < 1e-12);

    SUBCASE("normals spaced by 2pi/k") {
        const Hedgehog oval(testutil::oval20_support());
        const int k = 3;
        const double s = 0.4;
        const auto pairs = oval.isogonal_family(s, k);
        for (int j = 1; j <= k; ++j) {
            const double sj = s + kTwoPi * j / k;
            CHECK(std::abs(dot(pairs[j - 1].point, unit_dir(sj)) -
                           oval.support().evaluate(sj)) < 1e-10);
            CHECK(norm(pairs[j - 1].perp - perp(pairs[j - 1].point)) < 1e-12);
        }
    }

    SUBCASE("advancing the base angle relabels the family cyclically") {
        const Hedgehog oval(testutil::oval30_support());
        const int k = 5;
        const double s = 1.1;
        const auto a = oval.isogonal_family(s, k);
        const auto b = oval.isogonal_family(s + kTwoPi / k, k);
        for (int j = 0; j < k; ++j)
            CHECK(norm(b[j].point - a[(j + 1) % k].point) < 1e-9);
    }

    CHECK_THROWS_AS(circle.isogonal_family(0.0, 2), std::invalid_argument);
}
