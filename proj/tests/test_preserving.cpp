#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hedgehog/errors.hpp"
#include "hedgehog/oracle.hpp"
#include "hedgehog/preserving.hpp"
#include "helpers.hpp"

using namespace hedgehog;

TEST_CASE("construction filters the support") {
    const PreservingSet p5(Hedgehog(testutil::golden_support()), 5);
    const TrigPoly& h5 = p5.as_hedgehog().support();
    CHECK(h5.constant() == 0.0);
    CHECK(h5.harmonics().size() == 2);
    CHECK(h5.coefficient(5).second == 1.0);
    CHECK(h5.coefficient(10).second == doctest::Approx(1.0 / 3.0));

    const PreservingSet p3(Hedgehog(testutil::oval30_support()), 3);
    CHECK(p3.as_hedgehog().support() == TrigPoly(0.0, {{3, 1.0, 0.0}}));

    const PreservingSet empty(Hedgehog(TrigPoly(4.0, {{2, 1.0, 0.0}})), 5);
    CHECK(empty.as_hedgehog().support().is_zero());
    for (double s : {0.0, 1.0, 4.0}) CHECK(norm(empty.point_at(s)) == 0.0);

    CHECK_THROWS_AS(PreservingSet(Hedgehog(TrigPoly(1.0)), 2), std::invalid_argument);

    SUBCASE("only k-divisible indices above 1 ever survive") {
        testutil::Rng rng(21);
        for (int trial = 0; trial < 20; ++trial) {
            const TrigPoly f = testutil::random_support(rng, 12);
            const int k = rng.uniform_int(3, 8);
            const PreservingSet set(Hedgehog(f), k);
            for (const Harmonic& t : set.as_hedgehog().support().harmonics()) {
                CHECK(t.n % k == 0);
                CHECK(t.n > 1);
            }
        }
    }
}

TEST_CASE("pointwise geometry") {
    const PreservingSet p3(Hedgehog(testutil::oval30_support()), 3);
    const Point2 p = p3.point_at(0.0);
    CHECK(p.x == doctest::Approx(1.0));
    CHECK(p.y == doctest::Approx(0.0).scale(1.0));

    SUBCASE("advancing by the period rotates the point about the origin") {
        testutil::Rng rng(22);
        const PreservingSet p5(Hedgehog(testutil::golden_support()), 5);
        for (int m = 0; m < 50; ++m) {
            const double s = rng.uniform(0.0, kTwoPi);
            const Point2 ahead = p5.point_at(s + kTwoPi / 5.0);
            const Point2 turned = rotate(p5.point_at(s), kTwoPi / 5.0);
            CHECK(norm(ahead - turned) < 1e-10);
        }
    }
}

TEST_CASE("isogonal-family route") {
    SUBCASE("circles collapse to the origin") {
        const Hedgehog circle(TrigPoly(3.0));
        for (int k : {3, 4, 7})
            for (double s : {0.0, 0.9, 2.2})
                CHECK(norm(preserving_from_isogonal(circle, k, s)) < 1e-12);
    }

    SUBCASE("matches the Fourier filter route at the matching parameter") {
        const Hedgehog golden(testutil::golden_support());
        const PreservingSet p5(golden, 5);
        CHECK(norm(preserving_from_isogonal(golden, 5, 0.0) -
                   p5.point_at(kTwoPi / 5.0)) < 1e-9);

        testutil::Rng rng(23);
        for (int trial = 0; trial < 200; ++trial) {
            const TrigPoly f = testutil::random_support(rng, rng.uniform_int(1, 12));
            const int k = rng.uniform_int(3, 8);
            const double s = rng.uniform(0.0, kTwoPi);
            const Hedgehog h(f);
            const PreservingSet set(h, k);
            const double tol = 1e-8 * (1.0 + f.amplitude_bound());
            CHECK(norm(preserving_from_isogonal(h, k, s) - set.point_at(s + kTwoPi / k)) <
                  tol);
        }
    }

    SUBCASE("single k-th harmonic cross-check at many angles") {
        const Hedgehog h(TrigPoly(7.0, {{4, 1.0, 0.0}}));
        const PreservingSet set(h, 4);
        testutil::Rng rng(24);
        for (int m = 0; m < 100; ++m) {
            const double s = rng.uniform(0.0, kTwoPi);
            CHECK(norm(preserving_from_isogonal(h, 4, s) - set.point_at(s + kTwoPi / 4)) <
                  1e-10);
        }
    }

    CHECK_THROWS_AS(preserving_from_isogonal(Hedgehog(TrigPoly(1.0)), 2, 0.0),
                    std::invalid_argument);
}

TEST_CASE("oriented area") {
    CHECK(testutil::rel_err(PreservingSet(Hedgehog(testutil::golden_support()), 5).oriented_area(),
                            -35.0 * kPi / 2.0) < 1e-14);
    CHECK(testutil::rel_err(PreservingSet(Hedgehog(testutil::oval30_support()), 3).oriented_area(),
                            -4.0 * kPi) < 1e-14);
    CHECK(PreservingSet(Hedgehog(TrigPoly(9.0, {{2, 1.0, 0.0}})), 5).oriented_area() == 0.0);

    SUBCASE("never positive, zero only when degenerate") {
        testutil::Rng rng(25);
        for (int trial = 0; trial < 50; ++trial) {
            const PreservingSet set(Hedgehog(testutil::random_support(rng, 12)),
                                    rng.uniform_int(3, 8));
            CHECK(set.oriented_area() <= 0.0);
            CHECK((set.oriented_area() == 0.0) == set.as_hedgehog().support().is_zero());
        }
    }

    SUBCASE("agrees with the Green quadrature of the parameterization") {
        const PreservingSet set(Hedgehog(testutil::golden_support()), 5);
        const Hedgehog& hk = set.as_hedgehog();
        const double quad = oracle::quadrature_integral(
            [&hk](double s) {
                return 0.5 * cross(hk.point_at(s),
                                   hk.radius_of_curvature(s) * unit_normal_rot(s));
            },
            512);
        CHECK(testutil::rel_err(quad, set.oriented_area()) < 1e-12);
    }
}

TEST_CASE("curvature radius") {
    SUBCASE("circle collapses to zero") {
        const PreservingSet set(Hedgehog(TrigPoly(4.0)), 6);
        for (double s : {0.0, 1.3, 5.0}) {
            CHECK(std::abs(set.curvature_radius(s)) < 1e-12);
            CHECK(std::abs(set.curvature_radius_isogonal(s)) < 1e-12);
        }
    }

    SUBCASE("third-harmonic example") {
        const PreservingSet set(Hedgehog(testutil::oval30_support()), 3);
        CHECK(set.curvature_radius(0.0) == doctest::Approx(-8.0));
    }

    SUBCASE("both routes agree on random inputs") {
        testutil::Rng rng(26);
        for (int trial = 0; trial < 50; ++trial) {
            const TrigPoly f = testutil::random_support(rng, 12);
            const PreservingSet set(Hedgehog(f), rng.uniform_int(3, 8));
            const double tol = 1e-9 * (1.0 + Hedgehog(f).curvature_poly().amplitude_bound());
            for (int m = 0; m < 10; ++m) {
                const double s = rng.uniform(0.0, kTwoPi);
                CHECK(std::abs(set.curvature_radius(s) - set.curvature_radius_isogonal(s)) <
                      tol);
            }
        }
    }

    SUBCASE("zero curvature radius happens exactly at mean parent curvature = half width") {
        const Hedgehog parent(testutil::oval30_support());
        const PreservingSet set(parent, 3);
        const auto points = set.singularities();
        REQUIRE_FALSE(points.empty());
        for (const auto& p : points) {
            double mean = 0.0;
            for (int j = 1; j <= 3; ++j)
                mean += parent.radius_of_curvature(p.s + kTwoPi * j / 3.0);
            mean /= 3.0;
            CHECK(std::abs(mean - 0.5 * parent.average_width()) < 1e-8);
        }
    }
}

TEST_CASE("singularities") {
    const Hedgehog oval30(testutil::oval30_support());

    SUBCASE("six cusps at k = 3") {
        const auto points = PreservingSet(oval30, 3).singularities(true);
        REQUIRE(points.size() == 6);
        for (const auto& p : points) CHECK(p.is_cusp);
    }

    SUBCASE("eight cusps at k = 4") {
        const auto points = PreservingSet(oval30, 4).singularities(true);
        REQUIRE(points.size() == 8);
        for (const auto& p : points) CHECK(p.is_cusp);
    }

    SUBCASE("count divisible by k for the singular example") {
        const auto points =
            PreservingSet(Hedgehog(testutil::singular10_support()), 3).singularities(true);
        CHECK_FALSE(points.empty());
        CHECK(points.size() % 3 == 0);
        CHECK(points.size() <= 12);  // rho_k has degree 6
    }

    SUBCASE("nondegenerate preserving sets are always singular") {
        testutil::Rng rng(27);
        for (int trial = 0; trial < 20; ++trial) {
            const PreservingSet set(Hedgehog(testutil::random_support(rng, 12)),
                                    rng.uniform_int(3, 6));
            if (set.as_hedgehog().support().is_zero()) continue;
            CHECK_FALSE(set.singularities().empty());
        }
    }

    SUBCASE("degeneration beyond the degree") {
        const PreservingSet set(oval30, 5);
        CHECK(set.as_hedgehog().support().is_zero());
        CHECK(set.singularities().empty());
        CHECK(set.oriented_area() == 0.0);
    }
}

TEST_CASE("k-central symmetral and Minkowski sums") {
    const Hedgehog golden(testutil::golden_support());
    const Hedgehog symmetral = k_central_symmetral(golden, 5);
    CHECK(symmetral.support().constant() == 137.0);
    CHECK(symmetral.support().coefficient(5).second == 1.0);
    CHECK(symmetral.support().coefficient(10).second == doctest::Approx(1.0 / 3.0));
    CHECK(symmetral.support().harmonics().size() == 2);

    const Hedgehog circle(TrigPoly(2.0));
    CHECK(k_central_symmetral(circle, 7).support() == circle.support());

    SUBCASE("symmetral support = preserving support + constant") {
        testutil::Rng rng(28);
        for (int trial = 0; trial < 20; ++trial) {
            const TrigPoly f = testutil::random_support(rng, 12);
            const int k = rng.uniform_int(3, 8);
            const TrigPoly lhs = k_central_symmetral(Hedgehog(f), k).support();
            const TrigPoly rhs =
                PreservingSet(Hedgehog(f), k).as_hedgehog().support() + TrigPoly(f.constant());
            CHECK(lhs == rhs);
        }
    }

    SUBCASE("sum of two disks") {
        const Hedgehog at_origin(TrigPoly(1.0));
        const Hedgehog shifted(TrigPoly(2.0, {{1, 1.0, 0.0}}));
        const TrigPoly sum = minkowski_sum(at_origin, shifted).support();
        CHECK(sum.constant() == 3.0);
        CHECK(sum.coefficient(1).first == 1.0);
    }

    SUBCASE("zero hedgehog is the identity") {
        CHECK(minkowski_sum(golden, Hedgehog()).support() == golden.support());
    }

    SUBCASE("preserving set plus Steiner disk equals the symmetral when the Steiner point is the origin") {
        // the identity needs a1 = b1 = 0: the average kills first harmonics
        // while the disk keeps them
        const PreservingSet p5(golden, 5);
        const Hedgehog sum = minkowski_sum(p5.as_hedgehog(), as_hedgehog(golden.steiner_disk()));
        CHECK(sum.support() == k_central_symmetral(golden, 5).support());
    }

    CHECK_THROWS_AS(k_central_symmetral(golden, 2), std::invalid_argument);
}

TEST_CASE("parallel support lines") {
    testutil::Rng rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        const Hedgehog parent(testutil::random_convex_support(rng, 8));
        const int k = rng.uniform_int(3, 6);
        const PreservingSet set(parent, k);
        if (set.as_hedgehog().support().is_zero()) continue;
        const double guard_parent = 1e-3 * (1.0 + parent.curvature_poly().amplitude_bound());
        const double guard_set =
            1e-3 * (1.0 + set.as_hedgehog().curvature_poly().amplitude_bound());
        for (int m = 0; m < 40; ++m) {
            const double s = rng.uniform(0.0, kTwoPi);
            if (std::abs(parent.radius_of_curvature(s)) <= guard_parent) continue;
            if (std::abs(set.curvature_radius(s)) <= guard_set) continue;
            constexpr double eps = 1e-5;
            const Point2 tp = parent.point_at(s + eps) - parent.point_at(s - eps);
            const Point2 ts = set.point_at(s + eps) - set.point_at(s - eps);
            const double angle = std::atan2(std::abs(cross(tp, ts)), std::abs(dot(tp, ts)));
            CHECK(angle < 1e-6);
        }
    }
}
