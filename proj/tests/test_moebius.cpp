#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "moebsym/errors.hpp"
#include "moebsym/moebius.hpp"
#include "moebsym/plane.hpp"

#include <cmath>
#include <random>

using namespace moebsym;

namespace {

double u01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

cplx rand_box(std::mt19937_64& g, double half) {
    const double re = half * (2.0 * u01(g) - 1.0);
    const double im = half * (2.0 * u01(g) - 1.0);
    return {re, im};
}

cplx rand_disk(std::mt19937_64& g, double rmax) {
    for (;;) {
        const cplx z = rand_box(g, rmax);
        if (std::abs(z) < rmax) return z;
    }
}

MoebiusMap rand_map(std::mt19937_64& g, bool allow_reversing = true) {
    for (;;) {
        try {
            return moebius(rand_box(g, 1.5), rand_box(g, 1.5), rand_box(g, 1.5),
                           rand_box(g, 1.5), allow_reversing && u01(g) < 0.5);
        } catch (const domain_error&) {
            // determinant too small; redraw
        }
    }
}

double ext_dist(const ExtendedPoint& x, const ExtendedPoint& y) {
    // Chordal distance works for all extended points, infinity included.
    return chordal_distance(x, y);
}

} // namespace

TEST_CASE("identity and pole behavior of apply") {
    const MoebiusMap id = moebius_identity();
    std::mt19937_64 g(2001);
    for (int i = 0; i < 10; ++i) {
        const ExtendedPoint z(rand_box(g, 3.0));
        CHECK(ext_dist(apply(id, z), z) < 1e-15);
    }
    CHECK(apply(id, ExtendedPoint::infinity()).inf);

    const MoebiusMap recip = moebius(cplx(0.0), cplx(1.0), cplx(1.0), cplx(0.0));
    CHECK(apply(recip, ExtendedPoint(0.0, 0.0)).inf);
    const ExtendedPoint at_inf = apply(recip, ExtendedPoint::infinity());
    REQUIRE(at_inf.finite());
    CHECK(std::abs(at_inf.value) < 1e-15);

    // An affine map has no finite pole and fixes infinity.
    const MoebiusMap affine = moebius(cplx(2.0, 1.0), cplx(0.5), cplx(0.0), cplx(1.0));
    CHECK(apply(affine, ExtendedPoint::infinity()).inf);

    // The pole -d/c goes to infinity.
    const MoebiusMap m = moebius(cplx(1.0, 2.0), cplx(0.3), cplx(0.7, -0.4), cplx(1.1));
    CHECK(apply(m, ExtendedPoint(-m.d / m.c)).inf);
}

TEST_CASE("inverse round trips points") {
    std::mt19937_64 g(2002);
    for (int i = 0; i < 1000; ++i) {
        const MoebiusMap m = rand_map(g);
        const MoebiusMap mi = inverse(m);
        const ExtendedPoint z(rand_box(g, 2.0));
        CHECK(ext_dist(apply(mi, apply(m, z)), z) < 1e-10);
        CHECK(ext_dist(apply(m, apply(mi, z)), z) < 1e-10);
    }
}

TEST_CASE("inverse composes to the identity map") {
    std::mt19937_64 g(2003);
    for (int i = 0; i < 200; ++i) {
        const MoebiusMap m = rand_map(g);
        CHECK(approx_equal(compose(inverse(m), m), moebius_identity()));
        CHECK(approx_equal(compose(m, inverse(m)), moebius_identity()));
    }
}

TEST_CASE("composition acts pointwise and xors orientation") {
    std::mt19937_64 g(2004);
    const MoebiusMap id = moebius_identity();
    for (int i = 0; i < 250; ++i) {
        const MoebiusMap m1 = rand_map(g), m2 = rand_map(g);
        CHECK(approx_equal(compose(m1, id), m1));
        CHECK(approx_equal(compose(id, m1), m1));

        const MoebiusMap m12 = compose(m1, m2);
        CHECK(m12.reversing == (m1.reversing != m2.reversing));
        for (int j = 0; j < 20; ++j) {
            const ExtendedPoint z(rand_box(g, 2.0));
            CHECK(ext_dist(apply(m12, z), apply(m1, apply(m2, z))) < 1e-10);
        }
    }
}

TEST_CASE("coefficient scale does not change the map") {
    const MoebiusMap m = moebius(cplx(1.0, 2.0), cplx(0.3), cplx(0.7, -0.4), cplx(1.1));
    const cplx lambda(-2.5, 1.75);
    const MoebiusMap scaled =
        moebius(lambda * cplx(1.0, 2.0), lambda * cplx(0.3),
                lambda * cplx(0.7, -0.4), lambda * cplx(1.1));
    CHECK(approx_equal(m, scaled));
    CHECK_FALSE(approx_equal(m, moebius_identity()));

    // Vanishing determinant is rejected outright.
    CHECK_THROWS_AS(moebius(cplx(1.0), cplx(2.0), cplx(2.0), cplx(4.0)), domain_error);
    CHECK_THROWS_AS(moebius(cplx(0.0), cplx(0.0), cplx(0.0), cplx(0.0)), domain_error);
}

TEST_CASE("disk automorphism fixed points") {
    const cplx a(0.3, 0.4);
    const MoebiusMap t = disk_automorphism(a);
    CHECK(std::abs(apply(t, ExtendedPoint(a)).value) < 1e-15);
    const cplx u = a / std::abs(a);
    CHECK(std::abs(apply(t, ExtendedPoint(u)).value - u) < 1e-14);
    CHECK(std::abs(apply(t, ExtendedPoint(-u)).value + u) < 1e-14);

    CHECK(approx_equal(disk_automorphism(cplx(0.0)), moebius_identity()));
    CHECK_THROWS_AS(disk_automorphism(cplx(1.0)), domain_error);
    CHECK_THROWS_AS(disk_automorphism(cplx(0.8, 0.8)), domain_error);
}

TEST_CASE("disk automorphism preserves hyperbolic distance") {
    std::mt19937_64 g(2005);
    for (int i = 0; i < 1000; ++i) {
        const cplx a = rand_disk(g, 0.95);
        const cplx x = rand_disk(g, 0.95), y = rand_disk(g, 0.95);
        const MoebiusMap t = disk_automorphism(a);
        const double before = hyperbolic_distance(x, y);
        const double after = hyperbolic_distance(apply(t, ExtendedPoint(x)).value,
                                                 apply(t, ExtendedPoint(y)).value);
        CHECK(std::abs(after - before) < 1e-10 * std::max(1.0, before));
    }
}

TEST_CASE("circle inversion and line reflection factor the disk automorphism") {
    const cplx a(0.0, -0.7);
    const AhlforsFactors f = ahlfors_factorization(a);
    const MoebiusMap sigma = inversion_map(f.invert_circle);
    const MoebiusMap rho = line_reflection_map(f.reflect_line);

    CHECK(std::abs(apply(sigma, ExtendedPoint(a)).value) < 1e-14);
    const cplx a_star = a / std::norm(a);
    CHECK(apply(sigma, ExtendedPoint(a_star)).inf);

    // The reflection is a Euclidean isometry.
    std::mt19937_64 g(2006);
    for (int i = 0; i < 200; ++i) {
        const cplx x = rand_box(g, 3.0), y = rand_box(g, 3.0);
        const cplx fx = apply(rho, ExtendedPoint(x)).value;
        const cplx fy = apply(rho, ExtendedPoint(y)).value;
        CHECK(std::abs(std::abs(fx - fy) - std::abs(x - y)) < 1e-12);
    }

    // reflection o inversion equals T_a, pointwise on a disk grid and as a map.
    const MoebiusMap t = disk_automorphism(a);
    for (int j = 0; j < 20; ++j) {
        for (int k = 0; k < 20; ++k) {
            const cplx z(-0.95 + 0.1 * j, -0.95 + 0.1 * k);
            if (std::abs(z) >= 1.0) continue;
            const ExtendedPoint lhs = apply(rho, apply(sigma, ExtendedPoint(z)));
            CHECK(ext_dist(lhs, apply(t, ExtendedPoint(z))) < 1e-10);
        }
    }
    CHECK(approx_equal(compose(rho, sigma), t));
    CHECK_FALSE(compose(rho, sigma).reversing);

    CHECK_THROWS_AS(ahlfors_factorization(cplx(0.0)), domain_error);
    CHECK_THROWS_AS(ahlfors_factorization(cplx(0.0, 1.0)), domain_error);
}

TEST_CASE("disk pair map reference pole") {
    const cplx a(0.0, -0.7), b(0.5, 0.0);
    const cplx c = disk_pair_pole(a, b);
    CHECK(std::abs(c - cplx(-1.0625, -2.1875)) < 1e-12);

    CHECK_THROWS_AS(disk_pair_pole(cplx(0.0), cplx(0.5)), domain_error);
    CHECK_THROWS_AS(disk_pair_pole(cplx(0.5), cplx(0.0)), domain_error);
    CHECK_THROWS_AS(disk_pair_pole(cplx(0.5), cplx(0.0, 0.5)), domain_error);
    CHECK_THROWS_AS(disk_map_pair(cplx(0.3), cplx(0.0, 0.3)), domain_error);
}

TEST_CASE("disk pair map sends a to b and keeps the boundary") {
    std::mt19937_64 g(2007);
    for (int i = 0; i < 300; ++i) {
        const cplx a = rand_disk(g, 0.9), b = rand_disk(g, 0.9);
        if (std::abs(a) < 0.1 || std::abs(b) < 0.1) continue;
        if (std::abs(std::abs(a) - std::abs(b)) < 0.02) continue;
        const MoebiusMap t = disk_map_pair(a, b);
        CHECK(std::abs(apply(t, ExtendedPoint(a)).value - b) < 1e-10);

        const cplx x = rand_disk(g, 0.95), y = rand_disk(g, 0.95);
        const double d0 = hyperbolic_distance(x, y);
        const double d1 = hyperbolic_distance(apply(t, ExtendedPoint(x)).value,
                                              apply(t, ExtendedPoint(y)).value);
        CHECK(std::abs(d1 - d0) < 1e-10 * std::max(1.0, d0));
    }

    const MoebiusMap t = disk_map_pair(cplx(0.0, -0.7), cplx(0.5));
    for (int j = 0; j < 50; ++j) {
        const cplx z = std::polar(1.0, 2.0 * M_PI * j / 50.0);
        CHECK(std::abs(std::abs(apply(t, ExtendedPoint(z)).value) - 1.0) < 1e-10);
    }
}

TEST_CASE("sphere rotation moving a point to the origin") {
    const cplx a(2.0, 3.0);
    const MoebiusMap t = chordal_isometry(a);
    CHECK(std::abs(apply(t, ExtendedPoint(a)).value) < 1e-14);
    CHECK(approx_equal(chordal_isometry(cplx(0.0)), moebius_identity()));

    std::mt19937_64 g(2008);
    for (int i = 0; i < 100; ++i) {
        const cplx aa = rand_box(g, 3.0);
        const MoebiusMap ta = chordal_isometry(aa);
        const MoebiusMap tn = chordal_isometry(-aa);
        // Symmetry t_a(z) = -t_{-a}(-z).
        const cplx z = rand_box(g, 3.0);
        const cplx lhs = apply(ta, ExtendedPoint(z)).value;
        const cplx rhs = -apply(tn, ExtendedPoint(-z)).value;
        CHECK(std::abs(lhs - rhs) < 1e-12);

        // Chordal distances survive, infinity included.
        const ExtendedPoint x(rand_box(g, 5.0));
        const ExtendedPoint y =
            u01(g) < 0.2 ? ExtendedPoint::infinity() : ExtendedPoint(rand_box(g, 5.0));
        const double before = chordal_distance(x, y);
        const double after = chordal_distance(apply(ta, x), apply(ta, y));
        CHECK(std::abs(after - before) < 1e-12);
    }
}

TEST_CASE("chordal midpoint isometry closed forms") {
    // Opposite real points have midpoint 0, so the isometry is the identity.
    CHECK(approx_equal(chordal_midpoint_map(cplx(0.8), cplx(-0.8)),
                       moebius_identity()));

    std::mt19937_64 g(2009);
    for (int i = 0; i < 300; ++i) {
        const cplx a = rand_box(g, 2.0), b = rand_box(g, 2.0);
        if (std::abs(a - b) < 0.05) continue;
        if (std::abs(cplx(1.0) + a * std::conj(b)) < 0.05) continue;
        const MoebiusMap tm = chordal_midpoint_map(a, b);

        // The images of a and b end up chordally equidistant from 0.
        const double qa = chordal_distance(apply(tm, ExtendedPoint(a)),
                                           ExtendedPoint(0.0, 0.0));
        const double qb = chordal_distance(apply(tm, ExtendedPoint(b)),
                                           ExtendedPoint(0.0, 0.0));
        CHECK(std::abs(qa - qb) < 1e-12);

        // Closed forms of the two image points.
        const cplx ab = a * std::conj(b);
        const double w = std::abs(cplx(1.0) + ab);
        const double sa = std::sqrt(1.0 + std::norm(a));
        const double sb = std::sqrt(1.0 + std::norm(b));
        const cplx img_a =
            (a * w * sb - b * (cplx(1.0) + ab) * sa) /
            (w * sb + (cplx(1.0) + ab) * sa);
        const cplx ba = std::conj(a) * b;
        const cplx img_b =
            (b * w * sa - a * (cplx(1.0) + ba) * sb) /
            (w * sa + (cplx(1.0) + ba) * sb);
        CHECK(std::abs(apply(tm, ExtendedPoint(a)).value - img_a) < 1e-10);
        CHECK(std::abs(apply(tm, ExtendedPoint(b)).value - img_b) < 1e-10);
    }

    // Antipodal points on the sphere have no unique midpoint.
    const cplx a(0.4, 0.3);
    const cplx b = -cplx(1.0) / std::conj(a);
    CHECK_THROWS_AS(chordal_midpoint_map(a, b), degeneracy_error);
}
