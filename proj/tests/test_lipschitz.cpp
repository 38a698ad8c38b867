#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "moebsym/errors.hpp"
#include "moebsym/lipschitz.hpp"
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

double rel_gap(double x, double y) { return std::abs(x - y) / y; }

} // namespace

TEST_CASE("analytic constants of the special maps") {
    CHECK(lip_disk_automorphism(cplx(0.0)) == doctest::Approx(1.0));
    CHECK(lip_disk_automorphism(cplx(0.5)) == doctest::Approx(3.0));
    CHECK(lip_disk_automorphism(cplx(0.0, -0.5)) == doctest::Approx(3.0));
    CHECK_THROWS_AS(lip_disk_automorphism(cplx(1.0)), domain_error);

    // (|c|+1)/(|c|-1) with c the pole of the pair map.
    const cplx a(0.0, -0.7), b(0.5, 0.0);
    const double lip = lip_disk_map_pair(a, b);
    CHECK(lip == doctest::Approx(2.3967606465294105).epsilon(1e-12));
    const double nc = std::abs(disk_pair_pole(a, b));
    CHECK(lip == doctest::Approx((nc + 1.0) / (nc - 1.0)).epsilon(1e-12));
    CHECK_THROWS_AS(lip_disk_map_pair(cplx(0.0), b), domain_error);
}

TEST_CASE("derivative sup reproduces the closed forms") {
    const LipschitzEstimate id_e = estimate_lipschitz(
        moebius_identity(), Metric::euclidean, LipMethod::derivative_sup, 512, 7);
    CHECK(id_e.value == doctest::Approx(1.0).epsilon(1e-12));
    const LipschitzEstimate id_q = estimate_lipschitz(
        moebius_identity(), Metric::chordal, LipMethod::derivative_sup, 512, 7);
    CHECK(id_q.value == doctest::Approx(1.0).epsilon(1e-9));

    const MoebiusMap t = disk_automorphism(cplx(0.5));
    const LipschitzEstimate e = estimate_lipschitz(
        t, Metric::euclidean, LipMethod::derivative_sup, 4096, 7);
    CHECK(rel_gap(e.value, 3.0) < 0.005);
    const LipschitzEstimate q = estimate_lipschitz(
        t, Metric::chordal, LipMethod::derivative_sup, 16384, 7);
    CHECK(rel_gap(q.value, 3.0) < 0.005);

    // Radial grid of disk automorphisms against (1+|a|)/(1-|a|).
    for (int i = 1; i <= 9; ++i) {
        const cplx a = std::polar(0.1 * i, 0.7 * i);
        const LipschitzEstimate est = estimate_lipschitz(
            disk_automorphism(a), Metric::euclidean, LipMethod::derivative_sup,
            4096, 7);
        CHECK(rel_gap(est.value, lip_disk_automorphism(a)) < 0.005);
    }
}

TEST_CASE("derivative sup matches the pair map constant") {
    std::mt19937_64 g(5001);
    int used = 0;
    while (used < 25) {
        const cplx a = rand_disk(g, 0.9), b = rand_disk(g, 0.9);
        if (std::abs(a) < 0.1 || std::abs(b) < 0.1) continue;
        if (std::abs(std::abs(a) - std::abs(b)) < 0.05) continue;
        ++used;
        const LipschitzEstimate est = estimate_lipschitz(
            disk_map_pair(a, b), Metric::euclidean, LipMethod::derivative_sup,
            4096, 7);
        CHECK(rel_gap(est.value, lip_disk_map_pair(a, b)) < 0.005);
    }
}

TEST_CASE("spherical derivative of sphere rotations is one") {
    std::mt19937_64 g(5002);
    for (int i = 0; i < 200; ++i) {
        const MoebiusMap t = chordal_isometry(rand_box(g, 3.0));
        CHECK(std::abs(spherical_derivative(t, ExtendedPoint(rand_box(g, 5.0))) -
                       1.0) < 1e-12);
        CHECK(std::abs(spherical_derivative(t, ExtendedPoint::infinity()) - 1.0) <
              1e-12);
    }

    // A reversing map is measured at the conjugated point.
    const MoebiusMap m = moebius(cplx(1.0, 0.5), cplx(0.2), cplx(0.1), cplx(1.0));
    MoebiusMap mr = m;
    mr.reversing = true;
    const cplx z(0.3, 0.8);
    CHECK(spherical_derivative(mr, ExtendedPoint(z)) ==
          doctest::Approx(spherical_derivative(m, ExtendedPoint(std::conj(z))))
              .epsilon(1e-14));
}

TEST_CASE("pair sampling lower-bounds the derivative sup") {
    std::mt19937_64 g(5003);
    for (int i = 0; i < 10; ++i) {
        // Maps with the pole outside the closed disk, so both estimators work
        // in both metrics.
        const cplx a = rand_disk(g, 0.8);
        const MoebiusMap t = disk_automorphism(a);
        for (const Metric metric : {Metric::euclidean, Metric::chordal}) {
            const LipschitzEstimate sup = estimate_lipschitz(
                t, metric, LipMethod::derivative_sup, 4096, 11);
            const LipschitzEstimate pairs = estimate_lipschitz(
                t, metric, LipMethod::pair_sampling, 4096, 11);
            CHECK(pairs.value <= sup.value + 1e-6);
            CHECK(pairs.value >= 1.0 - 1e-9);
            CHECK(pairs.samples > 0);
        }
    }
}

TEST_CASE("estimates are deterministic") {
    const MoebiusMap t = disk_map_pair(cplx(0.0, -0.7), cplx(0.5));
    for (const Metric metric : {Metric::euclidean, Metric::chordal}) {
        for (const LipMethod method :
             {LipMethod::derivative_sup, LipMethod::pair_sampling}) {
            const LipschitzEstimate e1 =
                estimate_lipschitz(t, metric, method, 2048, 42);
            const LipschitzEstimate e2 =
                estimate_lipschitz(t, metric, method, 2048, 42);
            CHECK(e1.value == e2.value);  // bit-identical
            CHECK(e1.witness.inf == e2.witness.inf);
            CHECK(e1.witness.value == e2.witness.value);
            CHECK(e1.samples == e2.samples);
        }
    }
}

TEST_CASE("euclidean estimate grows with the parameter radius") {
    double prev = 1.0;
    for (int i = 1; i <= 9; ++i) {
        const LipschitzEstimate e = estimate_lipschitz(
            disk_automorphism(cplx(0.1 * i)), Metric::euclidean,
            LipMethod::derivative_sup, 2048, 3);
        CHECK(e.value >= prev - 1e-9);
        prev = e.value;
    }
}

TEST_CASE("reversing flag does not change the distortion") {
    const cplx a(0.3, -0.4);
    MoebiusMap t = disk_automorphism(a);
    MoebiusMap tr = t;
    tr.reversing = true;
    const LipschitzEstimate e1 = estimate_lipschitz(
        t, Metric::euclidean, LipMethod::derivative_sup, 2048, 5);
    const LipschitzEstimate e2 = estimate_lipschitz(
        tr, Metric::euclidean, LipMethod::derivative_sup, 2048, 5);
    CHECK(e1.value == e2.value);

    // Pair sampling also survives the flag: it applies the map as given.
    const LipschitzEstimate p2 = estimate_lipschitz(
        tr, Metric::chordal, LipMethod::pair_sampling, 2048, 5);
    CHECK(p2.value <= lip_disk_automorphism(a) + 1e-6);
}

TEST_CASE("maps with a pole in the disk have no euclidean constant") {
    const MoebiusMap recip = moebius(cplx(0.0), cplx(1.0), cplx(1.0), cplx(0.0));
    CHECK_THROWS_AS(estimate_lipschitz(recip, Metric::euclidean,
                                       LipMethod::derivative_sup, 256, 1),
                    domain_error);
    CHECK_THROWS_AS(estimate_lipschitz(recip, Metric::euclidean,
                                       LipMethod::pair_sampling, 256, 1),
                    domain_error);
    // On the sphere the same map is a rotation: constant 1.
    const LipschitzEstimate q = estimate_lipschitz(
        recip, Metric::chordal, LipMethod::derivative_sup, 1024, 1);
    CHECK(q.value == doctest::Approx(1.0).epsilon(1e-9));

    CHECK_THROWS_AS(estimate_lipschitz(recip, Metric::chordal,
                                       LipMethod::derivative_sup, 0, 1),
                    domain_error);
}

TEST_CASE("conjecture sweep rows and gaps") {
    const ConjectureSweep sweep = conjecture_sweep(
        conjecture_default_grid(0.2, 0.9), 2048, 9);
    REQUIRE(!sweep.rows.empty());
    double max_seen = 0.0;
    bool zero_row = false;
    for (const ConjectureRow& row : sweep.rows) {
        CHECK(std::abs(row.analytic -
                       (1.0 + std::abs(row.a)) / (1.0 - std::abs(row.a))) <
              1e-12 * row.analytic);
        CHECK(row.gap == rel_gap(row.empirical, row.analytic));
        max_seen = std::max(max_seen, row.gap);
        if (row.a == cplx(0.0)) {
            zero_row = true;
            CHECK(row.analytic == doctest::Approx(1.0));
            CHECK(std::abs(row.empirical - 1.0) < 1e-9);
            CHECK(row.gap < 1e-9);
        }
    }
    CHECK(zero_row);
    CHECK(sweep.max_gap == doctest::Approx(max_seen).epsilon(1e-15));
    CHECK(sweep.max_gap < 0.005);
}

TEST_CASE("conjecture gap is a function of the radius only") {
    // T_a conjugated by a rotation has the same distortion, so the gap on a
    // circle of parameters must be constant up to sampling noise.
    std::vector<cplx> circle;
    for (int i = 0; i < 4; ++i)
        circle.push_back(std::polar(0.5, 0.3 + 1.4 * i));
    const ConjectureSweep sweep = conjecture_sweep(circle, 4096, 13);
    REQUIRE(sweep.rows.size() == 4);
    double lo = 1.0, hi = 0.0;
    for (const ConjectureRow& row : sweep.rows) {
        lo = std::min(lo, row.gap);
        hi = std::max(hi, row.gap);
    }
    CHECK(hi - lo < 1e-9);
}

TEST_CASE("default grid covers the disk") {
    const std::vector<cplx> grid = conjecture_default_grid();
    CHECK(grid.size() > 1000);
    for (const cplx& a : grid) CHECK(std::abs(a) <= 0.95 + 1e-9);
    // The grid is symmetric, so it contains the origin exactly once.
    int zeros = 0;
    for (const cplx& a : grid) zeros += (a == cplx(0.0)) ? 1 : 0;
    CHECK(zeros == 1);
}
