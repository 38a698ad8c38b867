#include "moebsym/lipschitz.hpp"
#include "moebsym/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace moebsym {

namespace {

constexpr double two_pi = 2.0 * 3.141592653589793238462643383279502884;

// Lexicographic order on witnesses (finite before infinite) — the
// deterministic tie-break for equal-value samples, so any evaluation
// schedule produces the same estimate.
bool witness_less(const ExtendedPoint& p, const ExtendedPoint& q) {
    if (p.inf != q.inf) return !p.inf;
    if (p.inf) return false;
    if (p.value.real() != q.value.real()) return p.value.real() < q.value.real();
    return p.value.imag() < q.value.imag();
}

struct Best {
    double value = -1.0;
    ExtendedPoint witness;
    ExtendedPoint witness_pair;

    void offer(double v, const ExtendedPoint& w,
               const ExtendedPoint& w2 = ExtendedPoint()) {
        if (v > value ||
            (v == value && (witness_less(w, witness) ||
                            (!witness_less(witness, w) && witness_less(w2, witness_pair))))) {
            value = v;
            witness = w;
            witness_pair = w2;
        }
    }
};

void require_pole_outside_disk(const MoebiusMap& m) {
    // Pole at -d/c; |d| <= |c| puts it in the closed disk (c = 0 cannot
    // trip this: d = 0 too would kill the determinant).
    if (std::abs(m.d) <= std::abs(m.c))
        throw domain_error("estimate_lipschitz: pole inside the closed unit disk, "
                           "Euclidean constant is unbounded");
}

// |f'(z)| on the unit circle: |det| / |c e^{i t} + d|^2.
double boundary_derivative(const MoebiusMap& m, double t) {
    const double det = std::abs(m.a * m.d - m.b * m.c);
    return det / std::norm(m.c * std::polar(1.0, t) + m.d);
}

LipschitzEstimate euclidean_derivative_sup(const MoebiusMap& m,
                                           std::size_t budget, std::uint64_t seed) {
    MoebiusMap f = m;
    f.reversing = false;  // conjugation is a Euclidean isometry
    require_pole_outside_disk(f);

    // The max of |f'| over the closed disk sits on the boundary circle
    // (maximum principle), where |c e^{it} + d|^2 is a single sinusoid in t.
    // Dense sampling brackets its peak; golden-section finishes the job.
    const double step = two_pi / static_cast<double>(budget);
    double coarse = -1.0;
    std::size_t arg_best = 0;
    for (std::size_t i = 0; i < budget; ++i) {
        const double v = boundary_derivative(f, step * static_cast<double>(i));
        if (v > coarse) {
            coarse = v;
            arg_best = i;
        }
    }
    double lo = step * (static_cast<double>(arg_best) - 1.0);
    double hi = step * (static_cast<double>(arg_best) + 1.0);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double f1 = boundary_derivative(f, x1), f2 = boundary_derivative(f, x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = boundary_derivative(f, x2);
        } else {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = boundary_derivative(f, x1);
        }
    }
    Best best;
    best.offer(coarse, ExtendedPoint(std::polar(1.0, step * static_cast<double>(arg_best))));
    const double t_best = (f1 > f2) ? x1 : x2;
    best.offer(std::max(f1, f2), ExtendedPoint(std::polar(1.0, t_best)));

    LipschitzEstimate out;
    out.metric = Metric::euclidean;
    out.method = LipMethod::derivative_sup;
    out.value = best.value;
    out.witness = best.witness;
    if (m.reversing && !out.witness.inf)
        out.witness = ExtendedPoint(std::conj(out.witness.value));
    out.samples = budget;
    out.seed = seed;
    return out;
}

LipschitzEstimate chordal_derivative_sup(const MoebiusMap& m,
                                         std::size_t budget, std::uint64_t seed) {
    MoebiusMap f = m;
    f.reversing = false;  // conjugation is a chordal isometry

    // Stage 1: area-uniform sphere sampling (uniform heights, golden-angle
    // longitudes), plus the two points sampling never hits exactly.
    Best best;
    best.offer(spherical_derivative(f, ExtendedPoint(cplx(0.0))), ExtendedPoint(cplx(0.0)));
    best.offer(spherical_derivative(f, ExtendedPoint::infinity()), ExtendedPoint::infinity());
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    for (std::size_t i = 0; i < budget; ++i) {
        const double h = (static_cast<double>(i) + 0.5) / static_cast<double>(budget);
        const double r = std::sqrt(h / (1.0 - h));
        const double phi = two_pi * std::fmod(static_cast<double>(i) * golden, 1.0);
        const ExtendedPoint z(std::polar(r, phi));
        best.offer(spherical_derivative(f, z), z);
    }

    // Stage 2: recenter the best sample at 0 with a chordal isometry (so the
    // search variable is well-scaled) and run a compass search. The local
    // distortion has exactly one maximum on the sphere, so this converges to
    // the global one.
    const MoebiusMap recenter = best.witness.inf
                                    ? moebius(0.0, -1.0, 1.0, 0.0)  // z -> -1/z
                                    : chordal_isometry(best.witness.value);
    const MoebiusMap back = inverse(recenter);
    const MoebiusMap g = compose(f, back);
    cplx w(0.0);
    double gv = spherical_derivative(g, ExtendedPoint(w));
    double delta = 2.0 / std::sqrt(static_cast<double>(budget));
    for (int it = 0; it < 500 && delta > 1e-10; ++it) {
        bool moved = false;
        for (const cplx dir : {cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)}) {
            const cplx cand = w + delta * dir;
            const double cv = spherical_derivative(g, ExtendedPoint(cand));
            if (cv > gv) {
                gv = cv;
                w = cand;
                moved = true;
            }
        }
        if (!moved) delta /= 2.0;
    }
    best.offer(gv, apply(back, ExtendedPoint(w)));

    LipschitzEstimate out;
    out.metric = Metric::chordal;
    out.method = LipMethod::derivative_sup;
    out.value = best.value;
    out.witness = best.witness;
    if (m.reversing && !out.witness.inf)
        out.witness = ExtendedPoint(std::conj(out.witness.value));
    out.samples = budget;
    out.seed = seed;
    return out;
}

LipschitzEstimate pair_sampling(const MoebiusMap& m, Metric metric,
                                std::size_t budget, std::uint64_t seed) {
    if (metric == Metric::euclidean) require_pole_outside_disk(m);
    std::mt19937_64 rng(seed);
    // Fixed 53-bit construction instead of std::uniform_real_distribution:
    // bit-identical streams on every platform.
    auto u01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    auto disk_point = [&] {
        for (;;) {
            const cplx z(2.0 * u01() - 1.0, 2.0 * u01() - 1.0);
            if (std::norm(z) <= 1.0) return z;
        }
    };
    auto sphere_point = [&] {
        const double h = u01();
        return cplx(std::polar(std::sqrt(h / (1.0 - h)), two_pi * u01()));
    };

    Best best;
    for (std::size_t i = 0; i < budget; ++i) {
        if (metric == Metric::euclidean) {
            const cplx x = disk_point(), y = disk_point();
            if (std::abs(x - y) < 1e-9) continue;
            const cplx fx = apply(m, ExtendedPoint(x)).value;
            const cplx fy = apply(m, ExtendedPoint(y)).value;
            best.offer(std::abs(fx - fy) / std::abs(x - y),
                       ExtendedPoint(x), ExtendedPoint(y));
        } else {
            const ExtendedPoint x(sphere_point()), y(sphere_point());
            const double q = chordal_distance(x, y);
            if (q < 1e-12) continue;
            best.offer(chordal_distance(apply(m, x), apply(m, y)) / q, x, y);
        }
    }

    LipschitzEstimate out;
    out.metric = metric;
    out.method = LipMethod::pair_sampling;
    out.value = best.value;
    out.witness = best.witness;
    out.witness_pair = best.witness_pair;
    out.samples = budget;
    out.seed = seed;
    return out;
}

} // namespace

double lip_disk_automorphism(cplx a) {
    const double r = std::abs(a);
    if (r >= 1.0) throw domain_error("lip_disk_automorphism: |a| must be < 1");
    return (1.0 + r) / (1.0 - r);
}

double lip_disk_map_pair(cplx a, cplx b) {
    const double t = std::abs(disk_pair_pole(a, b));
    return (t + 1.0) / (t - 1.0);
}

double spherical_derivative(const MoebiusMap& m, const ExtendedPoint& z) {
    // In homogeneous coordinates (Z:W), the distortion is
    // |det| (|Z|^2 + |W|^2) / (|aZ+bW|^2 + |cZ+dW|^2).
    cplx Z(1.0), W(0.0);
    if (!z.inf) {
        Z = m.reversing ? std::conj(z.value) : z.value;
        W = 1.0;
    }
    const double det = std::abs(m.a * m.d - m.b * m.c);
    return det * (std::norm(Z) + std::norm(W)) /
           (std::norm(m.a * Z + m.b * W) + std::norm(m.c * Z + m.d * W));
}

LipschitzEstimate estimate_lipschitz(const MoebiusMap& m, Metric metric,
                                     LipMethod method, std::size_t budget,
                                     std::uint64_t seed) {
    if (budget == 0)
        throw domain_error("estimate_lipschitz: budget must be positive");
    if (method == LipMethod::pair_sampling)
        return pair_sampling(m, metric, budget, seed);
    return metric == Metric::euclidean ? euclidean_derivative_sup(m, budget, seed)
                                       : chordal_derivative_sup(m, budget, seed);
}

std::vector<cplx> conjecture_default_grid(double step, double rmax) {
    std::vector<cplx> grid;
    const int n = static_cast<int>(std::floor(rmax / step)) + 1;
    for (int i = -n; i <= n; ++i)
        for (int j = -n; j <= n; ++j) {
            const cplx a(step * i, step * j);
            if (std::abs(a) <= rmax + 1e-12) grid.push_back(a);
        }
    return grid;
}

ConjectureSweep conjecture_sweep(const std::vector<cplx>& grid,
                                 std::size_t budget, std::uint64_t seed) {
    ConjectureSweep sweep;
    sweep.rows.reserve(grid.size());
    for (const cplx a : grid) {
        ConjectureRow row;
        row.a = a;
        row.analytic = lip_disk_automorphism(a);
        row.empirical = estimate_lipschitz(disk_automorphism(a), Metric::chordal,
                                           LipMethod::derivative_sup, budget, seed)
                            .value;
        row.gap = std::abs(row.empirical - row.analytic) / row.analytic;
        sweep.max_gap = std::max(sweep.max_gap, row.gap);
        sweep.rows.push_back(row);
    }
    return sweep;
}

} // namespace moebsym
