#include "moebsym/symmetrize.hpp"
#include "moebsym/errors.hpp"
#include "moebsym/lipschitz.hpp"

#include <algorithm>
#include <cmath>

namespace moebsym {

namespace {

void require_distinct(const cplx* pts, int n, const char* who) {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pts[i] == pts[j])
                throw degeneracy_error(std::string(who) + ": repeated point");
}

} // namespace

QuadSymmetrization symmetrize_quadruple(cplx a, cplx b, cplx c, cplx d) {
    const cplx pts[4] = {a, b, c, d};
    require_distinct(pts, 4, "symmetrize_quadruple");

    QuadSymmetrization out;
    const double scale =
        std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d), 1.0});

    // The generic coefficients divide by a-b-c+d; when it vanishes the
    // target images force the degree-one map h(z) = (-2z + a+d)/(a-d),
    // so that is the branch condition (equivalently a+d = b+c).
    if (std::abs(a - b - c + d) < 1e-10 * scale) {
        out.branch = QuadBranch::linear;
        out.map = moebius(-2.0, a + d, 0.0, a - d);
        out.y = (a + d - 2.0 * b) / (a - d);
        out.center = (a + d) / 2.0;
        return out;
    }

    out.branch = QuadBranch::generic;
    out.k0 = (b - c) * (a - d);
    out.k1 = (a - c) * (b - d) + (a - b) * (c - d);

    // k0 y^2 + 2 k1 y + k0 = 0: the roots multiply to exactly 1, so compute
    // the large root with the sign of the radical aligned against -k1 (no
    // cancellation) and invert it for the small one.
    cplx rad = std::sqrt(out.k1 * out.k1 - out.k0 * out.k0);
    if (std::real(std::conj(out.k1) * rad) > 0.0) rad = -rad;
    const cplx y_big = (-out.k1 + rad) / out.k0;
    const cplx y_small = 1.0 / y_big;
    out.y = y_small;
    if (std::abs(std::abs(y_big) - 1.0) <= 1e-12) {
        // Both roots unimodular (they are conjugates): break the tie by
        // sign convention.
        out.root_tie = true;
        out.y = y_big;
        if (out.y.imag() < 0.0 ||
            (out.y.imag() == 0.0 && out.y.real() < 0.0))
            out.y = y_small;
    }

    const cplx e = a - b - c + d;
    out.p = -((b - c) * out.y + (a - d)) / e;
    out.q = ((b - c) * (a + d) * out.y + (b + c) * (a - d)) / (2.0 * e);
    // From h(a) = -1 and h(d) = 1: s is linear in p (the direct quotient
    // form can divide by zero).
    out.s = -((a - d) * out.p + a + d) / 2.0;
    out.map = moebius(out.p, out.q, 1.0, out.s);
    out.center = -out.q / out.p;
    return out;
}

cplx moebius_center(cplx a, cplx b, cplx c, cplx d) {
    return symmetrize_quadruple(a, b, c, d).center;
}

SpecialSymmetrization symmetrize_special(cplx x) {
    if (x == cplx(0.0) || x == cplx(1.0))
        throw domain_error("symmetrize_special: x must differ from 0 and 1");
    SpecialSymmetrization out;
    const double ax = std::abs(x), gap = std::abs(x - 1.0);
    // (1+|x|)^2 - |x-1|^2 = 2(|x| + Re x) >= 0.
    out.t = std::sqrt(std::max(0.0, (1.0 + ax) * (1.0 + ax) - gap * gap));
    out.abs_y = gap / (1.0 + ax + out.t);
    out.norm_y_plus = 4.0 / (1.0 + ax + out.t);
    return out;
}

PairNormalization normalize_pair(cplx a, cplx b, PairMode mode) {
    PairNormalization out;
    out.mode = mode;
    out.h_ab = hyperbolic_midpoint(a, b);
    out.k = nearest_geodesic_point(a, b);
    switch (mode) {
    case PairMode::antipodal:
        out.map = disk_automorphism(out.h_ab);
        out.lip = lip_disk_automorphism(out.h_ab);
        break;
    case PairMode::collinear:
        out.map = disk_automorphism(out.k);
        out.lip = lip_disk_automorphism(out.k);
        break;
    case PairMode::equinorm:
        if (out.k == cplx(0.0))
            throw domain_error("normalize_pair: a, b, 0 are collinear, so k = 0 "
                               "and the equinorm map is undefined");
        out.map = disk_map_pair(out.h_ab, out.k);
        out.lip = lip_disk_map_pair(out.h_ab, out.k);
        break;
    }
    return out;
}

CircleQuadSymmetrization symmetrize_circle_quadruple(cplx a, cplx b, cplx c,
                                                     cplx d, QuadMethod method) {
    CircleQuadSymmetrization out;
    out.method = method;
    out.points = circle_quad_points(a, b, c, d);
    if (method == QuadMethod::antipodal) {
        out.map = disk_automorphism(out.points.w4);
        out.lip = lip_disk_automorphism(out.points.w4);
    } else {
        out.map = disk_map_pair(out.points.w4, out.points.w5);
        out.lip = lip_disk_map_pair(out.points.w4, out.points.w5);
    }
    return out;
}

std::optional<double> reflection_axis(const MoebiusMap& m, cplx a, cplx b,
                                      cplx c, cplx d) {
    const cplx img[4] = {
        apply(m, ExtendedPoint(a)).value, apply(m, ExtendedPoint(b)).value,
        apply(m, ExtendedPoint(c)).value, apply(m, ExtendedPoint(d)).value};

    // For unit-modulus points, e^{2 i theta} conj(X) = Y reads
    // e^{2 i theta} = X Y; each candidate pairing fixes that product.
    // Pairings: (A<->B, C<->D), (A<->D, B<->C), (A,C fixed, B<->D),
    // (B,D fixed, A<->C).
    const int pairings[4][4] = {
        {1, 0, 3, 2}, {3, 2, 1, 0}, {0, 3, 2, 1}, {2, 1, 0, 3}};
    for (const auto& perm : pairings) {
        const cplx axis2 = img[0] * img[perm[0]];  // e^{2 i theta}
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i)
            ok = std::abs(axis2 * std::conj(img[i]) - img[perm[i]]) <= 1e-9;
        if (ok) return std::arg(axis2) / 2.0;
    }
    return std::nullopt;
}

} // namespace moebsym
