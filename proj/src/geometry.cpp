#include "moebsym/geometry.hpp"
#include "moebsym/errors.hpp"
#include "moebsym/moebius.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace moebsym {

namespace {

constexpr double disk_limit = 1.0 - 1e-12;

void require_in_disk(cplx x, const char* who) {
    if (std::abs(x) > disk_limit)
        throw domain_error(std::string(who) + ": point not inside the unit disk");
}

void require_punctured_disk(cplx x, const char* who) {
    require_in_disk(x, who);
    if (x == cplx(0.0))
        throw domain_error(std::string(who) + ": point must be nonzero");
}

// Is p on the line through a and b?  Scale-free cross-product test.
bool on_line(cplx p, cplx a, cplx b) {
    const cplx u = b - a, v = p - a;
    return std::abs(std::imag(std::conj(u) * v)) <=
           1e-12 * std::abs(u) * (std::abs(v) + std::abs(u));
}

// Circumcenter of three points via the perpendicular-bisector equations
// 2 Re(conj(z)(p2-p1)) = |p2|^2 - |p1|^2 (and the same for p3, p1).
cplx circumcenter(cplx p1, cplx p2, cplx p3, const char* who) {
    const cplx u = p2 - p1, v = p3 - p1;
    const double ru = (std::norm(p2) - std::norm(p1)) / 2.0;
    const double rv = (std::norm(p3) - std::norm(p1)) / 2.0;
    const double det = u.real() * v.imag() - u.imag() * v.real();
    if (std::abs(det) <= 1e-14 * std::abs(u) * std::abs(v))
        throw degeneracy_error(std::string(who) + ": points are collinear");
    return cplx((ru * v.imag() - rv * u.imag()) / det,
                (u.real() * rv - v.real() * ru) / det);
}

} // namespace

ExtendedPoint line_intersection(cplx a, cplx b, cplx c, cplx d) {
    if (a == b || c == d)
        throw domain_error("line_intersection: a line needs two distinct points");
    // Writing both lines as Im(conj(direction)(z - base)) = 0 and eliminating
    // gives z = [Im(conj(a)b)(c-d) - Im(conj(c)d)(a-b)] / Im(conj(a-b)(c-d)).
    const double den = std::imag(std::conj(a - b) * (c - d));
    if (std::abs(den) <= 1e-14 * std::abs(a - b) * std::abs(c - d)) {
        if (on_line(c, a, b) && on_line(d, a, b))
            throw degeneracy_error("line_intersection: lines are identical");
        return ExtendedPoint::infinity();
    }
    const cplx num = std::imag(std::conj(a) * b) * (c - d) -
                     std::imag(std::conj(c) * d) * (a - b);
    return ExtendedPoint(num / den);
}

std::array<cplx, 4> lis_star_variants(cplx a, cplx b) {
    if (a == cplx(0.0) || b == cplx(0.0))
        throw domain_error("lis_star_variants: points must be nonzero");
    const double na = std::norm(a), nb = std::norm(b);
    if (na == nb)
        throw domain_error("lis_star_variants: |a| = |b| degenerates variants 1 and 2");
    if (na * nb == 1.0)
        throw domain_error("lis_star_variants: |a||b| = 1 degenerates variants 3 and 4");
    return {
        (b * (1.0 + na) - a * (1.0 + nb)) / (na - nb),
        (a * (1.0 - nb) - b * (1.0 - na)) / (na - nb),
        (a * (1.0 - nb) + b * (1.0 - na)) / (1.0 - na * nb),
        (a * (1.0 + nb) + b * (1.0 + na)) / (1.0 - na * nb),
    };
}

std::pair<cplx, cplx> chord_endpoints(cplx a, cplx b) {
    require_in_disk(a, "chord_endpoints");
    require_in_disk(b, "chord_endpoints");
    if (a == b) throw domain_error("chord_endpoints: points must be distinct");
    if (on_line(cplx(0.0), a, b))
        throw domain_error("chord_endpoints: chord through 0 needs no construction");
    // Foot of the perpendicular from 0 onto L(a,b): the line through 0 with
    // direction i(a-b) is perpendicular to L(a,b).
    const cplx c = line_intersection(a, b, cplx(0.0), cplx(0, 1) * (a - b)).value;
    const double nc = std::abs(c);
    assert(nc < 1.0);
    const cplx step = cplx(0, 1) * (c / nc) * std::sqrt(1.0 - nc * nc);
    cplx a1 = c - step, b1 = c + step;
    // The two endpoints are symmetric about c; pick the labeling with a1
    // on a's side.
    if (std::abs(a1 - a) >= std::abs(a1 - b)) std::swap(a1, b1);
    return {a1, b1};
}

cplx hyperbolic_midpoint(cplx x, cplx y) {
    require_in_disk(x, "hyperbolic_midpoint");
    require_in_disk(y, "hyperbolic_midpoint");
    const double px = 1.0 - std::norm(x), py = 1.0 - std::norm(y);
    const double bracket = std::abs(1.0 - x * std::conj(y));
    return (y * px + x * py) / (1.0 - std::norm(x) * std::norm(y) +
                                bracket * std::sqrt(px * py));
}

cplx chordal_midpoint(cplx a, cplx b) {
    const double na = std::norm(a), nb = std::norm(b);
    const double w = std::abs(1.0 + a * std::conj(b)) *
                     std::sqrt((1.0 + na) * (1.0 + nb));
    const double den = w + (1.0 - na * nb);
    if (den <= 1e-12 * (w + 1.0))
        throw degeneracy_error("chordal_midpoint: points are antipodal on the sphere");
    return (a * (1.0 + nb) + b * (1.0 + na)) / den;
}

OrthoCircle ortho_circle(cplx a, cplx b) {
    require_punctured_disk(a, "ortho_circle");
    require_punctured_disk(b, "ortho_circle");
    if (a == b) throw domain_error("ortho_circle: points must be distinct");
    if (on_line(cplx(0.0), a, b))
        throw domain_error("ortho_circle: geodesic is a diameter, not a circle");
    // The circle through a, b, and the inverted point a/|a|^2 is orthogonal
    // to the unit circle.
    const cplx center = circumcenter(a, b, a / std::norm(a), "ortho_circle");
    return {center, std::abs(center - a)};
}

cplx nearest_geodesic_point(cplx a, cplx b) {
    require_punctured_disk(a, "nearest_geodesic_point");
    require_punctured_disk(b, "nearest_geodesic_point");
    if (a == b) throw domain_error("nearest_geodesic_point: points must be distinct");
    if (on_line(cplx(0.0), a, b)) return cplx(0.0);
    const OrthoCircle circ = ortho_circle(a, b);
    const double t = std::abs(circ.center);
    // k = (center/t)(t - sqrt(t^2-1)), written without the cancellation.
    return circ.center / (t * (t + std::sqrt(t * t - 1.0)));
}

std::pair<cplx, cplx> geodesic_endpoints(cplx x, cplx y) {
    require_punctured_disk(x, "geodesic_endpoints");
    require_punctured_disk(y, "geodesic_endpoints");
    if (x == y) throw degeneracy_error("geodesic_endpoints: points coincide");
    // Send y to 0, push x radially to the boundary, map back.
    auto endpoint = [](cplx from, cplx toward) {
        const MoebiusMap t = disk_automorphism(toward);
        const cplx u = apply(t, ExtendedPoint(from)).value;
        return apply(disk_automorphism(-toward), ExtendedPoint(u / std::abs(u))).value;
    };
    return {endpoint(x, y), endpoint(y, x)};
}

OrthoCircle boundary_ortho_circle(cplx a, cplx c) {
    if (std::abs(std::abs(a) - 1.0) > 1e-9 || std::abs(std::abs(c) - 1.0) > 1e-9)
        throw domain_error("boundary_ortho_circle: points must lie on the unit circle");
    // Orthogonality |z|^2 = 1 + r^2 with |z-a| = r reduces to Re(conj(z) a) = 1;
    // same for c. Solve the 2x2 real system.
    const double det = a.real() * c.imag() - a.imag() * c.real();
    if (std::abs(det) <= 1e-12)
        throw degeneracy_error("boundary_ortho_circle: points coincide or are antipodal");
    const cplx center((c.imag() - a.imag()) / det, (a.real() - c.real()) / det);
    return {center, std::sqrt(std::norm(center) - 1.0)};
}

QuadCirclePoints circle_quad_points(cplx a, cplx b, cplx c, cplx d) {
    const cplx pts[4] = {a, b, c, d};
    for (const cplx& p : pts)
        if (std::abs(std::abs(p) - 1.0) > 1e-9)
            throw domain_error("circle_quad_points: point not on the unit circle");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (pts[i] == pts[j])
                throw domain_error("circle_quad_points: points must be distinct");
    // Positive order: the arguments of b/a, c/a, d/a, mapped into (0, 2pi),
    // must increase strictly.
    auto turn = [a](cplx p) {
        double t = std::arg(p / a);
        if (t <= 0.0) t += 2.0 * 3.141592653589793238462643383279502884;
        return t;
    };
    const double tb = turn(b), tc = turn(c), td = turn(d);
    if (!(tb < tc && tc < td))
        throw domain_error("circle_quad_points: points not in positive cyclic order");

    QuadCirclePoints out;
    out.w1 = line_intersection(a, b, c, d);
    if (out.w1.inf)
        throw degeneracy_error("circle_quad_points: chords ab and cd are parallel");
    out.w2 = line_intersection(a, c, b, d);
    out.w3 = line_intersection(a, d, b, c);

    const double t1 = std::abs(out.w1.value);
    if (t1 <= 1.0)
        throw degeneracy_error("circle_quad_points: no circle orthogonal to the "
                               "unit circle is centered at w1");

    // w4 solves a quadratic whose two roots are inverse points in the unit
    // circle; the bounded root, written with the radical in the denominator,
    // stays stable even when the quadratic degenerates to linear.
    const cplx lead = a * c - b * d;
    cplx s = std::sqrt((a - b) * (b - c) * (c - d) * (d - a));
    if (std::real(std::conj(lead) * s) < 0.0) s = -s;
    const cplx den = lead + s;
    out.w4 = (std::abs(den) == 0.0)
                 ? cplx(0.0)
                 : (a * c * (b + d) - b * d * (a + c)) / den;

    // w5: the point of the orthogonal circle centered at w1 nearest 0,
    // i.e. (w1/|w1|)(|w1| - r) with r = sqrt(|w1|^2 - 1).
    const double r1 = std::sqrt(t1 * t1 - 1.0);
    out.w5 = out.w1.value / (t1 * (t1 + r1));
    return out;
}

} // namespace moebsym
