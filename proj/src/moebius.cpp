#include "moebsym/moebius.hpp"
#include "moebsym/errors.hpp"

#include <algorithm>
#include <cmath>

namespace moebsym {

namespace {

double coeff_scale(cplx a, cplx b, cplx c, cplx d) {
    return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

// Scale so the largest coefficient has modulus 1, then divide by a square
// root of the determinant. Keeps |ad - bc| = 1 without changing the map.
MoebiusMap normalized(cplx a, cplx b, cplx c, cplx d, bool reversing) {
    const double s = coeff_scale(a, b, c, d);
    if (s == 0.0) throw domain_error("moebius: all coefficients zero");
    a /= s; b /= s; c /= s; d /= s;
    const cplx det = a * d - b * c;
    if (std::abs(det) < 1e-14)
        throw domain_error("moebius: determinant vanishes (map is constant)");
    const cplx r = std::sqrt(det);
    return MoebiusMap{a / r, b / r, c / r, d / r, reversing};
}

} // namespace

MoebiusMap moebius(cplx a, cplx b, cplx c, cplx d, bool reversing) {
    return normalized(a, b, c, d, reversing);
}

MoebiusMap moebius_identity() { return MoebiusMap{}; }

ExtendedPoint apply(const MoebiusMap& m, const ExtendedPoint& p) {
    if (p.inf) {
        // Limit of (az + b)/(cz + d) as z -> oo is a/c.
        if (std::abs(m.c) < 1e-14 * coeff_scale(m.a, m.b, m.c, m.d))
            return ExtendedPoint::infinity();
        return ExtendedPoint(m.a / m.c);
    }
    const cplx z = m.reversing ? std::conj(p.value) : p.value;
    const cplx den = m.c * z + m.d;
    // Relative test: den is negligible against the terms composing it. The
    // comparison must not be strict, or an exact zero (d = 0 hit at z = 0)
    // would slip through and divide by zero.
    if (std::abs(den) <= 1e-14 * (std::abs(m.c) * std::abs(z) + std::abs(m.d)))
        return ExtendedPoint::infinity();
    return ExtendedPoint((m.a * z + m.b) / den);
}

MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2) {
    // If m1 conjugates its input, m2's action is seen through a conjugation.
    cplx a2 = m2.a, b2 = m2.b, c2 = m2.c, d2 = m2.d;
    if (m1.reversing) {
        a2 = std::conj(a2); b2 = std::conj(b2);
        c2 = std::conj(c2); d2 = std::conj(d2);
    }
    return normalized(m1.a * a2 + m1.b * c2, m1.a * b2 + m1.b * d2,
                      m1.c * a2 + m1.d * c2, m1.c * b2 + m1.d * d2,
                      m1.reversing != m2.reversing);
}

MoebiusMap inverse(const MoebiusMap& m) {
    cplx a = m.d, b = -m.b, c = -m.c, d = m.a;
    if (m.reversing) {
        // (f o g)(z) = z with g(z) = (a' conj(z) + b')/(c' conj(z) + d')
        // forces the conjugated adjugate coefficients.
        a = std::conj(a); b = std::conj(b);
        c = std::conj(c); d = std::conj(d);
    }
    return normalized(a, b, c, d, m.reversing);
}

bool approx_equal(const MoebiusMap& m1, const MoebiusMap& m2, double tol) {
    if (m1.reversing != m2.reversing) return false;
    auto close = [tol](cplx x, cplx y) { return std::abs(x - y) <= tol; };
    const bool plus = close(m1.a, m2.a) && close(m1.b, m2.b) &&
                      close(m1.c, m2.c) && close(m1.d, m2.d);
    const bool minus = close(m1.a, -m2.a) && close(m1.b, -m2.b) &&
                       close(m1.c, -m2.c) && close(m1.d, -m2.d);
    return plus || minus;
}

MoebiusMap inversion_map(const Inversion& inv) {
    // w = center + r^2 / conj(z - center)
    //   = (center conj(z) + (r^2 - |center|^2)) / (conj(z) - conj(center)).
    const cplx v = inv.center;
    return moebius(v, inv.radius * inv.radius - std::norm(v), 1.0, -std::conj(v),
                   /*reversing=*/true);
}

MoebiusMap line_reflection_map(const LineReflection& refl) {
    // Reflection over { Re(z conj(u)) = t }: w = 2 t u - u^2 conj(z).
    const cplx u = refl.unit_normal;
    return moebius(-u * u, 2.0 * refl.offset * u, 0.0, 1.0, /*reversing=*/true);
}

MoebiusMap disk_automorphism(cplx a) {
    if (std::abs(a) >= 1.0)
        throw domain_error("disk_automorphism: |a| must be < 1");
    return moebius(1.0, -a, -std::conj(a), 1.0);
}

AhlforsFactors ahlfors_factorization(cplx a) {
    const double r = std::abs(a);
    if (r >= 1.0) throw domain_error("ahlfors_factorization: |a| must be < 1");
    if (r == 0.0)
        throw domain_error("ahlfors_factorization: a = 0 gives the identity");
    // Inversion in the circle centered at a/|a|^2 through the points where
    // the unit circle meets the circle orthogonal to it at +-a/|a|.
    AhlforsFactors f;
    f.invert_circle = Inversion{a / std::norm(a), std::sqrt(1.0 / (r * r) - 1.0)};
    // Reflection over the line through 0 perpendicular to a.
    f.reflect_line = LineReflection{a / r, 0.0};
    return f;
}

cplx disk_pair_pole(cplx a, cplx b) {
    if (a == cplx(0.0) || b == cplx(0.0))
        throw domain_error("disk_pair_pole: points must be nonzero");
    if (std::abs(a) >= 1.0 || std::abs(b) >= 1.0)
        throw domain_error("disk_pair_pole: points must lie inside the unit disk");
    const double na = std::norm(a), nb = std::norm(b);
    if (na == nb)
        throw domain_error("disk_pair_pole: |a| = |b| has no pole formula");
    return (a - b + a * b * (std::conj(a) - std::conj(b))) / (na - nb);
}

MoebiusMap disk_map_pair(cplx a, cplx b) {
    const cplx c = disk_pair_pole(a, b);
    const cplx u = b / std::conj(b);
    return moebius(u * std::conj(c), -u, 1.0, -c);
}

MoebiusMap chordal_isometry(cplx a) {
    return moebius(1.0, -a, std::conj(a), 1.0);
}

MoebiusMap chordal_midpoint_map(cplx a, cplx b) {
    const double na = std::norm(a), nb = std::norm(b);
    const cplx num = a * (1.0 + nb) + b * (1.0 + na);
    const double w = std::abs(1.0 + a * std::conj(b)) *
                     std::sqrt((1.0 + na) * (1.0 + nb));
    const double big = w + (1.0 - na * nb);
    if (big <= 1e-12 * (w + 1.0))
        throw degeneracy_error("chordal_midpoint_map: points are antipodal");
    // t_m with m = num / big, cleared of the common denominator.
    return moebius(big, -num, std::conj(num), big);
}

} // namespace moebsym
