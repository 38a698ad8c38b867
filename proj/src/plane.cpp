#include "moebsym/plane.hpp"
#include "moebsym/errors.hpp"

#include <cmath>
#include <string>

namespace moebsym {

namespace {

// Hyperbolic quantities diverge at the boundary, so "inside the disk" leaves
// a small safety margin.
constexpr double disk_limit = 1.0 - 1e-12;

void require_in_disk(cplx x, const char* who) {
    if (std::abs(x) > disk_limit)
        throw domain_error(std::string(who) + ": point not inside the unit disk");
}

} // namespace

SpherePoint stereographic_projection(const ExtendedPoint& p) {
    if (p.inf) return {0.0, 0.0, 1.0};
    const double n2 = std::norm(p.value);
    const double s = 1.0 / (1.0 + n2);
    return {p.value.real() * s, p.value.imag() * s, n2 * s};
}

double chordal_distance(const ExtendedPoint& x, const ExtendedPoint& y) {
    if (x.inf && y.inf) return 0.0;
    if (x.inf) return 1.0 / std::sqrt(1.0 + std::norm(y.value));
    if (y.inf) return 1.0 / std::sqrt(1.0 + std::norm(x.value));
    return std::abs(x.value - y.value) /
           (std::sqrt(1.0 + std::norm(x.value)) * std::sqrt(1.0 + std::norm(y.value)));
}

double ahlfors_bracket(cplx x, cplx y) {
    require_in_disk(x, "ahlfors_bracket");
    require_in_disk(y, "ahlfors_bracket");
    return std::abs(1.0 - x * std::conj(y));
}

double hyperbolic_distance(cplx x, cplx y) {
    return 2.0 * std::atanh(std::abs(x - y) / ahlfors_bracket(x, y));
}

double absolute_ratio(const ExtendedPoint& a, const ExtendedPoint& b,
                      const ExtendedPoint& c, const ExtendedPoint& d) {
    const ExtendedPoint pts[4] = {a, b, c, d};
    int at_infinity = 0;
    for (const auto& p : pts) at_infinity += p.inf ? 1 : 0;
    if (at_infinity > 1)
        throw degeneracy_error("absolute_ratio: more than one point at infinity");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (pts[i] == pts[j])
                throw degeneracy_error("absolute_ratio: repeated point");

    // An ∞ appears in exactly one numerator and one denominator factor, so
    // replacing both distances by 1 realizes the cancelled limit value.
    auto gap = [](const ExtendedPoint& x, const ExtendedPoint& y) {
        return (x.inf || y.inf) ? 1.0 : std::abs(x.value - y.value);
    };
    return (gap(a, c) * gap(b, d)) / (gap(a, b) * gap(c, d));
}

} // namespace moebsym
