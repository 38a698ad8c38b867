#include "moebsym/figures.hpp"
#include "moebsym/errors.hpp"
#include "moebsym/geometry.hpp"
#include "moebsym/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace moebsym {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;
constexpr int arc_segments = 128;

std::string fmt(double v, const char* spec = "%.3f") {
    if (v == 0.0) v = 0.0;  // flush -0 so attributes never read "-0"
    char buf[40];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

// Accumulates SVG elements over a fixed plane window; y axis points up.
struct Canvas {
    double minx, miny, maxx, maxy;
    double scale = 150.0, margin = 18.0;
    std::string body;

    Canvas(double x0, double y0, double x1, double y1)
        : minx(x0), miny(y0), maxx(x1), maxy(y1) {}

    double width() const { return scale * (maxx - minx) + 2 * margin; }
    double height() const { return scale * (maxy - miny) + 2 * margin; }
    std::string px(cplx p) const {
        return fmt(margin + scale * (p.real() - minx)) + "," +
               fmt(margin + scale * (maxy - p.imag()));
    }
    std::string pxx(double x) const { return fmt(margin + scale * (x - minx)); }
    std::string pxy(double y) const { return fmt(margin + scale * (maxy - y)); }

    void circle(cplx center, double r, const char* stroke, double width_px,
                bool dashed = false) {
        body += "  <circle cx=\"" + pxx(center.real()) + "\" cy=\"" +
                pxy(center.imag()) + "\" r=\"" + fmt(scale * r) +
                "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
                fmt(width_px) + "\"";
        if (dashed) body += " stroke-dasharray=\"6 4\"";
        body += "/>\n";
    }

    void segment(cplx p1, cplx p2, const char* stroke, double width_px,
                 bool dashed = false) {
        const std::string a = px(p1), b = px(p2);
        const auto comma_a = a.find(','), comma_b = b.find(',');
        body += "  <line x1=\"" + a.substr(0, comma_a) + "\" y1=\"" +
                a.substr(comma_a + 1) + "\" x2=\"" + b.substr(0, comma_b) +
                "\" y2=\"" + b.substr(comma_b + 1) + "\" stroke=\"" + stroke +
                "\" stroke-width=\"" + fmt(width_px) + "\"";
        if (dashed) body += " stroke-dasharray=\"6 4\"";
        body += "/>\n";
    }

    // Arc of the circle S(center, r) from angle t1 sweeping by dt.
    void arc_sweep(cplx center, double r, double t1, double dt,
                   const char* stroke, double width_px) {
        body += "  <polyline fill=\"none\" stroke=\"";
        body += stroke;
        body += "\" stroke-width=\"" + fmt(width_px) + "\" points=\"";
        for (int i = 0; i <= arc_segments; ++i) {
            if (i) body += " ";
            const double t = t1 + dt * i / arc_segments;
            body += px(center + std::polar(r, t));
        }
        body += "\"/>\n";
    }

    // Arc between two points of S(center, r), along the branch whose
    // midpoint is nearer the origin (the piece crossing the unit disk).
    void inner_arc(cplx center, double r, cplx p1, cplx p2, const char* stroke,
                   double width_px) {
        const double t1 = std::arg(p1 - center);
        double dt = std::arg((p2 - center) / (p1 - center));  // in (-pi, pi]
        const double alt = dt > 0 ? dt - 2 * pi : dt + 2 * pi;
        if (std::abs(center + std::polar(r, t1 + alt / 2)) <
            std::abs(center + std::polar(r, t1 + dt / 2)))
            dt = alt;
        arc_sweep(center, r, t1, dt, stroke, width_px);
    }

    // Line through the given points, extended a bit past their span.
    void long_line(const std::vector<cplx>& through, const char* stroke,
                   double width_px) {
        const cplx u = (through[1] - through[0]) / std::abs(through[1] - through[0]);
        double lo = 0.0, hi = 0.0;
        for (const cplx p : through) {
            const double t = std::real(std::conj(u) * (p - through[0]));
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        }
        segment(through[0] + (lo - 0.35) * u, through[0] + (hi + 0.35) * u,
                stroke, width_px);
    }

    // Marked point: machine-readable plane coordinates plus a label. The
    // drawn location may be panel-shifted; data-x/data-y stay unshifted.
    void point(const std::string& name, cplx value, cplx drawn,
               const std::string& label) {
        body += "  <circle id=\"pt-" + name + "\" cx=\"" + pxx(drawn.real()) +
                "\" cy=\"" + pxy(drawn.imag()) + "\" r=\"3.4\" fill=\"#111\"" +
                " data-x=\"" + fmt(value.real(), "%.12g") + "\" data-y=\"" +
                fmt(value.imag(), "%.12g") + "\"/>\n";
        body += "  <text x=\"" + pxx(drawn.real() + 0.045) + "\" y=\"" +
                pxy(drawn.imag() + 0.045) +
                "\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#111\">" +
                label + "</text>\n";
    }
    void point(const std::string& name, cplx value, const std::string& label) {
        point(name, value, value, label);
    }

    std::string finish(const std::string& title) const {
        std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                          fmt(width()) + "\" height=\"" + fmt(height()) +
                          "\" viewBox=\"0 0 " + fmt(width()) + " " + fmt(height()) +
                          "\">\n";
        out += "  <title>" + title + "</title>\n";
        out += "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
        out += body;
        out += "</svg>\n";
        return out;
    }
};

const char* kCircle = "#333333";
const char* kLine = "#8a8a8a";
const char* kArc = "#1f6fb2";
const char* kAux = "#b03737";

} // namespace

std::string render_figure1(cplx a, cplx b) {
    const cplx a_star = a / std::norm(a), b_star = b / std::norm(b);
    const cplx c = lis_star_variants(a, b)[1];
    const OrthoCircle o = ortho_circle(a, b);
    const auto [end_a, end_b] = geodesic_endpoints(a, b);

    Canvas cv(-1.3, -2.45, 2.35, 1.15);
    cv.circle(cplx(0.0), 1.0, kCircle, 1.5);
    cv.long_line({a, b, c, end_a, end_b}, kLine, 1.0);
    cv.long_line({a_star, b_star, c}, kLine, 1.0);
    cv.inner_arc(o.center, o.radius, end_a, end_b, kArc, 1.6);
    cv.circle(c, std::sqrt(std::norm(c) - 1.0), kAux, 1.2);
    cv.segment(c, end_b, kAux, 1.0, /*dashed=*/true);
    cv.point("zero", cplx(0.0), "0");
    cv.point("a", a, "a");
    cv.point("b", b, "b");
    cv.point("a-star", a_star, "a*");
    cv.point("b-star", b_star, "b*");
    cv.point("c", c, "c");
    return cv.finish("pole of the disk map through a and b");
}

namespace {

// Shared two-panel layout of the pair normalizations: the construction on
// the left, the images under `map` on the right.
std::string render_pair_figure(cplx a, cplx b, const MoebiusMap& map,
                               bool mark_midpoint, cplx h_ab, cplx k,
                               const std::string& label_prefix,
                               const std::string& title) {
    const OrthoCircle o = ortho_circle(a, b);
    const auto [end_a, end_b] = geodesic_endpoints(a, b);
    const cplx fa = apply(map, ExtendedPoint(a)).value;
    const cplx fb = apply(map, ExtendedPoint(b)).value;
    const cplx shift(2.6, 0.0);

    Canvas cv(-1.15, -1.5, 3.75, 1.15);
    // Left panel: the pair, its geodesic, and the special points.
    cv.circle(cplx(0.0), 1.0, kCircle, 1.5);
    cv.inner_arc(o.center, o.radius, end_a, end_b, kArc, 1.6);
    cv.segment(cplx(0.0), o.center, kLine, 1.0, /*dashed=*/true);
    cv.point("zero", cplx(0.0), "0");
    cv.point("a", a, "a");
    cv.point("b", b, "b");
    cv.point("k", k, "k");
    if (mark_midpoint) cv.point("h-ab", h_ab, "h");
    cv.point("o-ab", o.center, "o");

    // Right panel: the normalized images.
    cv.circle(shift, 1.0, kCircle, 1.5);
    cv.point("image-zero", cplx(0.0), shift, "0");
    cv.point("image-a", fa, fa + shift, label_prefix + "(a)");
    cv.point("image-b", fb, fb + shift, label_prefix + "(b)");
    if (std::abs(fa) < 1e-12 || std::abs(fb) < 1e-12) {
        // An image sits at the origin; no connector to draw.
    } else if (std::abs(std::imag(fa * std::conj(fb))) <= 1e-9 * std::abs(fa * fb)) {
        // Images on a diameter: draw it.
        const cplx u = fa / std::abs(fa);
        cv.segment(shift - u, shift + u, kArc, 1.2);
    } else {
        const OrthoCircle oi = ortho_circle(fa, fb);
        const auto [ia, ib] = geodesic_endpoints(fa, fb);
        cv.inner_arc(oi.center + shift, oi.radius, ia + shift, ib + shift,
                     kArc, 1.6);
    }
    return cv.finish(title);
}

} // namespace

std::string render_figure2(cplx a, cplx b) {
    const cplx k = nearest_geodesic_point(a, b);
    return render_pair_figure(a, b, disk_automorphism(k), /*mark_midpoint=*/false,
                              cplx(0.0), k, "T_k",
                              "images of a and b on a diameter");
}

std::string render_figure3(cplx a, cplx b) {
    const cplx h_ab = hyperbolic_midpoint(a, b);
    const cplx k = nearest_geodesic_point(a, b);
    return render_pair_figure(a, b, disk_map_pair(h_ab, k), /*mark_midpoint=*/true,
                              h_ab, k, "f",
                              "images of a and b at equal modulus");
}

std::string render_figure4(const std::array<double, 4>& angles) {
    const cplx a = std::polar(1.0, angles[0]), b = std::polar(1.0, angles[1]);
    const cplx c = std::polar(1.0, angles[2]), d = std::polar(1.0, angles[3]);
    const QuadCirclePoints qp = circle_quad_points(a, b, c, d);
    const cplx w1 = qp.w1.value;
    const double r1 = std::sqrt(std::norm(w1) - 1.0);

    Canvas cv(-1.15, -1.15, 1.95, 2.3);
    cv.circle(cplx(0.0), 1.0, kCircle, 1.5);
    cv.circle(w1, r1, kAux, 1.2);
    cv.segment(cplx(0.0), w1, kLine, 1.0, /*dashed=*/true);
    cv.segment(a, w1, kLine, 1.0);
    cv.segment(d, w1, kLine, 1.0);
    const OrthoCircle j_ac = boundary_ortho_circle(a, c);
    const OrthoCircle j_bd = boundary_ortho_circle(b, d);
    cv.inner_arc(j_ac.center, j_ac.radius, a, c, kArc, 1.6);
    cv.inner_arc(j_bd.center, j_bd.radius, b, d, kArc, 1.6);
    cv.point("zero", cplx(0.0), "0");
    cv.point("a", a, "a");
    cv.point("b", b, "b");
    cv.point("c", c, "c");
    cv.point("d", d, "d");
    cv.point("w1", w1, "w1");
    cv.point("w4", qp.w4, "w4");
    cv.point("w5", qp.w5, "w5");
    return cv.finish("distinguished points of a circle quadruple");
}

} // namespace moebsym
