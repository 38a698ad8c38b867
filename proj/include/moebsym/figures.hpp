#pragma once

#include "moebsym/plane.hpp"

#include <array>
#include <string>

namespace moebsym {

// Each renderer returns a complete standalone SVG document; identical inputs
// give byte-identical output. Every plotted point carries id="pt-<name>" and
// data-x/data-y attributes with its plane coordinates at 12 significant
// digits, so the drawings double as machine-checkable reports.

// Pole construction for the disk map T_{a,b}: the lines L(a,b) and
// L(a*,b*) meet at the pole c, with the orthogonal circle centered there.
std::string render_figure1(cplx a, cplx b);

// Collinear normalization: nearest geodesic point k, the circle o_ab, and
// the images of a, b under T_k on a diameter (right panel).
std::string render_figure2(cplx a, cplx b);

// Equinorm normalization: hyperbolic midpoint h_ab and the images of a, b
// under T_{h_ab,k} at equal modulus (right panel).
std::string render_figure3(cplx a, cplx b);

// Circle-quadruple points w1, w4, w5 for the quadruple e^{i angles}.
std::string render_figure4(const std::array<double, 4>& angles);

} // namespace moebsym
