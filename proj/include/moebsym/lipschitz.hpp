#pragma once

#include "moebsym/moebius.hpp"
#include "moebsym/plane.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace moebsym {

enum class Metric { euclidean, chordal };
enum class LipMethod { derivative_sup, pair_sampling };

struct LipschitzEstimate {
    Metric metric = Metric::euclidean;
    LipMethod method = LipMethod::derivative_sup;
    double value = 1.0;
    // Maximizing point (derivative_sup) or first of the maximizing pair.
    ExtendedPoint witness;
    // Second of the maximizing pair; meaningful for pair_sampling only.
    ExtendedPoint witness_pair;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

// Euclidean Lipschitz constant of T_a on the closed unit disk:
// (1 + |a|) / (1 - |a|).
double lip_disk_automorphism(cplx a);

// Euclidean Lipschitz constant of T_{a,b} on the closed unit disk:
// (|c| + 1) / (|c| - 1) with c the pole of the map.
double lip_disk_map_pair(cplx a, cplx b);

// Local chordal distortion |f'(z)|(1+|z|^2)/(1+|f(z)|^2), evaluated in
// homogeneous coordinates so z = infinity works; sense-reversing maps are
// measured at conj(z) (conjugation is a chordal isometry).
double spherical_derivative(const MoebiusMap& m, const ExtendedPoint& z);

// Empirical Lipschitz constant of m. derivative_sup maximizes the local
// distortion (budget samples + local refinement, accurate to ~6 digits);
// pair_sampling reports the max metric ratio over budget random pairs
// (a lower bound). Deterministic given (budget, seed).
LipschitzEstimate estimate_lipschitz(const MoebiusMap& m, Metric metric,
                                     LipMethod method, std::size_t budget,
                                     std::uint64_t seed);

struct ConjectureRow {
    cplx a;
    double analytic = 1.0;   // (1+|a|)/(1-|a|)
    double empirical = 1.0;  // chordal derivative-sup estimate for T_a
    double gap = 0.0;        // |empirical - analytic| / analytic
};

struct ConjectureSweep {
    std::vector<ConjectureRow> rows;
    double max_gap = 0.0;
};

// Square grid of step `step` over the disk |a| <= rmax.
std::vector<cplx> conjecture_default_grid(double step = 0.05, double rmax = 0.95);

// Compare the analytic Euclidean constant of T_a against its empirical
// chordal constant over a grid of parameters a.
ConjectureSweep conjecture_sweep(const std::vector<cplx>& grid,
                                 std::size_t budget, std::uint64_t seed);

} // namespace moebsym
