#pragma once

#include "pp4q/bigint.hpp"
#include "pp4q/polynomial.hpp"
#include "pp4q/quadratic.hpp"

#include <string>
#include <vector>

namespace pp4q {

// ---------------------------------------------------------------------------
// Rational generating functions
// ---------------------------------------------------------------------------

/// num(x)/den(x) with den(0) = 1, integer coefficients, ascending order.
struct RationalGF {
    IntPoly num;
    IntPoly den;
};

/// sum s_n x^n = (1 - (q-3)x - (q-4)x^2) / (1 - qx + (2q-2)x^2 - qx^3 + x^4)
RationalGF s_gf(int q);

/// sum s^_n x^n = (1 - qx + 4x^2) / (1 - (q+3)x + (3q+4)x^2 - (2q+4)x^3)
RationalGF shat_gf(int q);

/// First n_terms Taylor coefficients of num/den by exact long division:
/// c_k = num_k - sum_{j>=1} den_j c_{k-j}. All coefficients must come out
/// integral; throws domain_error otherwise.
std::vector<Int> gf_series(const RationalGF& gf, unsigned n_terms);

// ---------------------------------------------------------------------------
// Growth ratio
// ---------------------------------------------------------------------------

struct GrowthRatio {
    int q = 0;
    QuadraticNumber alpha1;  // (1+q+sqrt(q^2-2q-7))/2, exact
    std::string exact;       // e.g. "3 + sqrt(2)" when the surd simplifies
    std::string decimal;     // >= 15 significant digits
};

/// Dominant root of the s^ recurrence: lim s^_{n+1}/s^_n. q >= 5.
GrowthRatio growth_ratio(int q);

/// s^_{n+1}/s^_n at a finite level, as a decimal string (for convergence
/// demonstrations against the exact ratio).
std::string empirical_ratio(int q, unsigned n, unsigned digits = 20);

/// Reference constants: the Euclidean lattice's layer-sum ratio is exactly 3,
/// and the corresponding planar hyperbolic mosaic value for q = 5 is about
/// 10.351. Kept as named constants so the CLI can print them next to our
/// ratios without recomputing foreign quantities.
inline constexpr double kEuclideanLayerRatio = 3.0;
inline constexpr double kPlanarHyperbolicRatioQ5 = 10.351;

}  // namespace pp4q
