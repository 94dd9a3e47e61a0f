#pragma once

#include "pp4q/bigint.hpp"
#include "pp4q/counts.hpp"
#include "pp4q/polynomial.hpp"
#include "pp4q/quadratic.hpp"
#include "pp4q/ratmatrix.hpp"

#include <string>
#include <vector>

namespace pp4q {

// ---------------------------------------------------------------------------
// Coupled first-order systems (vertex counts and value sums per level)
// ---------------------------------------------------------------------------

/// Count vectors for n = 0..n_max via the coupled system
///   a' = a + b + 1,  b' = (q-4)a + (q-3)b,  c' = c + 2,
///   d' = a + d,      e' = b + e
/// (transitions from n >= 1, zero initial values). At q = 4 b and e stay
/// zero and a merges with the face count; euclidean_counts gives the
/// reduced view.
std::vector<CountVector> counts_by_recurrence(int q, unsigned n_max);

/// Reading of the sum system's d-hat line. The hatted reading is the one
/// consistent with the per-level tables and the transition matrix; the
/// unhatted reading (plain count c_n) is kept only so the mismatch can be
/// demonstrated.
enum class DhatReading { Hatted, PrintedUnhatted };

/// Sum vectors for n = 0..n_max via the coupled system
///   a' = 2a + 2b + 2,  b' = (q-4)a + (q-3)b,  c' = 2c + 4,
///   d' = a + c + 3d + 2e,  e' = b + (q-4)d + (q-2)e
/// with zero initial values (transitions from n >= 1); v = 3 (n >= 1), 1 at
/// n = 0; s is the component sum.
std::vector<SumVector> sums_by_recurrence(int q, unsigned n_max,
                                          DhatReading reading = DhatReading::Hatted);

/// The 6x6 one-step matrix for u = (a^, b^, c^, d^, e^, v^), valid from
/// n >= 1 (the constant injections enter through the v column as 2/3 and
/// 4/3). Note the (c^, c^) diagonal entry is 2.
RatMatrix transition_matrix(int q);

/// Sum vectors via repeated matrix application seeded at the true n = 1
/// vector (0,0,0,0,0,3); the n = 0 vector is stored directly. All entries
/// stay integral.
std::vector<SumVector> sums_by_matrix(int q, unsigned n_max);

// ---------------------------------------------------------------------------
// Identities
// ---------------------------------------------------------------------------

struct InteriorIdentities {
    bool d_holds = false;  // d_n == -a_n + b_n/(q-4) + (n-1)
    bool e_holds = false;  // e_n == a_n - (n-1)
    explicit operator bool() const { return d_holds && e_holds; }
};

/// Exact check of both interior-count identities at one level (n >= 1).
InteriorIdentities interior_identities(const CountVector& cv, int q);

// ---------------------------------------------------------------------------
// Characteristic polynomials (ascending coefficients, monic)
// ---------------------------------------------------------------------------

/// (x-1)(x-2)(x^2-(q+1)x+q+2)(x^2+(1-q)x+2), expanded. Characteristic
/// polynomial of the transition matrix and of the order-6 recurrence.
IntPoly char_poly_p6(int q);

/// (x-2)(x^2-(q+1)x+q+2) = x^3-(q+3)x^2+(3q+4)x-(2q+4): the s^ recurrence.
IntPoly char_poly_ps(int q);

/// (x-1)(x^2+(1-q)x+2) = x^3-qx^2+(1+q)x-2: the a^, b^ recurrence.
IntPoly char_poly_p3(int q);

/// (x-1)(x-2) = x^2-3x+2: the c^ recurrence.
IntPoly char_poly_p2();

/// x^4-qx^3+(2q-2)x^2-qx+1 = (x-1)^2(x^2-(q-2)x+1): the order-4 count
/// recurrence's characteristic polynomial.
IntPoly char_poly_counts4(int q);

/// x^3-(q-1)x^2+(q-1)x-1 = (x-1)(x^2-(q-2)x+1): the order-3 a,b recurrence.
IntPoly char_poly_counts3(int q);

// ---------------------------------------------------------------------------
// Order-reduced linear recurrences
// ---------------------------------------------------------------------------

/// x_n = coeffs[0] x_{n-1} + ... + coeffs[order-1] x_{n-order}, seeded with
/// initial[j] = value at index first_index + j.
struct LinearRecurrence {
    std::string name;    // e.g. "order4.s"
    std::string target;  // which sequence it reproduces: "a".."s", "a^".."s^"
    unsigned order = 0;
    std::vector<Int> coeffs;
    unsigned first_index = 0;
    std::vector<Nat> initial;

    /// Values at indices first_index..n_max (n_max inclusive).
    std::vector<Nat> prefix(unsigned n_max) const;
};

/// Every order-reduced recurrence with initial values filled in from the
/// coupled systems:
///   order 4 (counts, all of a..e and s), order 3 (counts a, b),
///   order 6 (all hatted sequences), order 3 (a^, b^), order 2 (c^),
///   order 3 (s^).
std::vector<LinearRecurrence> order_reduced_recurrences(int q);

// ---------------------------------------------------------------------------
// Closed forms (exact quadratic-field evaluation)
// ---------------------------------------------------------------------------

/// alpha1 = (q-2+sqrt(D))/2 with D = q(q-4); alpha1*alpha2 = 1.
QuadraticNumber count_alpha1(int q);
QuadraticNumber count_alpha2(int q);

/// alpha1 = (1+q+sqrt(D))/2 with D = q^2-2q-7; alpha1*alpha2 = q+2.
QuadraticNumber sum_alpha1(int q);
QuadraticNumber sum_alpha2(int q);

/// Exact closed-form count vector at level n. a, b, e use the validated
/// Binet forms over Q(sqrt(q(q-4))); d comes from the interior identities
/// and s from the level total, since the printed d and s coefficient sets
/// fail numeric validation (see printed_closed_form_*). Throws domain_error if a
/// surd fails to cancel.
CountVector closed_form_counts(int q, unsigned n);

/// Exact s^_n = beta1 alpha1^n + beta2 alpha2^n + beta3 2^n, with the betas
/// recomputed by solving the 3x3 system at n = 1,2,3 over Q(sqrt(q^2-2q-7)).
Nat closed_form_shat(int q, unsigned n);

struct ShatBetas {
    QuadraticNumber beta1, beta2;
    Rat beta3;
};

/// Solves for the betas exactly (Gaussian elimination over the field).
ShatBetas solve_shat_betas(int q);

/// The printed coefficient set for beta1: -1/2 + (q-1)sqrt(D)/(2D).
ShatBetas printed_shat_betas(int q);

// Printed-but-unvalidated closed forms, evaluated exactly so the deviation
// can be demonstrated (they do not feed any sequence output).
QuadraticNumber printed_closed_form_d(int q, unsigned n);
QuadraticNumber printed_closed_form_s(int q, unsigned n);

// ---------------------------------------------------------------------------
// Euclidean degenerate mode (q = 4)
// ---------------------------------------------------------------------------

struct EuclideanCounts {
    unsigned n = 0;
    Nat s;     // (n+1)(n+2)/2
    Nat shat;  // 3^n
    Nat c;     // merged face-interior count 3(n-1), n >= 1
    Nat d;     // interior count (n-1)(n-2)/2
};

/// The q = 4 reduced system: c' = c + 3 and d' = c/3 + d (zero initial
/// values, transitions from n >= 1). The d line divides the merged c by 3
/// because only one face feeds each interior diagonal; the variant without
/// the division contradicts s = c + d + 3 and the built graph (see verify's
/// erratum findings).
std::vector<EuclideanCounts> euclidean_counts(unsigned n_max);

}  // namespace pp4q
