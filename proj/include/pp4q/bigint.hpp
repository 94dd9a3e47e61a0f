#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace pp4q {

// Exact arithmetic everywhere: labels and sequence values are naturals that
// grow exponentially, so there is no fixed-width mode and no overflow mode.
using Int = boost::multiprecision::cpp_int;
using Nat = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when a requested row/level would exceed its configured entry cap.
// A refusal, never a truncation.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void validate_q(int q) {
    if (q < 4) throw std::invalid_argument("q must be >= 4 (got " + std::to_string(q) + ")");
}

inline Nat binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Nat r = 1;
    for (unsigned j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;  // exact: r is C(n-k+j, j) after each step
    }
    return r;
}

inline std::string dec(const Int& v) { return v.str(); }

inline std::string dec(const Rat& v) {
    const Int num = boost::multiprecision::numerator(v);
    const Int den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Nat pow_nat(const Nat& base, unsigned n) {
    Nat r = 1, b = base;
    while (n) {
        if (n & 1u) r *= b;
        b *= b;
        n >>= 1u;
    }
    return r;
}

}  // namespace pp4q
