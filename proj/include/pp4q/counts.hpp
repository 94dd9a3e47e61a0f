#pragma once

#include "pp4q/bigint.hpp"

namespace pp4q {

/// Per-level vertex counts (a..e by type, s total). s = a+b+c+d+e+3 for
/// n >= 1 and s = 1 at n = 0.
struct CountVector {
    unsigned n = 0;
    Nat a, b, c, d, e, s;

    friend bool operator==(const CountVector& x, const CountVector& y) {
        return x.n == y.n && x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d &&
               x.e == y.e && x.s == y.s;
    }
};

/// Per-level label sums (hatted sequences). v is the sum over type-1
/// vertices: 3 for n >= 1, 1 at n = 0. s = a+b+c+d+e+v.
struct SumVector {
    unsigned n = 0;
    Nat a, b, c, d, e, v, s;

    friend bool operator==(const SumVector& x, const SumVector& y) {
        return x.n == y.n && x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d &&
               x.e == y.e && x.v == y.v && x.s == y.s;
    }
};

}  // namespace pp4q
