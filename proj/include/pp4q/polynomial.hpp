#pragma once

#include "pp4q/bigint.hpp"
#include "pp4q/quadratic.hpp"

#include <string>
#include <vector>

namespace pp4q {

/// Dense univariate polynomial, coefficients in ascending degree order
/// (c[i] is the coefficient of x^i).
template <typename T>
struct Polynomial {
    std::vector<T> c;

    unsigned degree() const { return c.empty() ? 0 : static_cast<unsigned>(c.size() - 1); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c == b.c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.c.empty() || b.c.empty()) return {};
        Polynomial r;
        r.c.assign(a.c.size() + b.c.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        return r;
    }
};

using IntPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rat>;

inline RatPoly to_rat(const IntPoly& p) {
    RatPoly r;
    r.c.reserve(p.c.size());
    for (const auto& v : p.c) r.c.emplace_back(v);
    return r;
}

inline Rat eval_poly(const IntPoly& p, const Rat& x) {
    Rat acc = 0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

inline QuadraticNumber eval_poly(const IntPoly& p, const QuadraticNumber& x) {
    QuadraticNumber acc = QuadraticNumber::rational(0, x.disc());
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it)
        acc = acc * x + QuadraticNumber::rational(Rat(*it), x.disc());
    return acc;
}

inline std::string poly_str(const IntPoly& p) {
    if (p.c.empty()) return "0";
    std::string s;
    for (std::size_t d = p.c.size(); d-- > 0;) {
        const Int& v = p.c[d];
        if (v == 0) continue;
        if (!s.empty()) s += v < 0 ? " - " : " + ";
        else if (v < 0) s += "-";
        const Int av = boost::multiprecision::abs(v);
        if (av != 1 || d == 0) s += av.str();
        if (d >= 1) s += "x";
        if (d >= 2) s += "^" + std::to_string(d);
    }
    return s.empty() ? "0" : s;
}

}  // namespace pp4q
