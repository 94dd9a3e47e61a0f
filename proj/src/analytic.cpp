#include "pp4q/analytic.hpp"

#include "pp4q/sequences.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>

namespace pp4q {

namespace {

using Float = boost::multiprecision::cpp_bin_float_50;

// D = t^2 * rest with rest squarefree.
void extract_square(const Int& d, Int& t, Int& rest) {
    t = 1;
    rest = d;
    for (Int f = 2; f * f <= rest; ++f) {
        while (rest % (f * f) == 0) {
            rest /= f * f;
            t *= f;
        }
    }
}

std::string surd_term(const Int& k, const Int& d) {
    std::string s;
    if (k != 1) s += k.str() + "*";
    return s + "sqrt(" + d.str() + ")";
}

}  // namespace

RationalGF s_gf(int q) {
    validate_q(q);
    return {IntPoly{{1, -(q - 3), -(q - 4)}}, IntPoly{{1, -q, 2 * q - 2, -q, 1}}};
}

RationalGF shat_gf(int q) {
    validate_q(q);
    return {IntPoly{{1, -q, 4}}, IntPoly{{1, -(q + 3), 3 * q + 4, -(2 * q + 4)}}};
}

std::vector<Int> gf_series(const RationalGF& gf, unsigned n_terms) {
    if (gf.den.c.empty() || gf.den.c[0] != 1)
        throw std::domain_error("gf_series: denominator must have constant term 1");
    std::vector<Int> out;
    out.reserve(n_terms);
    for (unsigned k = 0; k < n_terms; ++k) {
        Int c = k < gf.num.c.size() ? gf.num.c[k] : Int(0);
        for (unsigned j = 1; j < gf.den.c.size() && j <= k; ++j)
            c -= gf.den.c[j] * out[k - j];
        out.push_back(std::move(c));
    }
    return out;
}

GrowthRatio growth_ratio(int q) {
    GrowthRatio r;
    r.q = q;
    r.alpha1 = sum_alpha1(q);

    const Int d = r.alpha1.disc();
    Int t, rest;
    extract_square(d, t, rest);

    // alpha1 = ((1+q) + t*sqrt(rest)) / 2
    const Int p = 1 + q;
    if (p % 2 == 0 && t % 2 == 0)
        r.exact = Int(p / 2).str() + " + " + surd_term(Int(t / 2), rest);
    else
        r.exact = "(" + p.str() + " + " + surd_term(t, rest) + ")/2";

    const Float fd(d.str());
    const Float alpha = (Float(1 + q) + sqrt(fd)) / 2;
    r.decimal = alpha.str(20);
    return r;
}

std::string empirical_ratio(int q, unsigned n, unsigned digits) {
    const auto sums = sums_by_recurrence(q, n + 1);
    const Float num(sums[n + 1].s.str());
    const Float den(sums[n].s.str());
    return (num / den).str(digits);
}

}  // namespace pp4q
