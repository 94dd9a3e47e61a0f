#include "pp4q/sequences.hpp"

#include <stdexcept>
#include <utility>

namespace pp4q {

namespace {

Nat to_nat(const Rat& r, const char* what) {
    if (boost::multiprecision::denominator(r) != 1)
        throw std::domain_error(std::string(what) + ": not an integer (" + dec(r) + ")");
    return boost::multiprecision::numerator(r);
}

void require_hyperbolic(int q) {
    validate_q(q);
    if (q == 4) throw std::invalid_argument("q = 4 is the Euclidean degenerate case");
}

}  // namespace

std::vector<CountVector> counts_by_recurrence(int q, unsigned n_max) {
    validate_q(q);
    std::vector<CountVector> out;
    out.reserve(n_max + 1);
    out.push_back({0, 0, 0, 0, 0, 0, 1});
    if (n_max == 0) return out;
    CountVector cur{1, 0, 0, 0, 0, 0, 3};
    out.push_back(cur);
    for (unsigned n = 2; n <= n_max; ++n) {
        CountVector nx;
        nx.n = n;
        nx.a = cur.a + cur.b + 1;
        nx.b = (q - 4) * cur.a + (q - 3) * cur.b;
        nx.c = cur.c + 2;
        nx.d = cur.a + cur.d;
        nx.e = cur.b + cur.e;
        nx.s = nx.a + nx.b + nx.c + nx.d + nx.e + 3;
        out.push_back(nx);
        cur = std::move(nx);
    }
    return out;
}

std::vector<SumVector> sums_by_recurrence(int q, unsigned n_max, DhatReading reading) {
    validate_q(q);
    std::vector<SumVector> out;
    out.reserve(n_max + 1);
    out.push_back({0, 0, 0, 0, 0, 0, 1, 1});
    if (n_max == 0) return out;
    SumVector cur{1, 0, 0, 0, 0, 0, 3, 3};
    out.push_back(cur);
    for (unsigned n = 2; n <= n_max; ++n) {
        // plain vertex count c_{n-1}, only consumed by the unhatted reading
        const Nat c_count = 2 * (Nat(n) - 2);
        const Nat& d_feed = reading == DhatReading::Hatted ? cur.c : c_count;
        SumVector nx;
        nx.n = n;
        nx.a = 2 * cur.a + 2 * cur.b + 2;
        nx.b = (q - 4) * cur.a + (q - 3) * cur.b;
        nx.c = 2 * cur.c + 4;
        nx.d = cur.a + d_feed + 3 * cur.d + 2 * cur.e;
        nx.e = cur.b + (q - 4) * cur.d + (q - 2) * cur.e;
        nx.v = 3;
        nx.s = nx.a + nx.b + nx.c + nx.d + nx.e + nx.v;
        out.push_back(nx);
        cur = std::move(nx);
    }
    return out;
}

RatMatrix transition_matrix(int q) {
    validate_q(q);
    RatMatrix m(6);
    m.at(0, 0) = 2;
    m.at(0, 1) = 2;
    m.at(0, 5) = Rat(2) / 3;
    m.at(1, 0) = q - 4;
    m.at(1, 1) = q - 3;
    m.at(2, 2) = 2;
    m.at(2, 5) = Rat(4) / 3;
    m.at(3, 0) = 1;
    m.at(3, 2) = 1;
    m.at(3, 3) = 3;
    m.at(3, 4) = 2;
    m.at(4, 1) = 1;
    m.at(4, 3) = q - 4;
    m.at(4, 4) = q - 2;
    m.at(5, 5) = 1;
    return m;
}

std::vector<SumVector> sums_by_matrix(int q, unsigned n_max) {
    const RatMatrix m = transition_matrix(q);
    std::vector<SumVector> out;
    out.reserve(n_max + 1);
    out.push_back({0, 0, 0, 0, 0, 0, 1, 1});
    std::vector<Rat> u{0, 0, 0, 0, 0, 3};
    for (unsigned n = 1; n <= n_max; ++n) {
        if (n > 1) u = m.apply(u);
        SumVector sv;
        sv.n = n;
        sv.a = to_nat(u[0], "matrix a^");
        sv.b = to_nat(u[1], "matrix b^");
        sv.c = to_nat(u[2], "matrix c^");
        sv.d = to_nat(u[3], "matrix d^");
        sv.e = to_nat(u[4], "matrix e^");
        sv.v = to_nat(u[5], "matrix v^");
        sv.s = sv.a + sv.b + sv.c + sv.d + sv.e + sv.v;
        out.push_back(sv);
    }
    return out;
}

InteriorIdentities interior_identities(const CountVector& cv, int q) {
    require_hyperbolic(q);
    if (cv.n == 0) throw std::invalid_argument("identities need n >= 1");
    const Rat nm1 = cv.n - 1;
    InteriorIdentities r;
    r.d_holds = Rat(cv.d) == -Rat(cv.a) + Rat(cv.b) / (q - 4) + nm1;
    r.e_holds = Int(cv.e) == Int(cv.a) - Int(cv.n - 1);
    return r;
}

namespace {

IntPoly lin(Int c0, Int c1) { return IntPoly{{std::move(c0), std::move(c1)}}; }
IntPoly quad(Int c0, Int c1, Int c2) {
    return IntPoly{{std::move(c0), std::move(c1), std::move(c2)}};
}

}  // namespace

IntPoly char_poly_p6(int q) {
    return char_poly_p2() * quad(q + 2, -(q + 1), 1) * quad(2, 1 - q, 1);
}

IntPoly char_poly_ps(int q) { return lin(-2, 1) * quad(q + 2, -(q + 1), 1); }

IntPoly char_poly_p3(int q) { return lin(-1, 1) * quad(2, 1 - q, 1); }

IntPoly char_poly_p2() { return lin(-1, 1) * lin(-2, 1); }

IntPoly char_poly_counts4(int q) { return lin(-1, 1) * char_poly_counts3(q); }

IntPoly char_poly_counts3(int q) { return lin(-1, 1) * quad(1, -(q - 2), 1); }

std::vector<Nat> LinearRecurrence::prefix(unsigned n_max) const {
    std::vector<Nat> out;
    if (n_max < first_index) return out;
    const std::size_t want = n_max - first_index + 1;
    out.reserve(want);
    for (std::size_t j = 0; j < initial.size() && j < want; ++j) out.push_back(initial[j]);
    while (out.size() < want) {
        Int acc = 0;
        for (unsigned t = 0; t < order; ++t) acc += coeffs[t] * out[out.size() - 1 - t];
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<LinearRecurrence> order_reduced_recurrences(int q) {
    validate_q(q);
    const auto counts = counts_by_recurrence(q, 6);
    const auto sums = sums_by_recurrence(q, 6);

    auto slice = [](auto&& rows, unsigned lo, unsigned hi, auto field) {
        std::vector<Nat> v;
        for (unsigned n = lo; n <= hi; ++n) v.push_back(rows[n].*field);
        return v;
    };

    std::vector<LinearRecurrence> out;
    auto add = [&out](std::string name, std::string target, std::vector<Int> coeffs,
                      unsigned first, std::vector<Nat> init) {
        out.push_back({std::move(name), std::move(target),
                       static_cast<unsigned>(coeffs.size()), std::move(coeffs), first,
                       std::move(init)});
    };

    const std::vector<Int> c4{q, -(2 * q - 2), q, -1};
    add("order4.a", "a", c4, 1, slice(counts, 1, 4, &CountVector::a));
    add("order4.b", "b", c4, 1, slice(counts, 1, 4, &CountVector::b));
    add("order4.c", "c", c4, 1, slice(counts, 1, 4, &CountVector::c));
    add("order4.d", "d", c4, 1, slice(counts, 1, 4, &CountVector::d));
    add("order4.e", "e", c4, 1, slice(counts, 1, 4, &CountVector::e));
    add("order4.s", "s", c4, 1, slice(counts, 1, 4, &CountVector::s));

    const std::vector<Int> c3{q - 1, -(q - 1), 1};
    add("order3.a", "a", c3, 1, slice(counts, 1, 3, &CountVector::a));
    add("order3.b", "b", c3, 1, slice(counts, 1, 3, &CountVector::b));

    const IntPoly p6 = char_poly_p6(q);
    std::vector<Int> c6(6);
    for (unsigned t = 0; t < 6; ++t) c6[t] = -p6.c[5 - t];
    add("order6.ahat", "a^", c6, 1, slice(sums, 1, 6, &SumVector::a));
    add("order6.bhat", "b^", c6, 1, slice(sums, 1, 6, &SumVector::b));
    add("order6.chat", "c^", c6, 1, slice(sums, 1, 6, &SumVector::c));
    add("order6.dhat", "d^", c6, 1, slice(sums, 1, 6, &SumVector::d));
    add("order6.ehat", "e^", c6, 1, slice(sums, 1, 6, &SumVector::e));
    add("order6.shat", "s^", c6, 1, slice(sums, 1, 6, &SumVector::s));

    const std::vector<Int> h3{q, -(q + 1), 2};
    add("order3.ahat", "a^", h3, 1, slice(sums, 1, 3, &SumVector::a));
    add("order3.bhat", "b^", h3, 1, slice(sums, 1, 3, &SumVector::b));

    add("order2.chat", "c^", {3, -2}, 1, slice(sums, 1, 2, &SumVector::c));

    add("order3.shat", "s^", {q + 3, -(3 * q + 4), 2 * q + 4}, 0,
        slice(sums, 0, 2, &SumVector::s));

    return out;
}

QuadraticNumber count_alpha1(int q) {
    require_hyperbolic(q);
    const Int d = Int(q) * (q - 4);
    return {Rat(q - 2) / 2, Rat(1) / 2, d};
}

QuadraticNumber count_alpha2(int q) { return count_alpha1(q).conjugate(); }

QuadraticNumber sum_alpha1(int q) {
    require_hyperbolic(q);
    const Int d = Int(q) * q - 2 * q - 7;
    return {Rat(q + 1) / 2, Rat(1) / 2, d};
}

QuadraticNumber sum_alpha2(int q) { return sum_alpha1(q).conjugate(); }

CountVector closed_form_counts(int q, unsigned n) {
    require_hyperbolic(q);
    if (n == 0) return {0, 0, 0, 0, 0, 0, 1};

    const Int d = Int(q) * (q - 4);
    const Rat dd(d);
    const QuadraticNumber a1n = count_alpha1(q).pow(n);

    const QuadraticNumber ca(Rat(2 - q) / 2, (dd + 2) / (2 * dd), d);
    const QuadraticNumber cb(Rat(q - 3) / 2, Rat(1 - q) / (2 * q), d);

    auto fold = [&a1n](const QuadraticNumber& coef) {
        const QuadraticNumber t = coef * a1n;
        return t + t.conjugate();
    };

    CountVector cv;
    cv.n = n;
    cv.a = (fold(ca) + QuadraticNumber::rational(1, d)).to_int("a_n");
    cv.b = (fold(cb) - QuadraticNumber::rational(1, d)).to_int("b_n");
    cv.c = 2 * (Nat(n) - 1);
    cv.e = Int(cv.a) - (Int(n) - 1);
    cv.d = to_nat(-Rat(cv.a) + Rat(cv.b) / (q - 4) + (n - 1), "d_n");
    cv.s = to_nat(Rat(cv.a) + Rat(q - 3) / (q - 4) * Rat(cv.b) + 2 * Rat(n) + 1, "s_n");
    return cv;
}

ShatBetas printed_shat_betas(int q) {
    require_hyperbolic(q);
    const Int d = Int(q) * q - 2 * q - 7;
    const Rat dd(d);
    return {QuadraticNumber(Rat(-1) / 2, (q - 1) / (2 * dd), d),
            QuadraticNumber(Rat(-1) / 2, -((q - 1) / (2 * dd)), d), Rat(2)};
}

ShatBetas solve_shat_betas(int q) {
    require_hyperbolic(q);
    const Int d = Int(q) * q - 2 * q - 7;
    const QuadraticNumber a1 = sum_alpha1(q);
    const QuadraticNumber a2 = sum_alpha2(q);
    const QuadraticNumber two = QuadraticNumber::rational(2, d);
    const auto sums = sums_by_recurrence(q, 3);

    // rows: beta1 a1^n + beta2 a2^n + beta3 2^n = s^_n for n = 1, 2, 3
    std::vector<std::vector<QuadraticNumber>> m(3);
    for (unsigned r = 0; r < 3; ++r) {
        const unsigned n = r + 1;
        m[r] = {a1.pow(n), a2.pow(n), two.pow(n),
                QuadraticNumber::rational(Rat(sums[n].s), d)};
    }

    const QuadraticNumber zero = QuadraticNumber::rational(0, d);
    for (unsigned col = 0; col < 3; ++col) {
        unsigned piv = col;
        while (piv < 3 && m[piv][col] == zero) ++piv;
        if (piv == 3) throw std::domain_error("singular system for betas");
        std::swap(m[col], m[piv]);
        for (unsigned r = 0; r < 3; ++r) {
            if (r == col || m[r][col] == zero) continue;
            const QuadraticNumber f = m[r][col] / m[col][col];
            for (unsigned cc = col; cc < 4; ++cc) m[r][cc] = m[r][cc] - f * m[col][cc];
        }
    }

    ShatBetas b;
    b.beta1 = m[0][3] / m[0][0];
    b.beta2 = m[1][3] / m[1][1];
    const QuadraticNumber b3 = m[2][3] / m[2][2];
    if (!b3.is_rational()) throw std::domain_error("beta3 came out irrational: " + b3.str());
    b.beta3 = b3.rational_part();
    return b;
}

Nat closed_form_shat(int q, unsigned n) {
    const ShatBetas b = solve_shat_betas(q);
    const Int d = b.beta1.disc();
    const QuadraticNumber val = b.beta1 * sum_alpha1(q).pow(n) +
                                b.beta2 * sum_alpha2(q).pow(n) +
                                QuadraticNumber::rational(b.beta3 * pow_nat(2, n), d);
    return val.to_int("s^_n");
}

QuadraticNumber printed_closed_form_d(int q, unsigned n) {
    require_hyperbolic(q);
    const Int d = Int(q) * (q - 4);
    const Rat dd(d);
    const QuadraticNumber coef(Rat(Int(q) * q - 5 * q + 5) / (2 * (q - 4)),
                               -Rat(Int(q) * q - 3 * q - 1) / (2 * dd), d);
    const QuadraticNumber t = coef * count_alpha1(q).pow(n);
    const Rat tail = Rat(n) - Rat(1) / (q - 4) + 1;
    return t + t.conjugate() + QuadraticNumber::rational(tail, d);
}

QuadraticNumber printed_closed_form_s(int q, unsigned n) {
    require_hyperbolic(q);
    const Int d = Int(q) * (q - 4);
    const Rat dd(d);
    const QuadraticNumber coef(Rat(q) / 2, -(1 / (2 * dd)), d);
    const QuadraticNumber t = coef * count_alpha1(q).pow(n);
    const Rat tail = 2 * Rat(n) - Rat(1) / (q - 4) + 1;
    return t + t.conjugate() + QuadraticNumber::rational(tail, d);
}

std::vector<EuclideanCounts> euclidean_counts(unsigned n_max) {
    std::vector<EuclideanCounts> out;
    out.reserve(n_max + 1);
    out.push_back({0, 1, 1, 0, 0});
    Nat c = 0, dd = 0;
    for (unsigned n = 1; n <= n_max; ++n) {
        if (n >= 2) {
            const Nat nc = c + 3;
            dd += c / 3;
            c = nc;
        }
        out.push_back({n, c + dd + 3, pow_nat(3, n), c, dd});
    }
    return out;
}

}  // namespace pp4q
