#pragma once

#include "pp4q/bigint.hpp"
#include "pp4q/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace pp4q {

/// Small dense matrix over exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    explicit RatMatrix(std::size_t n) : n_(n), a_(n * n, Rat(0)) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t size() const { return n_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        RatMatrix r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const Rat& aik = a.at(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < a.n_; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }

    std::vector<Rat> apply(const std::vector<Rat>& v) const {
        std::vector<Rat> r(n_, Rat(0));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (at(i, j) != 0) r[i] += at(i, j) * v[j];
        return r;
    }

    Rat trace() const {
        Rat t = 0;
        for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Rat> a_;
};

/// Monic characteristic polynomial det(xI - A) by the Faddeev-LeVerrier
/// recursion, exact over Q.
inline RatPoly char_poly(const RatMatrix& a) {
    const std::size_t n = a.size();
    RatPoly p;
    p.c.assign(n + 1, Rat(0));
    p.c[n] = 1;
    RatMatrix m = a;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            // m = a * (m + c_{n-k+1} I)
            RatMatrix shifted = m;
            for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += p.c[n - k + 1];
            m = a * shifted;
        }
        p.c[n - k] = -m.trace() / Rat(static_cast<long>(k));
    }
    return p;
}

}  // namespace pp4q
