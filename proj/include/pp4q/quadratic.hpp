#pragma once

#include "pp4q/bigint.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace pp4q {

/// Exact element x + y*sqrt(disc) of the real quadratic field Q(sqrt(disc)),
/// disc a positive non-square integer. Both discriminant regimes of the
/// closed forms live here: disc = q(q-4) for the vertex counts and
/// disc = q^2 - 2q - 7 for the value sums.
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(Rat rational_part, Rat surd_part, Int disc)
        : x_(std::move(rational_part)), y_(std::move(surd_part)), d_(std::move(disc)) {
        if (d_ <= 0) throw std::invalid_argument("QuadraticNumber: disc must be positive");
    }

    static QuadraticNumber rational(Rat r, Int disc) {
        return QuadraticNumber(std::move(r), 0, std::move(disc));
    }
    static QuadraticNumber sqrt_of(Int disc) { return QuadraticNumber(0, 1, disc); }

    const Rat& rational_part() const { return x_; }
    const Rat& surd_part() const { return y_; }
    const Int& disc() const { return d_; }

    bool is_rational() const { return y_ == 0; }

    /// Exact integer extraction; throws if a surd survives or the value is
    /// not an integer. `what` names the value in the error message.
    Int to_int(const char* what = "quadratic value") const {
        if (!is_rational())
            throw std::domain_error(std::string(what) + ": surd part did not cancel (" + str() + ")");
        if (boost::multiprecision::denominator(x_) != 1)
            throw std::domain_error(std::string(what) + ": not an integer (" + str() + ")");
        return boost::multiprecision::numerator(x_);
    }

    QuadraticNumber conjugate() const { return QuadraticNumber(x_, -y_, d_); }

    QuadraticNumber operator-() const { return QuadraticNumber(-x_, -y_, d_); }

    friend QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
        check_disc(a, b);
        return QuadraticNumber(a.x_ + b.x_, a.y_ + b.y_, a.d_);
    }
    friend QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b) {
        check_disc(a, b);
        return QuadraticNumber(a.x_ - b.x_, a.y_ - b.y_, a.d_);
    }
    friend QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b) {
        check_disc(a, b);
        const Rat d(a.d_);
        return QuadraticNumber(a.x_ * b.x_ + a.y_ * b.y_ * d, a.x_ * b.y_ + a.y_ * b.x_, a.d_);
    }
    friend QuadraticNumber operator/(const QuadraticNumber& a, const QuadraticNumber& b) {
        check_disc(a, b);
        const Rat d(a.d_);
        const Rat norm = b.x_ * b.x_ - b.y_ * b.y_ * d;  // b * conj(b)
        if (norm == 0) throw std::domain_error("QuadraticNumber: division by zero");
        return a * QuadraticNumber(b.x_ / norm, -b.y_ / norm, a.d_);
    }

    QuadraticNumber pow(unsigned n) const {
        QuadraticNumber r = rational(1, d_), b = *this;
        while (n) {
            if (n & 1u) r = r * b;
            b = b * b;
            n >>= 1u;
        }
        return r;
    }

    friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
        return a.d_ == b.d_ && a.x_ == b.x_ && a.y_ == b.y_;
    }

    std::string str() const {
        if (y_ == 0) return dec(x_);
        std::string s = dec(x_);
        s += y_ < 0 ? " - " : " + ";
        const Rat ay = y_ < 0 ? Rat(-y_) : y_;
        if (ay != 1) s += dec(ay) + "*";
        s += "sqrt(" + dec(d_) + ")";
        return s;
    }

private:
    static void check_disc(const QuadraticNumber& a, const QuadraticNumber& b) {
        if (a.d_ != b.d_)
            throw std::invalid_argument("QuadraticNumber: mixed discriminants " + dec(a.d_) +
                                        " vs " + dec(b.d_));
    }

    Rat x_{0};
    Rat y_{0};
    Int d_{1};
};

}  // namespace pp4q
