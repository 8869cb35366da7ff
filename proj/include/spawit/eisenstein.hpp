#pragma once

#include <complex>
#include <ostream>

#include "spawit/rational.hpp"

namespace spawit::exact {

/**
 * EisensteinRational: numbers a + b*omega with a, b rational and omega a
 * primitive cube root of unity (omega^2 = -1 - omega). Closed under the
 * arithmetic and the conjugation needed for the exact witness matrix:
 * conj(a + b*omega) = (a - b) - b*omega. Real exactly when b = 0.
 */
class EisensteinRational {
public:
    EisensteinRational() : a_(0), b_(0) {}
    EisensteinRational(Rational a) : a_(std::move(a)), b_(0) {}
    EisensteinRational(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static EisensteinRational omega() { return {Rational(0), Rational(1)}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_real() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// The rational value of a real element; throws if b != 0.
    const Rational& real_rational() const {
        if (!is_real()) throw std::logic_error("EisensteinRational: not a real element");
        return a_;
    }

    EisensteinRational conj() const { return {a_ - b_, -b_}; }

    EisensteinRational operator-() const { return {-a_, -b_}; }

    EisensteinRational& operator+=(const EisensteinRational& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }

    EisensteinRational& operator-=(const EisensteinRational& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }

    // (a + b w)(c + d w) = ac - bd + (ad + bc - bd) w   using w^2 = -1 - w
    EisensteinRational& operator*=(const EisensteinRational& o) {
        const Rational ac = a_ * o.a_;
        const Rational bd = b_ * o.b_;
        const Rational cross = a_ * o.b_ + b_ * o.a_;
        a_ = ac - bd;
        b_ = cross - bd;
        return *this;
    }

    friend EisensteinRational operator+(EisensteinRational x, const EisensteinRational& y) {
        return x += y;
    }
    friend EisensteinRational operator-(EisensteinRational x, const EisensteinRational& y) {
        return x -= y;
    }
    friend EisensteinRational operator*(EisensteinRational x, const EisensteinRational& y) {
        return x *= y;
    }

    friend bool operator==(const EisensteinRational& x, const EisensteinRational& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const EisensteinRational& x, const EisensteinRational& y) {
        return !(x == y);
    }

    std::complex<double> to_complex() const {
        // omega = (-1/2, sqrt(3)/2)
        static const double half_sqrt3 = std::sqrt(3.0) / 2.0;
        const double bd = to_double(b_);
        return {to_double(a_) - 0.5 * bd, half_sqrt3 * bd};
    }

    friend std::ostream& operator<<(std::ostream& os, const EisensteinRational& e) {
        return os << e.a_ << (e.b_ >= 0 ? "+" : "") << e.b_ << "w";
    }

private:
    Rational a_;
    Rational b_;
};

}  // namespace spawit::exact
