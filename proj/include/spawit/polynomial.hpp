#pragma once

#include <stdexcept>
#include <vector>

#include "spawit/rational.hpp"

namespace spawit::exact {

/**
 * Polynomial over the rationals, coefficients stored ascending by degree.
 * The zero polynomial is an empty coefficient list; otherwise the leading
 * coefficient is nonzero.
 */
class ExactPolynomial {
public:
    ExactPolynomial() = default;

    explicit ExactPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static ExactPolynomial constant(Rational v) { return ExactPolynomial({std::move(v)}); }

    /// x - r
    static ExactPolynomial linear_root(const Rational& r) { return ExactPolynomial({-r, Rational(1)}); }

    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const { return c_.empty(); }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    Rational leading() const {
        if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    ExactPolynomial& operator+=(const ExactPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    ExactPolynomial& operator-=(const ExactPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend ExactPolynomial operator+(ExactPolynomial x, const ExactPolynomial& y) { return x += y; }
    friend ExactPolynomial operator-(ExactPolynomial x, const ExactPolynomial& y) { return x -= y; }

    friend ExactPolynomial operator*(const ExactPolynomial& x, const ExactPolynomial& y) {
        if (x.is_zero() || y.is_zero()) return {};
        std::vector<Rational> out(x.c_.size() + y.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < x.c_.size(); ++i)
            for (std::size_t j = 0; j < y.c_.size(); ++j) out[i + j] += x.c_[i] * y.c_[j];
        return ExactPolynomial(std::move(out));
    }

    ExactPolynomial pow(unsigned e) const {
        ExactPolynomial acc = constant(Rational(1));
        for (unsigned i = 0; i < e; ++i) acc = acc * (*this);
        return acc;
    }

    friend bool operator==(const ExactPolynomial& x, const ExactPolynomial& y) {
        return x.c_ == y.c_;
    }
    friend bool operator!=(const ExactPolynomial& x, const ExactPolynomial& y) {
        return !(x == y);
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

}  // namespace spawit::exact
