#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "spawit/complex_matrix.hpp"
#include "spawit/eisenstein.hpp"
#include "spawit/polynomial.hpp"
#include "spawit/rational.hpp"

namespace spawit::exact {

/// Dense square matrix over the Eisenstein rationals.
class ExactMatrix {
public:
    explicit ExactMatrix(std::size_t n) : n_(n), e_(n * n) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = EisensteinRational(Rational(1));
        return m;
    }

    std::size_t size() const { return n_; }

    EisensteinRational& operator()(std::size_t r, std::size_t c) { return e_[r * n_ + c]; }
    const EisensteinRational& operator()(std::size_t r, std::size_t c) const {
        return e_[r * n_ + c];
    }

    EisensteinRational trace() const {
        EisensteinRational t;
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_hermitian() const {
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c)
                if ((*this)(r, c) != (*this)(c, r).conj()) return false;
        return true;
    }

    ExactMatrix& add_scalar_to_diagonal(const Rational& s) {
        for (std::size_t i = 0; i < n_; ++i) (*this)(i, i) += EisensteinRational(s);
        return *this;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("ExactMatrix: size mismatch");
        ExactMatrix out(a.n_);
        for (std::size_t r = 0; r < a.n_; ++r)
            for (std::size_t k = 0; k < a.n_; ++k) {
                if (a(r, k).is_zero()) continue;
                for (std::size_t c = 0; c < a.n_; ++c) out(r, c) += a(r, k) * b(k, c);
            }
        return out;
    }

    spawit::ComplexMatrix to_complex_matrix() const {
        spawit::ComplexMatrix m(n_, n_);
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c) m(r, c) = (*this)(r, c).to_complex();
        return m;
    }

private:
    std::size_t n_;
    std::vector<EisensteinRational> e_;
};

/**
 * The family witness at rational gamma, written entry-by-entry over the
 * Eisenstein rationals. Same layout the numeric path produces via
 * 3 * PT(B_gamma); the agreement of the two routes is a test.
 */
inline ExactMatrix exact_witness(const Rational& gamma) {
    if (!(gamma > 0 && gamma < 1))
        throw std::invalid_argument("exact_witness: gamma must lie in (0,1)");
    const Rational one_minus = Rational(1) - gamma;
    const EisensteinRational g{gamma};
    const EisensteinRational diag_a{one_minus};
    const EisensteinRational off{-one_minus / 2};
    const EisensteinRational wg = EisensteinRational::omega() * g;
    const EisensteinRational wcg = EisensteinRational::omega().conj() * g;

    ExactMatrix w(9);
    for (std::size_t i : {0u, 4u, 8u}) w(i, i) = diag_a;
    for (std::size_t i : {1u, 5u, 6u}) w(i, i) = g;
    const std::pair<std::size_t, std::size_t> off_at[] = {{1, 3}, {2, 6}, {5, 7}};
    for (auto [r, c] : off_at) {
        w(r, c) = off;
        w(c, r) = off;
    }
    const std::pair<std::size_t, std::size_t> phase_at[] = {{0, 7}, {4, 2}, {8, 3}};
    for (auto [r, c] : phase_at) {
        w(r, c) = wg;
        w(c, r) = wcg;
    }
    return w;
}

/**
 * Characteristic polynomial det(lambda*I - M) by the Faddeev-LeVerrier
 * recursion over the exact ring. For Hermitian input every coefficient is
 * real; this is asserted and the result returned over the rationals.
 */
inline ExactPolynomial char_poly(const ExactMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("char_poly: empty matrix");
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = Rational(1);

    auto require_real = [](const EisensteinRational& v) -> Rational {
        if (!v.is_real())
            throw std::logic_error("char_poly: non-real coefficient from Hermitian input");
        return v.real_rational();
    };

    ExactMatrix acc = m;
    coeffs[n - 1] = -require_real(acc.trace());
    for (std::size_t k = 2; k <= n; ++k) {
        acc.add_scalar_to_diagonal(coeffs[n - k + 1]);
        acc = m * acc;
        coeffs[n - k] = -require_real(acc.trace()) / Rational(static_cast<long>(k));
    }
    return ExactPolynomial(std::move(coeffs));
}

/// The cubic factor lambda^3 - lambda^2 - (25/64)lambda + 109/256 whose
/// cube is the characteristic polynomial of the gamma = 3/4 witness.
inline ExactPolynomial witness_cubic_three_quarters() {
    return ExactPolynomial(
        {make_rational(109, 256), make_rational(-25, 64), Rational(-1), Rational(1)});
}

struct CertificateReport {
    ExactPolynomial char_poly;     // degree 9
    ExactPolynomial cubic_factor;  // degree 3
    Rational lambda_prime;
    Rational p_at_lambda_prime;  // exact value of P(lambda') = -cubic(lambda')
    Rational lambda0_lo;
    Rational lambda0_hi;
    bool verdict = false;
    std::string failing_step;
    std::vector<std::string> narrative;
};

namespace detail {
inline std::string rat_str(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}
}  // namespace detail

/**
 * Exact-arithmetic certificate that the gamma = 3/4 SPA state is an
 * entangled PPT state. Every inequality below is decided over the
 * rationals; the only analytic inputs are square-root brackets that are
 * re-verified by exact squaring. The test hook `lambda_prime` replaces
 * the default probe -64191/100000.
 */
inline CertificateReport certify_gamma_three_quarters(
    const Rational& lambda_prime = make_rational(-64191, 100000)) {
    CertificateReport rep;
    rep.lambda_prime = lambda_prime;
    rep.cubic_factor = witness_cubic_three_quarters();
    const ExactPolynomial& q = rep.cubic_factor;
    auto fail = [&](const std::string& step, const std::string& msg) -> CertificateReport& {
        rep.verdict = false;
        rep.failing_step = step;
        rep.narrative.push_back("FAILED " + step + ": " + msg);
        return rep;
    };

    // (1) characteristic polynomial is exactly the cube of the cubic factor
    rep.char_poly = char_poly(exact_witness(make_rational(3, 4)));
    if (rep.char_poly != q.pow(3)) {
        fail("step1-charpoly", "char poly of W_{3/4} is not the cube of the cubic factor");
        return rep;
    }
    rep.narrative.push_back(
        "step1: det(xI - W_{3/4}) == (x^3 - x^2 - 25/64 x + 109/256)^3 exactly; below, P(x) "
        "denotes the negated cubic factor");

    // (2) P(lambda') > 0 exactly
    rep.p_at_lambda_prime = -q.eval(lambda_prime);
    if (!(rep.p_at_lambda_prime > 0)) {
        fail("step2-sign", "P(lambda') = " + detail::rat_str(rep.p_at_lambda_prime) + " is not > 0");
        return rep;
    }
    rep.narrative.push_back("step2: P(lambda') = " + detail::rat_str(rep.p_at_lambda_prime) +
                            " > 0 at lambda' = " + detail::rat_str(lambda_prime));

    // (3) the cubic has exactly one negative root, and it exceeds lambda'
    {
        const Rational probes[] = {Rational(-1), lambda_prime, Rational(0), Rational(1),
                                   Rational(2)};
        std::string signs = "step3: sign probes of P:";
        for (const Rational& x : probes) {
            const Rational v = -q.eval(x);
            signs += " P(" + detail::rat_str(x) + ")" + (v > 0 ? ">0" : (v < 0 ? "<0" : "=0"));
        }
        rep.narrative.push_back(signs);

        const Rational sum_of_roots = -q.coefficient(2);   // = 1
        const Rational product_of_roots = -q.coefficient(0);  // = -109/256
        if (!(sum_of_roots > 0 && product_of_roots < 0)) {
            fail("step3-root-count", "root bookkeeping does not isolate one negative root");
            return rep;
        }
        rep.narrative.push_back(
            "step3: product of roots = " + detail::rat_str(product_of_roots) +
            " < 0 forces an odd number of negative roots; sum = " + detail::rat_str(sum_of_roots) +
            " > 0 rules out three, so exactly one root is negative");
        if (!(q.eval(lambda_prime) < 0 && q.eval(Rational(0)) > 0)) {
            fail("step3-bracket", "no sign change of the cubic on (lambda', 0)");
            return rep;
        }
        rep.narrative.push_back(
            "step3: P(lambda') > 0 and P(0) < 0 place a root inside (lambda', 0); a root there is "
            "negative, hence it is the unique negative root: lambda_min > lambda'");
    }

    // (4) lambda' > lambda0 = 1/8 - (sqrt7 + sqrt43)/12, via exact sqrt brackets
    {
        const Rational prec = make_rational(1, 1000000000000L);  // 1e-12
        const SqrtBracket s7 = sqrt_bracket(Rational(7), prec);
        const SqrtBracket s43 = sqrt_bracket(Rational(43), prec);
        rep.lambda0_lo = make_rational(1, 8) - (s7.hi + s43.hi) / 12;
        rep.lambda0_hi = make_rational(1, 8) - (s7.lo + s43.lo) / 12;
        // lambda' > lambda0  <=>  sqrt7 + sqrt43 > 3/2 - 12*lambda'
        const Rational rhs = make_rational(3, 2) - Rational(12) * lambda_prime;
        if (!(s7.lo + s43.lo > rhs)) {
            fail("step4-lambda0", "could not certify lambda' > lambda0 (sqrt lower bounds " +
                                      detail::rat_str(s7.lo + s43.lo) + " vs " +
                                      detail::rat_str(rhs) + ")");
            return rep;
        }
        rep.narrative.push_back(
            "step4: sqrt(7) + sqrt(43) > 3/2 - 12*lambda' certified with bracket width <= 1e-12, "
            "hence lambda' > lambda0, with lambda0 in [" + detail::rat_str(rep.lambda0_lo) + ", " +
            detail::rat_str(rep.lambda0_hi) + "]");
    }

    // (5) chain the inequalities
    rep.narrative.push_back(
        "step5: lambda_min > lambda' > lambda0, therefore ||R(rho_{3/4})||_1 > 1: the SPA state "
        "is entangled; it is PPT by construction since PT(W) = 3*B >= 0");
    rep.verdict = true;
    return rep;
}

}  // namespace spawit::exact
