#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spawit/complex_matrix.hpp"
#include "spawit/weyl.hpp"

namespace spawit {

/**
 * Parameters of the one-parameter Bell-diagonal family
 *
 *     B_gamma = (1-gamma)/2 P_10 + (1-gamma)/2 P_20 + gamma P_12 .
 *
 * The gamma component rides on Bell index (1,2): that placement is what
 * reproduces the family's 9x9 matrix form 3*PT(B) with entries
 * {1-gamma, gamma, omega*gamma, conj(omega)*gamma, -(1-gamma)/2}
 * asserted entry-wise in the tests.
 */
struct BellFamilyParams {
    double gamma = 0.5;

    std::array<std::pair<WeylIndex, double>, 3> weights() const {
        return {{{WeylIndex{1, 0}, (1.0 - gamma) / 2.0},
                 {WeylIndex{2, 0}, (1.0 - gamma) / 2.0},
                 {WeylIndex{1, 2}, gamma}}};
    }
};

inline void validate(const BellFamilyParams& params) {
    if (!(params.gamma >= 0.0 && params.gamma <= 1.0))
        throw std::invalid_argument("BellFamilyParams: gamma must lie in [0,1]");
}

/// B_gamma: PSD, Hermitian, trace 1 for gamma in [0,1].
inline ComplexMatrix build_b(const BellFamilyParams& params) {
    validate(params);
    ComplexMatrix b = ComplexMatrix::bipartite_zero(3, 3);
    b.hermitian = true;
    for (const auto& [idx, w] : params.weights()) b += bell_projector(idx) * w;
    return b;
}

/// W_gamma = 3 * partial_transpose(B_gamma): Hermitian, trace 3.
inline ComplexMatrix build_witness(const BellFamilyParams& params) {
    return partial_transpose(build_b(params)) * 3.0;
}

struct SpectrumCheck {
    double lambda_min = 0.0;
    int degeneracy = 0;
};

/// Smallest eigenvalue and the number of eigenvalues within `cluster_tol`
/// of it. For W_gamma on gamma in (0,1): lambda_min < 0 with degeneracy 3.
inline SpectrumCheck witness_spectrum_check(const ComplexMatrix& w, double cluster_tol = 1e-9) {
    const Spectrum spec = hermitian_eigensystem(w);
    SpectrumCheck out;
    out.lambda_min = spec.eigenvalues.front();
    for (double ev : spec.eigenvalues)
        if (ev - out.lambda_min <= cluster_tol) ++out.degeneracy;
    return out;
}

/**
 * Result of the structural physical approximation: the largest admissible
 * mixing weight p* with the maximally mixed state, the resulting state,
 * and the minimum eigenvalue of its partial transpose.
 */
struct SpaResult {
    double gamma = std::numeric_limits<double>::quiet_NaN();
    double lambda_min = 0.0;   // smallest eigenvalue of the trace-3 witness
    double p_star = 0.0;       // in (0,1)
    ComplexMatrix spa_state;   // trace 1, PSD
    double ppt_min_eig = 0.0;  // min eigenvalue of PT(spa_state)
};

/// Min eigenvalue of the partial transpose; >= -1e-12 certifies PPT.
inline double ppt_check(const ComplexMatrix& state) {
    return hermitian_eigensystem(partial_transpose(state)).eigenvalues.front();
}

/**
 * Structural physical approximation of a trace-3 witness `w`:
 * with What = w/3, the mixture p*What + (1-p)/D * I stays PSD up to
 * p* = 1/(1 - 3*lambda_min), and the resulting state coincides with
 * (w - lambda_min*I)/Tr(w - lambda_min*I); both routes are computed and
 * checked against each other.
 */
inline SpaResult spa(const ComplexMatrix& w,
                     double gamma = std::numeric_limits<double>::quiet_NaN()) {
    if (!w.is_square() || !w.has_bipartite_dims())
        throw std::invalid_argument("spa: witness must be square with bipartite dims");
    if (std::abs(w.trace().real() - 3.0) > 1e-9 || std::abs(w.trace().imag()) > 1e-9)
        throw std::invalid_argument("spa: family convention requires trace 3");

    const std::size_t n = w.rows();
    const Spectrum spec = hermitian_eigensystem(w);
    const double lambda_min = spec.eigenvalues.front();
    if (lambda_min >= 0.0)
        throw std::invalid_argument("spa: operator has no negative eigenvalue (not a witness)");

    SpaResult out;
    out.gamma = gamma;
    out.lambda_min = lambda_min;
    out.p_star = 1.0 / (1.0 - 3.0 * lambda_min);

    ComplexMatrix state = w * (out.p_star / 3.0);
    const double mixed_weight = (1.0 - out.p_star) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) state(i, i) += mixed_weight;
    state.hermitian = true;

    ComplexMatrix shifted = w;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda_min;
    const double tr_q = shifted.trace().real();
    shifted *= 1.0 / tr_q;
    if (state.max_abs_diff(shifted) > 1e-12)
        throw std::runtime_error("spa: mixture and shifted-normalized forms disagree");

    out.spa_state = state;
    out.ppt_min_eig = ppt_check(state);
    return out;
}

}  // namespace spawit
