#pragma once

#include <cmath>
#include <vector>

#include "spawit/complex_matrix.hpp"
#include "spawit/witness.hpp"

namespace spawit {

/// Entries of the block structure of R(Q_gamma) R(Q_gamma)^dagger,
/// Q_gamma = W_gamma - lambda_min * I.
struct BlockCoefficients {
    double d1 = 0.0;
    double d2 = 0.0;
    double q1 = 0.0;
    double q2 = 0.0;
};

inline BlockCoefficients block_coefficients(double gamma, double lambda_min) {
    const double g = gamma, lm = lambda_min;
    BlockCoefficients c;
    c.d1 = (g + lm - 1.0) * (g + lm - 1.0) + lm * lm + (g - lm) * (g - lm);
    c.d2 = g * g + (g - 1.0) * (g - 1.0) / 4.0;
    c.q1 = lm * (g + lm - 1.0) - (g - lm) * (g + 2.0 * lm - 1.0);
    c.q2 = g * (g - 1.0) / 2.0;
    return c;
}

/**
 * Closed-form trace norm of R(Q_gamma), from the block eigenvalues
 * (1-3*lm)^2 single and 3g^2-3g+1 double, plus twice (3g-1)^2/4 single
 * and (3g^2+1)/4 double. Singular values are nonnegative, so the
 * (3g-1) term enters with an absolute value (only visible for g < 1/3).
 */
inline double analytic_trace_norm(double gamma, double lambda_min) {
    const double g = gamma;
    return std::abs(3.0 * g - 1.0) + (1.0 - 3.0 * lambda_min) +
           2.0 * std::sqrt(3.0 * g * g - 3.0 * g + 1.0) + 2.0 * std::sqrt(3.0 * g * g + 1.0);
}

/// Threshold on lambda_min above which ||R(Q_gamma)||_1 > Tr Q_gamma.
/// This is the g >= 1/3 branch; see realignment tests for the other one.
inline double lambda0_threshold(double gamma) {
    const double g = gamma;
    return (1.0 - g) / 2.0 - std::sqrt(3.0 * g * g - 3.0 * g + 1.0) / 3.0 -
           std::sqrt(3.0 * g * g + 1.0) / 3.0;
}

/**
 * Realignment (CCNR) verdict for an SPA state. margin > 0 certifies
 * entanglement; margin <= 0 means "undetected", never "separable".
 */
struct RealignmentReport {
    double gamma = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> singular_values;  // descending
    double trace_norm_numeric = 0.0;
    double trace_norm_analytic = std::numeric_limits<double>::quiet_NaN();
    double margin = 0.0;  // ||R(state)||_1 - 1
    bool entangled_flag = false;
};

inline RealignmentReport entanglement_margin(const SpaResult& spa_result) {
    RealignmentReport rep;
    rep.gamma = spa_result.gamma;
    rep.singular_values = singular_values(realign(spa_result.spa_state));
    rep.trace_norm_numeric = 0.0;
    for (double sv : rep.singular_values) rep.trace_norm_numeric += sv;
    if (!std::isnan(spa_result.gamma)) {
        // state = Q/TrQ with Tr Q = 3(1 - 3*lambda_min), so the analytic
        // norm rescales by the same factor
        const double tr_q = 3.0 * (1.0 - 3.0 * spa_result.lambda_min);
        rep.trace_norm_analytic =
            analytic_trace_norm(spa_result.gamma, spa_result.lambda_min) / tr_q;
    }
    rep.margin = rep.trace_norm_numeric - 1.0;
    rep.entangled_flag = rep.margin > 0.0;
    return rep;
}

}  // namespace spawit
