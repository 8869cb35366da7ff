#pragma once

#include <numbers>
#include <stdexcept>

#include "spawit/complex_matrix.hpp"

namespace spawit {

/// Index (k,l) of a Weyl operator on C^d, both taken mod d.
struct WeylIndex {
    int k = 0;
    int l = 0;
    int d = 3;
};

inline void validate(const WeylIndex& idx) {
    if (idx.d < 2) throw std::invalid_argument("WeylIndex: dimension must be >= 2");
    if (idx.k < 0 || idx.k >= idx.d || idx.l < 0 || idx.l >= idx.d)
        throw std::invalid_argument("WeylIndex: k,l must lie in [0,d)");
}

/// omega^e for omega = exp(2*pi*i/d), evaluated at the reduced angle so
/// that powers never accumulate drift (omega^2 and conj(omega) agree).
inline cplx root_of_unity_power(int e, int d) {
    int r = e % d;
    if (r < 0) r += d;
    if (r == 0) return cplx(1.0, 0.0);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d);
    return cplx(std::cos(angle), std::sin(angle));
}

/// Weyl operator: W_{kl} |i> = omega^{k(i-l)} |i-l>, indices mod d. Unitary.
inline ComplexMatrix weyl_operator(const WeylIndex& idx) {
    validate(idx);
    const int d = idx.d;
    ComplexMatrix w(d, d);
    for (int i = 0; i < d; ++i) {
        const int row = ((i - idx.l) % d + d) % d;
        w(row, i) = root_of_unity_power(idx.k * (i - idx.l), d);
    }
    return w;
}

/// Maximally entangled Bell-basis vector with its index.
struct BellVector {
    WeylIndex index;
    std::vector<cplx> amplitudes;  // length d*d, unit norm
};

/// |Omega_kl> = (I (x) W_kl) |Omega_00> with |Omega_00> = sum_i |ii>/sqrt(d).
inline BellVector bell_vector(const WeylIndex& idx) {
    validate(idx);
    const int d = idx.d;
    BellVector bv;
    bv.index = idx;
    bv.amplitudes.assign(static_cast<std::size_t>(d) * d, cplx(0.0, 0.0));
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) {
        const int j = ((i - idx.l) % d + d) % d;
        bv.amplitudes[static_cast<std::size_t>(i) * d + j] =
            inv_sqrt_d * root_of_unity_power(idx.k * (i - idx.l), d);
    }
    return bv;
}

/// Rank-1 projector P_kl = |Omega_kl><Omega_kl| with the bipartite tag set.
inline ComplexMatrix bell_projector(const WeylIndex& idx) {
    const BellVector bv = bell_vector(idx);
    ComplexMatrix p = outer_product(bv.amplitudes, bv.amplitudes);
    p.set_bipartite_dims(idx.d, idx.d);
    p.hermitian = true;
    return p;
}

}  // namespace spawit
