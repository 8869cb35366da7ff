#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "spawit/complex_matrix.hpp"
#include "spawit/weyl.hpp"
#include "spawit/witness.hpp"

namespace spawit {

/**
 * Product vector |x (x) y> with y_k = 1/x_k that is orthogonal to the
 * three Bell vectors carrying the family, Omega_10, Omega_20 and Omega_12.
 * The first two orthogonality conditions force x_k*y_k to share a common
 * value (gauged to 1, hence y = 1/x); the third reduces to
 *
 *     omega^2 x0/x1 + omega x1/x2 + x2/x0 = 0 ,
 *
 * a quadratic in x2 once x0 = 1 and x1 = t are fixed:
 *
 *     t x2^2 + omega^2 x2 + omega t^2 = 0 .
 */
struct ConstraintSolution {
    std::array<cplx, 3> x{};  // x[0] fixed to 1 (projective gauge)
    std::array<cplx, 3> y{};  // y[k] = 1/x[k]
    cplx t{};                 // the free coordinate x[1]
};

namespace detail {
inline cplx omega() { return root_of_unity_power(1, 3); }
}  // namespace detail

/// Discriminant of the x2 quadratic, zero exactly when t^3 = 1/4.
inline cplx constraint_discriminant(cplx t) {
    return detail::omega() * (1.0 - 4.0 * t * t * t);
}

inline std::vector<ConstraintSolution> solve_constraint(cplx t) {
    if (std::abs(t) < 1e-12)
        throw std::invalid_argument("solve_constraint: t = 0 leaves y undefined");
    const cplx w = detail::omega();
    const cplx a = t;
    const cplx b = w * w;
    const cplx c = w * t * t;
    const cplx disc = b * b - 4.0 * a * c;
    const cplx sq = std::sqrt(disc);
    const double disc_scale = std::max(1.0, std::abs(4.0 * a * c));

    std::vector<cplx> roots;
    roots.push_back((-b + sq) / (2.0 * a));
    if (std::abs(disc) > 1e-12 * disc_scale)
        roots.push_back((-b - sq) / (2.0 * a));  // double root returned once

    std::vector<ConstraintSolution> sols;
    for (const cplx& x2 : roots) {
        if (std::abs(x2) < 1e-12) continue;  // cannot happen for t != 0; kept as a guard
        ConstraintSolution s;
        s.t = t;
        s.x = {cplx(1.0, 0.0), t, x2};
        for (int k = 0; k < 3; ++k) s.y[k] = 1.0 / s.x[k];
        sols.push_back(s);
    }
    return sols;
}

inline std::vector<cplx> to_vec(const std::array<cplx, 3>& a) {
    return {a[0], a[1], a[2]};
}

/// Normalized |x (x) y>.
inline std::vector<cplx> product_vector(const ConstraintSolution& s) {
    return vec_normalized(vec_kron(to_vec(s.x), to_vec(s.y)));
}

/// Normalized |x (x) y*>.
inline std::vector<cplx> product_vector_conj(const ConstraintSolution& s) {
    std::array<cplx, 3> yc;
    for (int k = 0; k < 3; ++k) yc[k] = std::conj(s.y[k]);
    return vec_normalized(vec_kron(to_vec(s.x), to_vec(yc)));
}

/**
 * Parameter sampler: `count` points t split over two concentric circles of
 * radius `base_radius` and 1.6*base_radius. A single circle only spans an
 * 8-dimensional slice of the zero set; two radii recover the full span.
 * Points falling within 1e-6 of the degenerate set {t=0} u {t^3 = 1/4}
 * are nudged in angle.
 */
inline std::vector<cplx> sample_parameters(int count, double base_radius, unsigned seed) {
    if (count < 1) throw std::invalid_argument("sample_parameters: count must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double phase0 = unif(rng);

    std::vector<cplx> ts;
    ts.reserve(count);
    const int n1 = count / 2;
    const int n2 = count - n1;
    auto emit_circle = [&](int n, double radius, double offset) {
        for (int j = 0; j < n; ++j) {
            double angle = 2.0 * std::numbers::pi * (j + phase0 + offset) / n;
            cplx t = std::polar(radius, angle);
            int guard = 0;
            while ((std::abs(t) < 1e-6 || std::abs(t * t * t - cplx(0.25, 0.0)) < 1e-6) &&
                   guard++ < 32) {
                angle += 1e-3;
                t = std::polar(radius, angle);
            }
            ts.push_back(t);
        }
    };
    emit_circle(n1, base_radius, 0.0);
    emit_circle(n2, 1.6 * base_radius, 0.5);
    return ts;
}

/**
 * Numeric span certificate of a vector family: singular values of the
 * stacked matrix, with rank counted at threshold 1e-8 * sigma_max.
 */
struct SpanCertificate {
    std::vector<std::vector<cplx>> vector_set;
    std::vector<double> singular_values;  // descending
    int numeric_rank = 0;
    double threshold = 0.0;
};

inline SpanCertificate span_rank(const std::vector<std::vector<cplx>>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("span_rank: empty vector set");
    const std::size_t dim = vectors.front().size();
    ComplexMatrix stacked(vectors.size(), dim);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != dim)
            throw std::invalid_argument("span_rank: inconsistent vector dimensions");
        for (std::size_t c = 0; c < dim; ++c) stacked(r, c) = vectors[r][c];
    }
    SpanCertificate cert;
    cert.vector_set = vectors;
    cert.singular_values = singular_values(stacked);
    cert.threshold = 1e-8 * cert.singular_values.front();
    for (double sv : cert.singular_values)
        if (sv > cert.threshold) ++cert.numeric_rank;
    return cert;
}

// ---- see-saw product-overlap maximization ---------------------------------

namespace detail {

inline std::vector<cplx> random_unit_vector(std::mt19937_64& rng, std::size_t dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> v(dim);
    for (cplx& x : v) x = cplx(gauss(rng), gauss(rng));
    return vec_normalized(v);
}

inline ComplexMatrix contract_second(const ComplexMatrix& op, const std::vector<cplx>& y) {
    const std::size_t da = op.dim_a(), db = op.dim_b();
    ComplexMatrix k(da, da);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t kk = 0; kk < da; ++kk) {
            cplx s = 0.0;
            for (std::size_t j = 0; j < db; ++j)
                for (std::size_t l = 0; l < db; ++l)
                    s += std::conj(y[j]) * op(i * db + j, kk * db + l) * y[l];
            k(i, kk) = s;
        }
    k.hermitian = true;
    return k;
}

inline ComplexMatrix contract_first(const ComplexMatrix& op, const std::vector<cplx>& x) {
    const std::size_t da = op.dim_a(), db = op.dim_b();
    ComplexMatrix k(db, db);
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t l = 0; l < db; ++l) {
            cplx s = 0.0;
            for (std::size_t i = 0; i < da; ++i)
                for (std::size_t kk = 0; kk < da; ++kk)
                    s += std::conj(x[i]) * op(i * db + j, kk * db + l) * x[kk];
            k(j, l) = s;
        }
    k.hermitian = true;
    return k;
}

inline std::vector<cplx> top_eigenvector(const ComplexMatrix& k, double& top_value) {
    const Spectrum spec = hermitian_eigensystem(k, 1e-10 * std::max(1.0, k.max_abs()));
    const std::size_t n = k.rows();
    std::vector<cplx> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = spec.eigenvectors(r, n - 1);
    top_value = spec.eigenvalues.back();
    return v;
}

}  // namespace detail

/**
 * One see-saw run from the given product start: alternately contract the
 * operator with y and move x to the top eigenvector, then vice versa.
 * Each half-step solves its subproblem exactly, so the recorded objective
 * sequence is nondecreasing up to roundoff.
 */
inline std::vector<double> seesaw_trajectory(const ComplexMatrix& projector,
                                             std::vector<cplx> x, std::vector<cplx> y,
                                             int iters) {
    std::vector<double> values;
    values.reserve(iters);
    double val = 0.0;
    for (int it = 0; it < iters; ++it) {
        x = detail::top_eigenvector(detail::contract_second(projector, y), val);
        y = detail::top_eigenvector(detail::contract_first(projector, x), val);
        values.push_back(val);
    }
    return values;
}

/**
 * Best product overlap max <x(x)y| P |x(x)y> found by see-saw over
 * `restarts` random product starts. A value below 1 - delta is numerical
 * evidence (a lower-bound certificate only) that the range of P contains
 * no product vector.
 */
inline double ces_overlap(const ComplexMatrix& projector, int restarts, int iters,
                          unsigned seed = 20240901u) {
    if (!projector.has_bipartite_dims())
        throw std::invalid_argument("ces_overlap: projector needs bipartite dims");
    if ((projector * projector).max_abs_diff(projector) > 1e-10)
        throw std::invalid_argument("ces_overlap: input is not idempotent");
    if (!projector.is_hermitian(1e-10))
        throw std::invalid_argument("ces_overlap: input is not Hermitian");
    if (restarts < 8 || iters < 200)
        throw std::invalid_argument("ces_overlap: need restarts >= 8 and iters >= 200");

    std::mt19937_64 rng(seed);
    double best = 0.0;
    for (int r = 0; r < restarts; ++r) {
        std::vector<cplx> x = detail::random_unit_vector(rng, projector.dim_a());
        std::vector<cplx> y = detail::random_unit_vector(rng, projector.dim_b());
        const std::vector<double> traj = seesaw_trajectory(projector, x, y, iters);
        best = std::max(best, traj.back());
    }
    return best;
}

/// Projector onto the span of pairwise orthonormal Bell vectors.
inline ComplexMatrix bell_span_projector(const std::vector<WeylIndex>& indices) {
    if (indices.empty()) throw std::invalid_argument("bell_span_projector: empty index list");
    ComplexMatrix p = bell_projector(indices.front());
    for (std::size_t i = 1; i < indices.size(); ++i) p += bell_projector(indices[i]);
    return p;
}

}  // namespace spawit
