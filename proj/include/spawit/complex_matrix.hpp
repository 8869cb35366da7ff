#pragma once

#include <complex>
#include <vector>
#include <stdexcept>
#include <limits>
#include <string>
#include <cmath>
#include <cstddef>
#include <algorithm>
#include <utility>

namespace spawit {

using cplx = std::complex<double>;

/**
 * Dense complex matrix, row-major. A square matrix may carry a bipartite
 * tag (dim_a, dim_b) with the composite index (i,j) -> i*dim_b + j; the
 * tensor-factor operations (partial transpose, realignment) require it.
 * The `hermitian` flag is a builder hint: operations that provably
 * preserve Hermiticity propagate it, consumers re-check numerically.
 */
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        m.hermitian = true;
        return m;
    }

    /// Zero square matrix of size (dim_a*dim_b) with the bipartite tag set.
    static ComplexMatrix bipartite_zero(std::size_t dim_a, std::size_t dim_b) {
        ComplexMatrix m(dim_a * dim_b, dim_a * dim_b);
        m.dim_a_ = dim_a;
        m.dim_b_ = dim_b;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t dim_a() const { return dim_a_; }
    std::size_t dim_b() const { return dim_b_; }
    bool is_square() const { return rows_ == cols_; }
    bool has_bipartite_dims() const { return dim_a_ > 0 && dim_b_ > 0; }

    void set_bipartite_dims(std::size_t dim_a, std::size_t dim_b) {
        if (!is_square() || dim_a * dim_b != rows_)
            throw std::invalid_argument("bipartite dims do not match matrix size");
        dim_a_ = dim_a;
        dim_b_ = dim_b;
    }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<cplx>& data() const { return data_; }
    std::vector<cplx>& data() { return data_; }

    /// Max |M[r,c] - conj(M[c,r])| over all entries.
    double hermiticity_defect() const {
        if (!is_square()) return std::numeric_limits<double>::infinity();
        double worst = 0.0;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        return worst;
    }

    bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }

    cplx trace() const {
        if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
        cplx t = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                out(c, r) = std::conj((*this)(r, c));
        out.hermitian = hermitian;
        out.dim_a_ = dim_a_;
        out.dim_b_ = dim_b_;
        return out;
    }

    double max_abs() const {
        double worst = 0.0;
        for (const cplx& v : data_) worst = std::max(worst, std::abs(v));
        return worst;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const cplx& v : data_) s += std::norm(v);
        return std::sqrt(s);
    }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        hermitian = hermitian && o.hermitian;
        return *this;
    }

    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        hermitian = hermitian && o.hermitian;
        return *this;
    }

    ComplexMatrix& operator*=(double s) {
        for (cplx& v : data_) v *= s;
        return *this;
    }

    ComplexMatrix& operator*=(cplx s) {
        for (cplx& v : data_) v *= s;
        hermitian = hermitian && s.imag() == 0.0;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= s; }
    friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        ComplexMatrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cplx ark = a(r, k);
                if (ark == cplx(0.0, 0.0)) continue;
                for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += ark * b(k, c);
            }
        return out;
    }

    std::vector<cplx> apply(const std::vector<cplx>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
        std::vector<cplx> out(rows_, cplx(0.0, 0.0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    /// <v| M |v> (returns the complex value; real for Hermitian M).
    cplx quadratic_form(const std::vector<cplx>& v) const {
        std::vector<cplx> mv = apply(v);
        cplx s = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) s += std::conj(v[i]) * mv[i];
        return s;
    }

    double max_abs_diff(const ComplexMatrix& o) const {
        require_same_shape(o);
        double worst = 0.0;
        for (std::size_t i = 0; i < data_.size(); ++i)
            worst = std::max(worst, std::abs(data_[i] - o.data_[i]));
        return worst;
    }

    bool hermitian = false;

private:
    void require_same_shape(const ComplexMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t dim_a_ = 0;
    std::size_t dim_b_ = 0;
    std::vector<cplx> data_;
};

// ---- vector helpers ------------------------------------------------------

inline double vec_norm(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const cplx& x : v) s += std::norm(x);
    return std::sqrt(s);
}

inline std::vector<cplx> vec_normalized(std::vector<cplx> v) {
    const double n = vec_norm(v);
    if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
    for (cplx& x : v) x /= n;
    return v;
}

inline cplx vec_dot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

/// Kronecker product of vectors, composite index (i,j) -> i*b.size() + j.
inline std::vector<cplx> vec_kron(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

inline ComplexMatrix outer_product(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    ComplexMatrix out(a.size(), b.size());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < b.size(); ++c) out(r, c) = a[r] * std::conj(b[c]);
    return out;
}

// ---- tensor-factor operations --------------------------------------------

/// Kronecker product with the row-major composite index convention.
/// For square inputs the bipartite tag (rows(a), rows(b)) is attached.
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.rows(); ++j)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + j, k * b.cols() + l) = aik * b(j, l);
        }
    if (a.is_square() && b.is_square()) {
        out.set_bipartite_dims(a.rows(), b.rows());
        out.hermitian = a.hermitian && b.hermitian;
    }
    return out;
}

/// Partial transposition on the B factor:
/// out[(i,j),(k,l)] = in[(i,l),(k,j)]. Preserves Hermiticity and the trace.
inline ComplexMatrix partial_transpose(const ComplexMatrix& m) {
    if (!m.has_bipartite_dims())
        throw std::invalid_argument("partial_transpose: bipartite dims not set");
    const std::size_t da = m.dim_a(), db = m.dim_b();
    if (da * db != m.rows() || !m.is_square())
        throw std::invalid_argument("partial_transpose: dims do not match matrix size");
    ComplexMatrix out = ComplexMatrix::bipartite_zero(da, db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < da; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    out(i * db + j, k * db + l) = m(i * db + l, k * db + j);
    out.hermitian = m.hermitian;
    return out;
}

/// Realignment (CCNR reshuffle): out[(i,k),(j,l)] = in[(i,j),(k,l)].
/// Output is (dim_a^2) x (dim_b^2) and carries no bipartite tag.
inline ComplexMatrix realign(const ComplexMatrix& m) {
    if (!m.has_bipartite_dims())
        throw std::invalid_argument("realign: bipartite dims not set");
    const std::size_t da = m.dim_a(), db = m.dim_b();
    if (da * db != m.rows() || !m.is_square())
        throw std::invalid_argument("realign: dims do not match matrix size");
    ComplexMatrix out(da * da, db * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < da; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    out(i * da + k, j * db + l) = m(i * db + j, k * db + l);
    return out;
}

// ---- Hermitian eigensolver (cyclic complex Jacobi) ------------------------

/**
 * Full eigensystem of a Hermitian matrix. Eigenvalues ascending,
 * eigenvectors as the columns of a unitary matrix, paired by position.
 */
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    /// Max-entry norm of M - U diag(lambda) U^dagger.
    double reconstruction_defect(const ComplexMatrix& m) const {
        const std::size_t n = eigenvalues.size();
        ComplexMatrix lam(n, n);
        for (std::size_t i = 0; i < n; ++i) lam(i, i) = eigenvalues[i];
        ComplexMatrix rebuilt = eigenvectors * lam * eigenvectors.adjoint();
        return rebuilt.max_abs_diff(m);
    }
};

/**
 * Cyclic complex Jacobi diagonalization. Unconditionally stable for the
 * small dense Hermitian matrices this library works with; spectra come
 * out accurate to a few ulps of the matrix norm.
 */
inline Spectrum hermitian_eigensystem(const ComplexMatrix& m, double herm_tol = 1e-12) {
    if (!m.is_square()) throw std::invalid_argument("hermitian_eigensystem: matrix not square");
    if (!m.is_hermitian(herm_tol))
        throw std::invalid_argument("hermitian_eigensystem: input not Hermitian within tolerance");

    const std::size_t n = m.rows();
    ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));  // exact Hermitian working copy
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(a.frobenius_norm(), 1e-300);
    const double off_tol = 1e-15 * scale;
    const int max_sweeps = 100;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        off = std::sqrt(2.0 * off);
        if (off <= off_tol) break;
        if (sweep == max_sweeps - 1)
            throw std::runtime_error("hermitian_eigensystem: Jacobi sweep limit reached");

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const cplx phase = apq / mag;
                const double tau = (aqq - app) / (2.0 * mag);
                // small-magnitude root of t^2 - 2*tau*t - 1 = 0
                const double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * cs;
                const cplx s = sn * phase;

                const double new_pp = app * cs * cs + 2.0 * mag * sn * cs + aqq * sn * sn;
                a(p, p) = new_pp;
                a(q, q) = app + aqq - new_pp;  // trace is preserved exactly
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const cplx arp = a(r, p);
                    const cplx arq = a(r, q);
                    a(r, p) = cs * arp + std::conj(s) * arq;
                    a(r, q) = -s * arp + cs * arq;
                    a(p, r) = std::conj(a(r, p));
                    a(q, r) = std::conj(a(r, q));
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const cplx vrp = v(r, p);
                    const cplx vrq = v(r, q);
                    v(r, p) = cs * vrp + std::conj(s) * vrq;
                    v(r, q) = -s * vrp + cs * vrq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    Spectrum spec;
    spec.eigenvalues.resize(n);
    spec.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        spec.eigenvalues[c] = a(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) spec.eigenvectors(r, c) = v(r, order[c]);
    }
    return spec;
}

// ---- singular values and trace norm ---------------------------------------

/// Singular values (descending) via the Hermitian dilation [[0, M], [M+, 0]],
/// whose spectrum is {+sigma_i, -sigma_i, 0...}. Unlike the Gram-matrix
/// route this keeps full absolute accuracy at small and zero singular
/// values, which the rank thresholds downstream rely on.
inline std::vector<double> singular_values(const ComplexMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    ComplexMatrix dilation(r + c, r + c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            dilation(i, r + j) = m(i, j);
            dilation(r + j, i) = std::conj(m(i, j));
        }
    dilation.hermitian = true;
    const Spectrum s = hermitian_eigensystem(dilation);
    std::vector<double> sv(std::min(r, c));
    for (std::size_t i = 0; i < sv.size(); ++i)
        sv[i] = std::max(0.0, s.eigenvalues[r + c - 1 - i]);
    return sv;
}

/// Sum of singular values.
inline double trace_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (double sv : singular_values(m)) s += sv;
    return s;
}

}  // namespace spawit
