#include "qgi/cmatrix.hpp"

#include "qgi/errors.hpp"

#include <utility>

namespace qgi {

Complex operator/(const Complex& a, const Complex& b) {
    Rational d = b.re * b.re + b.im * b.im;
    if (d.is_zero()) throw zero_divisor("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 1; i <= n; ++i) m(i, i) = Complex(1);
    return m;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_mismatch("complex matrix sum shape mismatch");
    CMatrix out(a.rows(), a.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_mismatch("complex matrix difference shape mismatch");
    CMatrix out(a.rows(), a.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw dimension_mismatch("complex matrix product shape mismatch");
    CMatrix out(a.rows(), b.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= b.cols(); ++j) {
            Complex acc;
            for (std::size_t t = 1; t <= a.cols(); ++t) acc += a(i, t) * b(t, j);
            out(i, j) = acc;
        }
    return out;
}

CMatrix c_conj_transpose(const CMatrix& a) {
    CMatrix out(a.cols(), a.rows());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j) out(j, i) = conj(a(i, j));
    return out;
}

namespace {

// In-place Gauss-Jordan to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref_in_place(CMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 1;
    for (std::size_t col = 1; col <= m.cols() && lead <= m.rows(); ++col) {
        std::size_t piv = 0;
        for (std::size_t i = lead; i <= m.rows(); ++i)
            if (!m(i, col).is_zero()) { piv = i; break; }
        if (piv == 0) continue;
        if (piv != lead)
            for (std::size_t j = 1; j <= m.cols(); ++j) std::swap(m(piv, j), m(lead, j));
        Complex inv = Complex(1) / m(lead, col);
        for (std::size_t j = col; j <= m.cols(); ++j) m(lead, j) = m(lead, j) * inv;
        for (std::size_t i = 1; i <= m.rows(); ++i) {
            if (i == lead || m(i, col).is_zero()) continue;
            Complex f = m(i, col);
            for (std::size_t j = col; j <= m.cols(); ++j)
                m(i, j) = m(i, j) - f * m(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

} // namespace

std::size_t c_rank(const CMatrix& a) {
    CMatrix m = a;
    return rref_in_place(m).size();
}

CMatrix c_rref(const CMatrix& a) {
    CMatrix m = a;
    rref_in_place(m);
    return m;
}

CMatrix c_inverse(const CMatrix& a) {
    if (a.rows() != a.cols()) throw dimension_mismatch("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    CMatrix aug(n, 2 * n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = Complex(1);
    }
    auto pivots = rref_in_place(aug);
    // pivots must all fall in the left block
    if (pivots.size() < n || pivots[n - 1] > n)
        throw zero_divisor("singular matrix has no inverse");
    CMatrix out(n, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

CMatrix c_mp_inverse(const CMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    CMatrix red = a;
    auto pivots = rref_in_place(red);
    const std::size_t r = pivots.size();
    if (r == 0) return CMatrix(n, m);

    CMatrix f(m, r), g(r, n);
    for (std::size_t t = 0; t < r; ++t) {
        for (std::size_t i = 1; i <= m; ++i) f(i, t + 1) = a(i, pivots[t]);
        for (std::size_t j = 1; j <= n; ++j) g(t + 1, j) = red(t + 1, j);
    }
    CMatrix fs = c_conj_transpose(f);
    CMatrix gs = c_conj_transpose(g);
    CMatrix core = c_inverse(fs * a * gs); // r x r, invertible for a full-rank factorization
    return gs * core * fs;
}

CMatrix complex_embedding(const QMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    CMatrix out(2 * m, 2 * n);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            const Quaternion& q = a(i, j);
            Complex a1(q.w, q.x); // coefficient of 1 in q = a1 + a2 j
            Complex a2(q.y, q.z);
            out(i, j) = a1;
            out(i, n + j) = a2;
            out(m + i, j) = -conj(a2);
            out(m + i, n + j) = conj(a1);
        }
    return out;
}

QMatrix embedding_to_quaternion(const CMatrix& c) {
    if (c.rows() % 2 != 0 || c.cols() % 2 != 0)
        throw internal_error("embedded matrix must have even dimensions");
    const std::size_t m = c.rows() / 2, n = c.cols() / 2;
    QMatrix out(m, n);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            const Complex& a1 = c(i, j);
            const Complex& a2 = c(i, n + j);
            if (c(m + i, j) != -conj(a2) || c(m + i, n + j) != conj(a1))
                throw internal_error("matrix is not in the image of the embedding");
            out(i, j) = Quaternion(a1.re, a1.im, a2.re, a2.im);
        }
    return out;
}

} // namespace qgi
