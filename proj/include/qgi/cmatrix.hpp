#pragma once

#include "qgi/qmatrix.hpp"
#include "qgi/rational.hpp"

#include <cstddef>
#include <vector>

namespace qgi {

// Complex number with exact rational parts.
struct Complex {
    Rational re, im;

    Complex() = default;
    Complex(Rational r) : re(std::move(r)) {}
    Complex(int r) : re(r) {}
    Complex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

    Complex operator-() const { return {-re, -im}; }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b);

    Complex& operator+=(const Complex& b) { re += b.re; im += b.im; return *this; }
    Complex& operator-=(const Complex& b) { re -= b.re; im -= b.im; return *this; }
};

inline Complex conj(const Complex& c) { return {c.re, -c.im}; }

// Dense exact complex matrix, 1-based indices like QMatrix.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Complex& operator()(std::size_t i, std::size_t j) const {
        return data_[(i - 1) * cols_ + (j - 1)];
    }
    Complex& operator()(std::size_t i, std::size_t j) {
        return data_[(i - 1) * cols_ + (j - 1)];
    }

    friend bool operator==(const CMatrix& a, const CMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const CMatrix& a, const CMatrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);

CMatrix c_conj_transpose(const CMatrix& a);

std::size_t c_rank(const CMatrix& a);

// Reduced row echelon form.
CMatrix c_rref(const CMatrix& a);

// Inverse of a nonsingular square matrix; throws zero_divisor when singular.
CMatrix c_inverse(const CMatrix& a);

// Moore-Penrose inverse by full-rank factorization A = F G from the RREF:
// A^+ = G^* (F^* A G^*)^{-1} F^*.
CMatrix c_mp_inverse(const CMatrix& a);

// Complex adjoint image: writing A = A1 + A2 j with complex blocks, the
// 2m x 2n matrix [[A1, A2], [-conj(A2), conj(A1)]]. Star-algebra
// homomorphism: additive, multiplicative, star- and rank-doubling.
CMatrix complex_embedding(const QMatrix& a);

// Left inverse of the embedding; throws internal_error when the argument is
// not of the embedded block form.
QMatrix embedding_to_quaternion(const CMatrix& m);

} // namespace qgi
