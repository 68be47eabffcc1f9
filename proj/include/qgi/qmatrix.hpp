#pragma once

#include "qgi/quaternion.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qgi {

// Dense quaternion matrix, row-major. All public indices are 1-based.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

    static QMatrix identity(std::size_t n);
    static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Quaternion& operator()(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return data_[(i - 1) * cols_ + (j - 1)];
    }
    Quaternion& operator()(std::size_t i, std::size_t j) {
        check_index(i, j);
        return data_[(i - 1) * cols_ + (j - 1)];
    }

    std::vector<Quaternion> row(std::size_t i) const;
    std::vector<Quaternion> col(std::size_t j) const;

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

private:
    void check_index(std::size_t i, std::size_t j) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Quaternion> data_;
};

// Strictly increasing nonempty sequence of 1-based indices.
class IndexSet {
public:
    explicit IndexSet(std::vector<std::size_t> indices);

    std::size_t size() const { return idx_.size(); }
    std::size_t operator[](std::size_t pos) const { return idx_[pos]; } // 0-based position
    const std::vector<std::size_t>& indices() const { return idx_; }

    bool contains(std::size_t v) const;
    // 0-based position of v; throws if absent.
    std::size_t position_of(std::size_t v) const;

    // All r-element subsets of {1..n}, lexicographic.
    static std::vector<IndexSet> all(std::size_t r, std::size_t n);
    // Those containing the fixed index.
    static std::vector<IndexSet> containing(std::size_t r, std::size_t n, std::size_t fixed);

private:
    std::vector<std::size_t> idx_;
};

QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);

QMatrix conj_transpose(const QMatrix& a);

// a^p with a square; p = 0 gives the identity.
QMatrix power(const QMatrix& a, std::size_t p);

QMatrix submatrix(const QMatrix& a, const IndexSet& row_set, const IndexSet& col_set);

QMatrix replace_row(const QMatrix& a, std::size_t i, const std::vector<Quaternion>& b);
QMatrix replace_col(const QMatrix& a, std::size_t j, const std::vector<Quaternion>& c);

bool is_hermitian(const QMatrix& a);
bool is_zero(const QMatrix& a);

// Rank over the quaternions, computed as half the rank of the complex
// adjoint image under exact elimination.
std::size_t rank(const QMatrix& a);

// Smallest k >= 0 with rank(a^{k+1}) = rank(a^k); 0 for a nonsingular matrix.
std::size_t index_of(const QMatrix& a);

} // namespace qgi
