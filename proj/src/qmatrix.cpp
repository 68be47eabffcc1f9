#include "qgi/qmatrix.hpp"

#include "qgi/cmatrix.hpp"
#include "qgi/errors.hpp"

#include <string>

namespace qgi {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw dimension_mismatch("ragged initializer rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 1; i <= n; ++i) m(i, i) = Quaternion(1);
    return m;
}

void QMatrix::check_index(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw index_out_of_range("matrix index (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") outside " + std::to_string(rows_) +
                                 "x" + std::to_string(cols_));
}

std::vector<Quaternion> QMatrix::row(std::size_t i) const {
    if (i < 1 || i > rows_) throw index_out_of_range("row index out of range");
    std::vector<Quaternion> out(cols_);
    for (std::size_t j = 1; j <= cols_; ++j) out[j - 1] = (*this)(i, j);
    return out;
}

std::vector<Quaternion> QMatrix::col(std::size_t j) const {
    if (j < 1 || j > cols_) throw index_out_of_range("column index out of range");
    std::vector<Quaternion> out(rows_);
    for (std::size_t i = 1; i <= rows_; ++i) out[i - 1] = (*this)(i, j);
    return out;
}

IndexSet::IndexSet(std::vector<std::size_t> indices) : idx_(std::move(indices)) {
    if (idx_.empty()) throw index_out_of_range("empty index set");
    for (std::size_t p = 0; p < idx_.size(); ++p) {
        if (idx_[p] < 1) throw index_out_of_range("index sets are 1-based");
        if (p > 0 && idx_[p] <= idx_[p - 1])
            throw index_out_of_range("index set not strictly increasing");
    }
}

bool IndexSet::contains(std::size_t v) const {
    for (std::size_t e : idx_)
        if (e == v) return true;
    return false;
}

std::size_t IndexSet::position_of(std::size_t v) const {
    for (std::size_t p = 0; p < idx_.size(); ++p)
        if (idx_[p] == v) return p;
    throw index_out_of_range("index not in set");
}

std::vector<IndexSet> IndexSet::all(std::size_t r, std::size_t n) {
    std::vector<IndexSet> out;
    if (r == 0 || r > n) return out;
    std::vector<std::size_t> cur(r);
    for (std::size_t p = 0; p < r; ++p) cur[p] = p + 1;
    while (true) {
        out.emplace_back(cur);
        // advance to the next combination
        std::size_t p = r;
        while (p > 0 && cur[p - 1] == n - r + p) --p;
        if (p == 0) break;
        ++cur[p - 1];
        for (std::size_t q = p; q < r; ++q) cur[q] = cur[q - 1] + 1;
    }
    return out;
}

std::vector<IndexSet> IndexSet::containing(std::size_t r, std::size_t n, std::size_t fixed) {
    std::vector<IndexSet> out;
    for (auto& s : all(r, n))
        if (s.contains(fixed)) out.push_back(std::move(s));
    return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_mismatch("matrix sum shape mismatch");
    QMatrix out(a.rows(), a.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_mismatch("matrix difference shape mismatch");
    QMatrix out(a.rows(), a.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows())
        throw dimension_mismatch("matrix product " + std::to_string(a.rows()) + "x" +
                                 std::to_string(a.cols()) + " * " + std::to_string(b.rows()) +
                                 "x" + std::to_string(b.cols()));
    QMatrix out(a.rows(), b.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= b.cols(); ++j) {
            Quaternion acc;
            for (std::size_t t = 1; t <= a.cols(); ++t) acc += a(i, t) * b(t, j);
            out(i, j) = acc;
        }
    return out;
}

QMatrix conj_transpose(const QMatrix& a) {
    QMatrix out(a.cols(), a.rows());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j) out(j, i) = conj(a(i, j));
    return out;
}

QMatrix power(const QMatrix& a, std::size_t p) {
    if (a.rows() != a.cols()) throw dimension_mismatch("power of a non-square matrix");
    QMatrix out = QMatrix::identity(a.rows());
    for (std::size_t t = 0; t < p; ++t) out = out * a;
    return out;
}

QMatrix submatrix(const QMatrix& a, const IndexSet& row_set, const IndexSet& col_set) {
    const auto& ri = row_set.indices();
    const auto& ci = col_set.indices();
    if (ri.back() > a.rows() || ci.back() > a.cols())
        throw index_out_of_range("submatrix index beyond matrix bounds");
    QMatrix out(ri.size(), ci.size());
    for (std::size_t i = 0; i < ri.size(); ++i)
        for (std::size_t j = 0; j < ci.size(); ++j) out(i + 1, j + 1) = a(ri[i], ci[j]);
    return out;
}

QMatrix replace_row(const QMatrix& a, std::size_t i, const std::vector<Quaternion>& b) {
    if (i < 1 || i > a.rows()) throw index_out_of_range("row replacement index");
    if (b.size() != a.cols()) throw dimension_mismatch("row replacement length");
    QMatrix out = a;
    for (std::size_t j = 1; j <= a.cols(); ++j) out(i, j) = b[j - 1];
    return out;
}

QMatrix replace_col(const QMatrix& a, std::size_t j, const std::vector<Quaternion>& c) {
    if (j < 1 || j > a.cols()) throw index_out_of_range("column replacement index");
    if (c.size() != a.rows()) throw dimension_mismatch("column replacement length");
    QMatrix out = a;
    for (std::size_t i = 1; i <= a.rows(); ++i) out(i, j) = c[i - 1];
    return out;
}

bool is_hermitian(const QMatrix& a) {
    if (a.rows() != a.cols()) return false;
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = i; j <= a.cols(); ++j)
            if (a(i, j) != conj(a(j, i))) return false;
    return true;
}

bool is_zero(const QMatrix& a) {
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j)
            if (!a(i, j).is_zero()) return false;
    return true;
}

std::size_t rank(const QMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    std::size_t r2 = c_rank(complex_embedding(a));
    if (r2 % 2 != 0) throw internal_error("embedding rank must be even");
    return r2 / 2;
}

std::size_t index_of(const QMatrix& a) {
    if (a.rows() != a.cols()) throw dimension_mismatch("index of a non-square matrix");
    std::size_t prev = a.rows(); // rank of a^0 = I
    QMatrix p = a;
    for (std::size_t k = 0;; ++k) {
        std::size_t cur = rank(p);
        if (cur == prev) return k;
        prev = cur;
        p = p * a;
    }
}

} // namespace qgi
