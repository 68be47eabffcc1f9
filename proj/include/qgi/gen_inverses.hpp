#pragma once

#include "qgi/qmatrix.hpp"

namespace qgi {

// A matrix with its weight and everything the weighted formulas need:
// u = w*a, v = a*w, k = max(index_of(u), index_of(v)), ranks of a, u^k, v^k.
// All derived data is recomputed on construction, never trusted from input.
struct WeightedPair {
    QMatrix a; // m x n
    QMatrix w; // n x m
    QMatrix u; // w*a, n x n
    QMatrix v; // a*w, m x m
    std::size_t k = 0;
    std::size_t rank_a = 0;
    std::size_t rank_uk = 0; // rank of u^k
    std::size_t rank_vk = 0; // rank of v^k

    WeightedPair(QMatrix a_, QMatrix w_);

    std::size_t m() const { return a.rows(); }
    std::size_t n() const { return a.cols(); }
};

// Moore-Penrose inverse by determinantal representation. Rank-0 input gives
// the zero matrix of transposed shape. Dispatches between the two Gram-side
// formulas by operand size; both are exposed for cross-checking.
QMatrix mp_inverse(const QMatrix& a);
QMatrix mp_inverse_cdet(const QMatrix& a); // column sums over a* a
QMatrix mp_inverse_rdet(const QMatrix& a); // row sums over a a*

// Orthogonal projectors q = a^+ a and p = a a^+, computed directly.
QMatrix projector_q(const QMatrix& a);
QMatrix projector_p(const QMatrix& a);

// Weighted Drazin inverse (m x n). The two general formulas work on the
// w*a and a*w sides respectively and must agree; the Hermitian-product
// variants are cheaper single-denominator forms.
QMatrix wdrazin_u(const WeightedPair& pair);
QMatrix wdrazin_v(const WeightedPair& pair);

enum class HermitianSide { aw, wa };
QMatrix wdrazin_hermitian(const WeightedPair& pair, HermitianSide side);

// Prefers a Hermitian-product formula when applicable, otherwise the
// general formula on the smaller side.
QMatrix wdrazin(const WeightedPair& pair);

// Core-EP inverses of a square matrix; nilpotent input gives zero.
QMatrix core_ep_right(const QMatrix& a);
QMatrix core_ep_left(const QMatrix& a);

// Core inverses (index at most 1); throws index_mismatch otherwise.
QMatrix core_right(const QMatrix& a);
QMatrix core_left(const QMatrix& a);

} // namespace qgi
