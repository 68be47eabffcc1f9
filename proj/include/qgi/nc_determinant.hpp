#pragma once

#include "qgi/qmatrix.hpp"

#include <cstdint>
#include <span>

namespace qgi {

// Noncommutative row and column determinants of square quaternion matrices.
//
// Both are full permutation expansions: every sigma in S_n contributes a
// sign (-1)^(n - c), c = number of disjoint cycles of sigma (fixed points
// count), times a product of entry chains, one chain per cycle. A cycle
// visited from a starting element s contributes
//
//     a[s, sigma(s)] * a[sigma(s), sigma^2(s)] * ... * a[sigma^-1(s), s].
//
// Because entries do not commute, the starting elements and the order in
// which the chains are multiplied are part of the definition:
//
//  * rdet_i: the cycle through the anchor row i starts at i and is
//    multiplied first; every other cycle starts at its minimal element and
//    the chains follow in increasing order of those minima.
//  * cdet_j: the cycle through the anchor column j starts at j and is
//    multiplied last; the remaining chains precede it in decreasing order
//    of their minimal elements.
//
// There are no cofactor shortcuts here: noncommutativity invalidates them,
// so the n! terms are enumerated as written. The kernels split the
// enumeration across OpenMP threads; exact addition makes any split
// produce identical results.

// Optional instrumentation for the expansion kernels.
struct DetStats {
    std::uint64_t terms = 0;
};

Quaternion rdet(std::size_t i, const QMatrix& a, DetStats* stats = nullptr);
Quaternion cdet(std::size_t j, const QMatrix& a, DetStats* stats = nullptr);

// Determinant of a Hermitian matrix: the common real value of all row and
// column determinants. Throws not_hermitian, and internal_error if the
// computed value fails to be real.
Rational hdet(const QMatrix& a);

// Sum of hdet over all r x r principal submatrices of Hermitian b.
// r = 0 yields 0 by convention (callers handle rank-0 inputs themselves).
Rational principal_minor_sum(const QMatrix& b, std::size_t r);

// Sum over all r-subsets alpha containing j of rdet taken at j of the
// alpha x alpha principal submatrix of b with its j-row replaced by the
// restriction of the full-length row vector repl.
Quaternion rdet_minor_sum(const QMatrix& b, std::size_t j,
                          std::span<const Quaternion> repl, std::size_t r);

// Column-side mirror: subsets containing i, column i replaced, cdet at i.
Quaternion cdet_minor_sum(const QMatrix& b, std::size_t i,
                          std::span<const Quaternion> repl, std::size_t r);

namespace detail {
// Term for one permutation, shared by the production and reference paths.
// perm maps 0-based positions; anchor is 0-based.
Quaternion rdet_term(const QMatrix& a, std::span<const int> perm, int anchor);
Quaternion cdet_term(const QMatrix& a, std::span<const int> perm, int anchor);
std::uint64_t factorial(std::size_t n);
void unrank_permutation(std::uint64_t rank, std::size_t n, std::span<int> out);
} // namespace detail

} // namespace qgi
