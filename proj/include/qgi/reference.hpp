#pragma once

#include "qgi/nc_determinant.hpp"
#include "qgi/qmatrix.hpp"

#include <span>

namespace qgi::ref {

// Plain serial transcriptions of the determinant layer, kept as the
// comparison baseline for the OpenMP kernels. They enumerate permutations
// with std::next_permutation and build each term from an explicit cycle
// decomposition, independently of the production term walker.

Quaternion rdet(std::size_t i, const QMatrix& a, DetStats* stats = nullptr);
Quaternion cdet(std::size_t j, const QMatrix& a, DetStats* stats = nullptr);
Rational hdet(const QMatrix& a);
Rational principal_minor_sum(const QMatrix& b, std::size_t r);
Quaternion rdet_minor_sum(const QMatrix& b, std::size_t j,
                          std::span<const Quaternion> repl, std::size_t r);
Quaternion cdet_minor_sum(const QMatrix& b, std::size_t i,
                          std::span<const Quaternion> repl, std::size_t r);

} // namespace qgi::ref
