#pragma once

#include "qgi/matrix_io.hpp"
#include "qgi/qmatrix.hpp"

#include <random>
#include <string>

namespace qgi::test {

inline Quaternion q(const char* literal) { return parse_quaternion(literal); }

inline Rational random_rational(std::mt19937_64& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, hi > 0 ? hi : 1);
    return Rational(num(rng), den(rng));
}

// Sparse-ish random quaternion: each coefficient is nonzero with
// probability 1/(sparsity+1). Sparsity keeps random ranks interesting.
inline Quaternion random_quaternion(std::mt19937_64& rng, int sparsity = 2) {
    std::uniform_int_distribution<int> pick(0, sparsity);
    auto coeff = [&]() { return pick(rng) == 0 ? random_rational(rng) : Rational(0); };
    return Quaternion(coeff(), coeff(), coeff(), coeff());
}

inline QMatrix random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n,
                             int sparsity = 2) {
    QMatrix out(m, n);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j) out(i, j) = random_quaternion(rng, sparsity);
    return out;
}

inline QMatrix random_hermitian(std::mt19937_64& rng, std::size_t n, int sparsity = 2) {
    QMatrix out(n, n);
    for (std::size_t i = 1; i <= n; ++i) {
        out(i, i) = Quaternion(random_rational(rng));
        for (std::size_t j = i + 1; j <= n; ++j) {
            out(i, j) = random_quaternion(rng, sparsity);
            out(j, i) = conj(out(i, j));
        }
    }
    return out;
}

// Entries restricted to the complex subfield (zero j and k parts).
inline QMatrix random_complex_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n,
                                     int sparsity = 2) {
    QMatrix out(m, n);
    std::uniform_int_distribution<int> pick(0, sparsity);
    auto coeff = [&]() { return pick(rng) == 0 ? random_rational(rng) : Rational(0); };
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            out(i, j) = Quaternion(coeff(), coeff(), Rational(0), Rational(0));
    return out;
}

inline QMatrix random_real_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n) {
    QMatrix out(m, n);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j) out(i, j) = Quaternion(random_rational(rng));
    return out;
}

// The 4x3 / 3x4 pair of the worked example, plus expected values.
namespace worked_example {

inline QMatrix a() {
    return parse_matrix("4 3\n0;i;0\nk;1;i\n1;0;0\n1;-k;-j\n");
}
inline QMatrix w() {
    return parse_matrix("3 4\nk;0;i;0\n-j;k;0;1\n0;1;0;-k\n");
}
inline QMatrix u() { // w*a
    return parse_matrix("3 3\ni;j;0\n0;k;0\n0;0;0\n");
}
inline QMatrix v() { // a*w
    return parse_matrix("4 4\n-k;-j;0;i\n-1-j;i+k;j;1+j\nk;0;i;0\n-i+k;1-j;i;i-k\n");
}
inline QMatrix asa() {
    return parse_matrix("3 3\n3;-2*k;-2*j\n2*k;3;2*i\n2*j;-2*i;2\n");
}
inline QMatrix aas() {
    return parse_matrix("4 4\n1;i;0;-j\n-i;3;k;3*k\n0;-k;1;1\nj;-3*k;1;3\n");
}
inline QMatrix u2() { // entry (2,3) blank in the source table, read as 0
    return parse_matrix("3 3\n-1;i+k;0\n0;-1;0\n0;0;0\n");
}
inline QMatrix u5() { // entry (2,3) blank in the source table, read as 0
    return parse_matrix("3 3\ni;2+3*j;0\n0;k;0\n0;0;0\n");
}
// as tabulated: (u^5)* u^2; the pipeline definition u^2 (u^5)* differs
inline QMatrix u_check_tabulated() {
    return parse_matrix("3 3\ni;1+j;0\n-2+3*j;-i+6*k;0\n0;0;0\n");
}
inline QMatrix phi() {
    return parse_matrix("3 3\ni;-2-j;0\n0;k;0\n0;0;0\n");
}
inline QMatrix phi_hat() {
    return parse_matrix("3 3\n6*i-k;1+j;0\n-2+3*j;k;0\n0;0;0\n");
}
inline QMatrix omega_tilde() {
    return parse_matrix("3 4\n0;-k;1;1\n-i;1;0;k\n0;0;0;0\n");
}
inline QMatrix wdmp_expected() {
    return parse_matrix("3 4\n0;0;1;0\n-i;0;0;0\n0;0;0;0\n");
}

} // namespace worked_example

} // namespace qgi::test
