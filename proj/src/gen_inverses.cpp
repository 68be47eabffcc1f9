#include "qgi/gen_inverses.hpp"

#include "qgi/errors.hpp"
#include "qgi/nc_determinant.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <exception>
#include <vector>

namespace qgi {

namespace {

Rational nonzero_denominator(Rational d, const char* where) {
    if (d.is_zero())
        throw internal_error(std::string(where) +
                             ": zero determinantal denominator (rank precondition violated)");
    return d;
}

// Entry loops of the determinantal formulas are independent; run them
// across threads. Exceptions may not escape a parallel region, so the
// first one is captured and rethrown afterwards.
template <typename Fn>
void for_entries(std::size_t rows, std::size_t cols, Fn&& fn) {
    std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(dynamic) if (rows * cols > 1)
#endif
    for (std::size_t i = 1; i <= rows; ++i)
        for (std::size_t j = 1; j <= cols; ++j) {
            try {
                fn(i, j);
            } catch (...) {
#ifdef _OPENMP
#pragma omp critical(qgi_for_entries_failure)
#endif
                {
                    if (!failure) failure = std::current_exception();
                }
            }
        }
    if (failure) std::rethrow_exception(failure);
}

} // namespace

WeightedPair::WeightedPair(QMatrix a_, QMatrix w_) : a(std::move(a_)), w(std::move(w_)) {
    if (w.rows() != a.cols() || w.cols() != a.rows())
        throw dimension_mismatch("weight must be n x m for an m x n matrix");
    u = w * a;
    v = a * w;
    k = std::max(index_of(u), index_of(v));
    rank_a = rank(a);
    rank_uk = k == 0 ? u.rows() : rank(power(u, k));
    rank_vk = k == 0 ? v.rows() : rank(power(v, k));
}

QMatrix mp_inverse_cdet(const QMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t r = rank(a);
    if (r == 0) return QMatrix::zero(n, m);
    const QMatrix astar = conj_transpose(a);
    const QMatrix gram = astar * a; // n x n
    const Rational den = nonzero_denominator(principal_minor_sum(gram, r), "mp (cdet)");
    QMatrix x(n, m);
    for_entries(n, m, [&](std::size_t i, std::size_t j) {
        x(i, j) = cdet_minor_sum(gram, i, astar.col(j), r) / den;
    });
    return x;
}

QMatrix mp_inverse_rdet(const QMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t r = rank(a);
    if (r == 0) return QMatrix::zero(n, m);
    const QMatrix astar = conj_transpose(a);
    const QMatrix gram = a * astar; // m x m
    const Rational den = nonzero_denominator(principal_minor_sum(gram, r), "mp (rdet)");
    QMatrix x(n, m);
    for_entries(n, m, [&](std::size_t i, std::size_t j) {
        x(i, j) = rdet_minor_sum(gram, j, astar.row(i), r) / den;
    });
    return x;
}

QMatrix mp_inverse(const QMatrix& a) {
    return a.cols() <= a.rows() ? mp_inverse_cdet(a) : mp_inverse_rdet(a);
}

QMatrix projector_q(const QMatrix& a) {
    const std::size_t n = a.cols();
    const std::size_t r = rank(a);
    if (r == 0) return QMatrix::zero(n, n);
    const QMatrix gram = conj_transpose(a) * a;
    const Rational den = nonzero_denominator(principal_minor_sum(gram, r), "projector q");
    QMatrix q(n, n);
    for_entries(n, n, [&](std::size_t i, std::size_t j) {
        q(i, j) = cdet_minor_sum(gram, i, gram.col(j), r) / den;
    });
    return q;
}

QMatrix projector_p(const QMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t r = rank(a);
    if (r == 0) return QMatrix::zero(m, m);
    const QMatrix gram = a * conj_transpose(a);
    const Rational den = nonzero_denominator(principal_minor_sum(gram, r), "projector p");
    QMatrix p(m, m);
    for_entries(m, m, [&](std::size_t i, std::size_t j) {
        p(i, j) = rdet_minor_sum(gram, j, gram.row(i), r) / den;
    });
    return p;
}

QMatrix wdrazin_u(const WeightedPair& pair) {
    const std::size_t m = pair.m(), n = pair.n(), k = pair.k;
    const std::size_t r1 = pair.rank_uk;
    if (r1 == 0) return QMatrix::zero(m, n);

    const QMatrix uk = power(pair.u, k);
    const QMatrix u2k1 = power(pair.u, 2 * k + 1);
    const QMatrix u2k1s = conj_transpose(u2k1);
    const QMatrix gram = u2k1 * u2k1s; // n x n Hermitian
    const QMatrix ucheck = uk * u2k1s;

    QMatrix phi(n, n);
    for_entries(n, n, [&](std::size_t l, std::size_t q) {
        phi(l, q) = rdet_minor_sum(gram, q, ucheck.row(l), r1);
    });
    const QMatrix phi_tilde = pair.a * phi * power(pair.u, 2 * k) * u2k1s; // m x n

    const Rational den1 = nonzero_denominator(principal_minor_sum(gram, r1), "wdrazin (u side)");
    const Rational den = den1 * den1;

    // row sums against phi_tilde, then the trailing u^k factor on the right
    QMatrix g(m, n);
    for_entries(m, n, [&](std::size_t i, std::size_t s) {
        g(i, s) = rdet_minor_sum(gram, s, phi_tilde.row(i), r1);
    });
    QMatrix x(m, n);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            Quaternion acc;
            for (std::size_t s = 1; s <= n; ++s) acc += g(i, s) * uk(s, j);
            x(i, j) = acc / den;
        }
    return x;
}

QMatrix wdrazin_v(const WeightedPair& pair) {
    const std::size_t m = pair.m(), n = pair.n(), k = pair.k;
    const std::size_t r1 = pair.rank_vk;
    if (r1 == 0) return QMatrix::zero(m, n);

    const QMatrix vk = power(pair.v, k);
    const QMatrix v2k1 = power(pair.v, 2 * k + 1);
    const QMatrix v2k1s = conj_transpose(v2k1);
    const QMatrix gram = v2k1s * v2k1; // m x m Hermitian
    const QMatrix vhat = v2k1s * vk;

    QMatrix psi(m, m);
    for_entries(m, m, [&](std::size_t s, std::size_t t) {
        psi(s, t) = cdet_minor_sum(gram, s, vhat.col(t), r1);
    });
    const QMatrix psi_tilde = v2k1s * power(pair.v, 2 * k) * psi * pair.a; // m x n

    const Rational den1 = nonzero_denominator(principal_minor_sum(gram, r1), "wdrazin (v side)");
    const Rational den = den1 * den1;

    QMatrix h(m, n);
    for_entries(m, n, [&](std::size_t t, std::size_t j) {
        h(t, j) = cdet_minor_sum(gram, t, psi_tilde.col(j), r1);
    });
    QMatrix x(m, n);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            Quaternion acc;
            for (std::size_t t = 1; t <= m; ++t) acc += vk(i, t) * h(t, j);
            x(i, j) = acc / den;
        }
    return x;
}

QMatrix wdrazin_hermitian(const WeightedPair& pair, HermitianSide side) {
    const std::size_t m = pair.m(), n = pair.n(), k = pair.k;
    if (side == HermitianSide::aw) {
        if (!is_hermitian(pair.v)) throw not_hermitian("a*w is not Hermitian");
        const std::size_t r1 = pair.rank_vk;
        if (r1 == 0) return QMatrix::zero(m, n);
        const QMatrix host = power(pair.v, k + 2);
        const QMatrix vbar = power(pair.v, k) * pair.a; // m x n
        const Rational den =
            nonzero_denominator(principal_minor_sum(host, r1), "wdrazin (Hermitian aw)");
        QMatrix x(m, n);
        for_entries(m, n, [&](std::size_t i, std::size_t j) {
            x(i, j) = cdet_minor_sum(host, i, vbar.col(j), r1) / den;
        });
        return x;
    }
    if (!is_hermitian(pair.u)) throw not_hermitian("w*a is not Hermitian");
    const std::size_t r1 = pair.rank_uk;
    if (r1 == 0) return QMatrix::zero(m, n);
    const QMatrix host = power(pair.u, k + 2);
    const QMatrix ubar = pair.a * power(pair.u, k); // m x n
    const Rational den =
        nonzero_denominator(principal_minor_sum(host, r1), "wdrazin (Hermitian wa)");
    QMatrix x(m, n);
    for_entries(m, n, [&](std::size_t i, std::size_t j) {
        x(i, j) = rdet_minor_sum(host, j, ubar.row(i), r1) / den;
    });
    return x;
}

QMatrix wdrazin(const WeightedPair& pair) {
    if (is_hermitian(pair.v)) return wdrazin_hermitian(pair, HermitianSide::aw);
    if (is_hermitian(pair.u)) return wdrazin_hermitian(pair, HermitianSide::wa);
    return pair.n() <= pair.m() ? wdrazin_u(pair) : wdrazin_v(pair);
}

namespace {

QMatrix core_ep_with_exponent(const QMatrix& a, std::size_t k, bool right_side) {
    const std::size_t n = a.rows();
    const QMatrix ak = power(a, k);
    const std::size_t s = rank(ak);
    if (s == 0) return QMatrix::zero(n, n);
    const QMatrix ak1 = power(a, k + 1);
    const QMatrix ak1s = conj_transpose(ak1);
    if (right_side) {
        const QMatrix gram = ak1 * ak1s;
        const QMatrix ahat = ak * ak1s;
        const Rational den =
            nonzero_denominator(principal_minor_sum(gram, s), "core-EP (right)");
        QMatrix x(n, n);
        for_entries(n, n, [&](std::size_t i, std::size_t j) {
            x(i, j) = rdet_minor_sum(gram, j, ahat.row(i), s) / den;
        });
        return x;
    }
    const QMatrix gram = ak1s * ak1;
    const QMatrix acheck = ak1s * ak;
    const Rational den = nonzero_denominator(principal_minor_sum(gram, s), "core-EP (left)");
    QMatrix x(n, n);
    for_entries(n, n, [&](std::size_t i, std::size_t j) {
        x(i, j) = cdet_minor_sum(gram, i, acheck.col(j), s) / den;
    });
    return x;
}

} // namespace

QMatrix core_ep_right(const QMatrix& a) {
    if (a.rows() != a.cols()) throw dimension_mismatch("core-EP of a non-square matrix");
    return core_ep_with_exponent(a, index_of(a), true);
}

QMatrix core_ep_left(const QMatrix& a) {
    if (a.rows() != a.cols()) throw dimension_mismatch("core-EP of a non-square matrix");
    return core_ep_with_exponent(a, index_of(a), false);
}

QMatrix core_right(const QMatrix& a) {
    if (a.rows() != a.cols()) throw dimension_mismatch("core inverse of a non-square matrix");
    if (index_of(a) > 1) throw index_mismatch("core inverse requires index at most 1");
    return core_ep_with_exponent(a, 1, true);
}

QMatrix core_left(const QMatrix& a) {
    if (a.rows() != a.cols()) throw dimension_mismatch("core inverse of a non-square matrix");
    if (index_of(a) > 1) throw index_mismatch("core inverse requires index at most 1");
    return core_ep_with_exponent(a, 1, false);
}

} // namespace qgi
