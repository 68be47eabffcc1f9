#include "qgi/nc_determinant.hpp"

#include "qgi/config.hpp"
#include "qgi/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <array>
#include <exception>
#include <string>
#include <vector>

namespace qgi {

namespace detail {

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t t = 2; t <= n; ++t) f *= t;
    return f;
}

void unrank_permutation(std::uint64_t rank, std::size_t n, std::span<int> out) {
    // factorial number system: digit p selects from the remaining values
    std::array<int, 32> avail{};
    for (std::size_t v = 0; v < n; ++v) avail[v] = static_cast<int>(v);
    std::size_t left = n;
    for (std::size_t p = 0; p < n; ++p) {
        std::uint64_t f = factorial(left - 1);
        std::size_t pick = static_cast<std::size_t>(rank / f);
        rank %= f;
        out[p] = avail[pick];
        for (std::size_t t = pick; t + 1 < left; ++t) avail[t] = avail[t + 1];
        --left;
    }
}

namespace {

// Chain product a[s, p(s)] a[p(s), p^2(s)] ... back to s; marks the cycle
// visited.
Quaternion cycle_chain(const QMatrix& a, std::span<const int> perm, int start,
                       std::span<bool> visited) {
    Quaternion prod(1);
    int c = start;
    do {
        visited[static_cast<std::size_t>(c)] = true;
        int next = perm[static_cast<std::size_t>(c)];
        prod *= a(static_cast<std::size_t>(c) + 1, static_cast<std::size_t>(next) + 1);
        c = next;
    } while (c != start);
    return prod;
}

} // namespace

Quaternion rdet_term(const QMatrix& a, std::span<const int> perm, int anchor) {
    const std::size_t n = a.rows();
    std::array<bool, 32> visited{};
    int cycles = 0;

    Quaternion term = cycle_chain(a, perm, anchor, std::span<bool>(visited.data(), n));
    ++cycles;
    for (std::size_t s = 0; s < n; ++s) {
        if (visited[s]) continue;
        // ascending scan: s is the minimum of its cycle
        term *= cycle_chain(a, perm, static_cast<int>(s), std::span<bool>(visited.data(), n));
        ++cycles;
    }
    bool negative = ((n - static_cast<std::size_t>(cycles)) % 2) != 0;
    return negative ? -term : term;
}

Quaternion cdet_term(const QMatrix& a, std::span<const int> perm, int anchor) {
    const std::size_t n = a.rows();
    std::array<bool, 32> visited{};
    int cycles = 0;

    Quaternion anchor_chain = cycle_chain(a, perm, anchor, std::span<bool>(visited.data(), n));
    ++cycles;
    // collect the other chains by ascending minima, then multiply in
    // descending order with the anchor chain last
    std::vector<Quaternion> others;
    for (std::size_t s = 0; s < n; ++s) {
        if (visited[s]) continue;
        others.push_back(
            cycle_chain(a, perm, static_cast<int>(s), std::span<bool>(visited.data(), n)));
        ++cycles;
    }
    Quaternion term(1);
    for (auto it = others.rbegin(); it != others.rend(); ++it) term *= *it;
    term *= anchor_chain;
    bool negative = ((n - static_cast<std::size_t>(cycles)) % 2) != 0;
    return negative ? -term : term;
}

} // namespace detail

namespace {

void check_square_capped(const QMatrix& a, const char* what) {
    if (a.rows() != a.cols())
        throw dimension_mismatch(std::string(what) + " of a non-square matrix");
    if (a.rows() == 0) throw dimension_mismatch(std::string(what) + " of an empty matrix");
    if (a.rows() > config::max_dim())
        throw dimension_cap_exceeded(std::string(what) + ": dimension " +
                                     std::to_string(a.rows()) + " exceeds cap " +
                                     std::to_string(config::max_dim()));
    if (a.rows() > 20)
        throw dimension_cap_exceeded("permutation expansion limited to dimension 20");
}

int effective_threads() {
#ifdef _OPENMP
    unsigned requested = config::threads();
    if (requested == 0) return omp_get_max_threads();
    return static_cast<int>(requested);
#else
    return 1;
#endif
}

constexpr std::uint64_t kParallelCutoff = 720; // below 6! the fork overhead dominates

using TermFn = Quaternion (*)(const QMatrix&, std::span<const int>, int);

Quaternion expand(const QMatrix& a, std::size_t anchor_1based, TermFn term_fn,
                  DetStats* stats) {
    const std::size_t n = a.rows();
    if (anchor_1based < 1 || anchor_1based > n)
        throw index_out_of_range("determinant anchor index out of range");
    const int anchor = static_cast<int>(anchor_1based) - 1;
    const std::uint64_t total = detail::factorial(n);
    if (stats) stats->terms = total;

    Quaternion sum;
    const int nthreads = effective_threads();
#ifdef _OPENMP
    if (nthreads > 1 && total >= kParallelCutoff) {
        std::vector<Quaternion> partial(static_cast<std::size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
        {
            const int tid = omp_get_thread_num();
            std::array<int, 32> perm{};
            Quaternion local;
#pragma omp for schedule(static)
            for (std::int64_t r = 0; r < static_cast<std::int64_t>(total); ++r) {
                detail::unrank_permutation(static_cast<std::uint64_t>(r), n,
                                           std::span<int>(perm.data(), n));
                local += term_fn(a, std::span<const int>(perm.data(), n), anchor);
            }
            partial[static_cast<std::size_t>(tid)] = std::move(local);
        }
        for (auto& p : partial) sum += p;
        return sum;
    }
#endif
    std::array<int, 32> perm{};
    for (std::uint64_t r = 0; r < total; ++r) {
        detail::unrank_permutation(r, n, std::span<int>(perm.data(), n));
        sum += term_fn(a, std::span<const int>(perm.data(), n), anchor);
    }
    return sum;
}

Quaternion hdet_unchecked(const QMatrix& a) {
    return expand(a, 1, detail::rdet_term, nullptr);
}

Rational to_real(const Quaternion& q, const char* what) {
    if (!q.is_real())
        throw internal_error(std::string(what) + " produced a non-real value");
    return q.w;
}

} // namespace

Quaternion rdet(std::size_t i, const QMatrix& a, DetStats* stats) {
    check_square_capped(a, "rdet");
    return expand(a, i, detail::rdet_term, stats);
}

Quaternion cdet(std::size_t j, const QMatrix& a, DetStats* stats) {
    check_square_capped(a, "cdet");
    return expand(a, j, detail::cdet_term, stats);
}

Rational hdet(const QMatrix& a) {
    check_square_capped(a, "hdet");
    if (!is_hermitian(a)) throw not_hermitian("hdet of a non-Hermitian matrix");
    return to_real(hdet_unchecked(a), "hdet");
}

Rational principal_minor_sum(const QMatrix& b, std::size_t r) {
    if (r == 0) return Rational(0);
    check_square_capped(b, "principal minor sum");
    if (!is_hermitian(b)) throw not_hermitian("principal minor sum of a non-Hermitian matrix");
    const std::size_t n = b.rows();
    if (r > n) throw index_out_of_range("minor order exceeds dimension");

    const auto subsets = IndexSet::all(r, n);
    const std::uint64_t work = static_cast<std::uint64_t>(subsets.size()) * detail::factorial(r);
    Rational sum(0);
    const int nthreads = effective_threads();
#ifdef _OPENMP
    if (nthreads > 1 && work >= kParallelCutoff) {
        std::vector<Rational> partial(static_cast<std::size_t>(nthreads), Rational(0));
        std::exception_ptr failure;
#pragma omp parallel num_threads(nthreads)
        {
            const int tid = omp_get_thread_num();
            Rational local(0);
#pragma omp for schedule(dynamic)
            for (std::int64_t s = 0; s < static_cast<std::int64_t>(subsets.size()); ++s) {
                try {
                    const auto& alpha = subsets[static_cast<std::size_t>(s)];
                    local += to_real(hdet_unchecked(submatrix(b, alpha, alpha)),
                                     "principal minor");
                } catch (...) {
#pragma omp critical(qgi_minor_sum_failure)
                    if (!failure) failure = std::current_exception();
                }
            }
            partial[static_cast<std::size_t>(tid)] = std::move(local);
        }
        if (failure) std::rethrow_exception(failure);
        for (auto& p : partial) sum += p;
        return sum;
    }
#endif
    for (const auto& alpha : subsets)
        sum += to_real(hdet_unchecked(submatrix(b, alpha, alpha)), "principal minor");
    return sum;
}

namespace {

template <bool kRowSide>
Quaternion replaced_minor_sum(const QMatrix& b, std::size_t anchor,
                              std::span<const Quaternion> repl, std::size_t r) {
    if (r == 0) return Quaternion();
    check_square_capped(b, kRowSide ? "rdet minor sum" : "cdet minor sum");
    if (!is_hermitian(b)) throw not_hermitian("replaced minor sum over a non-Hermitian matrix");
    const std::size_t n = b.rows();
    if (r > n) throw index_out_of_range("minor order exceeds dimension");
    if (anchor < 1 || anchor > n) throw index_out_of_range("replacement index out of range");
    if (repl.size() != n) throw dimension_mismatch("replacement vector length");

    // replace first; a principal submatrix through the anchor of the
    // replaced matrix equals the replaced principal submatrix
    std::vector<Quaternion> vec(repl.begin(), repl.end());
    const QMatrix replaced =
        kRowSide ? replace_row(b, anchor, vec) : replace_col(b, anchor, vec);

    const auto subsets = IndexSet::containing(r, n, anchor);
    const std::uint64_t work = static_cast<std::uint64_t>(subsets.size()) * detail::factorial(r);
    Quaternion sum;
    const int nthreads = effective_threads();
#ifdef _OPENMP
    if (nthreads > 1 && work >= kParallelCutoff) {
        std::vector<Quaternion> partial(static_cast<std::size_t>(nthreads));
        std::exception_ptr failure;
#pragma omp parallel num_threads(nthreads)
        {
            const int tid = omp_get_thread_num();
            Quaternion local;
#pragma omp for schedule(dynamic)
            for (std::int64_t s = 0; s < static_cast<std::int64_t>(subsets.size()); ++s) {
                try {
                    const auto& alpha = subsets[static_cast<std::size_t>(s)];
                    const QMatrix sub = submatrix(replaced, alpha, alpha);
                    const std::size_t local_anchor = alpha.position_of(anchor) + 1;
                    local += kRowSide ? expand(sub, local_anchor, detail::rdet_term, nullptr)
                                      : expand(sub, local_anchor, detail::cdet_term, nullptr);
                } catch (...) {
#pragma omp critical(qgi_minor_sum_failure)
                    if (!failure) failure = std::current_exception();
                }
            }
            partial[static_cast<std::size_t>(tid)] = std::move(local);
        }
        if (failure) std::rethrow_exception(failure);
        for (auto& p : partial) sum += p;
        return sum;
    }
#endif
    for (const auto& alpha : subsets) {
        const QMatrix sub = submatrix(replaced, alpha, alpha);
        const std::size_t local_anchor = alpha.position_of(anchor) + 1;
        sum += kRowSide ? expand(sub, local_anchor, detail::rdet_term, nullptr)
                        : expand(sub, local_anchor, detail::cdet_term, nullptr);
    }
    return sum;
}

} // namespace

Quaternion rdet_minor_sum(const QMatrix& b, std::size_t j,
                          std::span<const Quaternion> repl, std::size_t r) {
    return replaced_minor_sum<true>(b, j, repl, r);
}

Quaternion cdet_minor_sum(const QMatrix& b, std::size_t i,
                          std::span<const Quaternion> repl, std::size_t r) {
    return replaced_minor_sum<false>(b, i, repl, r);
}

} // namespace qgi
