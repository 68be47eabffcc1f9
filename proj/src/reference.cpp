#include "qgi/reference.hpp"

#include "qgi/config.hpp"
#include "qgi/errors.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace qgi::ref {

namespace {

struct Cycle {
    std::vector<int> elems; // starting element first, 0-based
    int min = 0;
};

// Decompose perm into cycles, each rotated so that the preferred start
// (the anchor for its own cycle, the minimum otherwise) comes first.
std::vector<Cycle> cycles_of(std::span<const int> perm, int anchor) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Cycle> out;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        Cycle cyc;
        int c = s;
        do {
            seen[static_cast<std::size_t>(c)] = true;
            cyc.elems.push_back(c);
            c = perm[static_cast<std::size_t>(c)];
        } while (c != s);
        cyc.min = *std::min_element(cyc.elems.begin(), cyc.elems.end());
        int start = std::find(cyc.elems.begin(), cyc.elems.end(), anchor) != cyc.elems.end()
                        ? anchor
                        : cyc.min;
        auto it = std::find(cyc.elems.begin(), cyc.elems.end(), start);
        std::rotate(cyc.elems.begin(), it, cyc.elems.end());
        out.push_back(std::move(cyc));
    }
    return out;
}

Quaternion chain(const QMatrix& a, const Cycle& cyc) {
    Quaternion prod(1);
    const std::size_t len = cyc.elems.size();
    for (std::size_t t = 0; t < len; ++t) {
        std::size_t from = static_cast<std::size_t>(cyc.elems[t]) + 1;
        std::size_t to = static_cast<std::size_t>(cyc.elems[(t + 1) % len]) + 1;
        prod *= a(from, to);
    }
    return prod;
}

enum class Side { row, column };

Quaternion expand_serial(const QMatrix& a, std::size_t anchor_1based, Side side,
                         DetStats* stats) {
    if (a.rows() != a.cols() || a.rows() == 0)
        throw dimension_mismatch("determinant of a non-square or empty matrix");
    if (a.rows() > config::max_dim())
        throw dimension_cap_exceeded("reference expansion exceeds the dimension cap");
    const std::size_t n = a.rows();
    if (anchor_1based < 1 || anchor_1based > n)
        throw index_out_of_range("determinant anchor index out of range");
    const int anchor = static_cast<int>(anchor_1based) - 1;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Quaternion sum;
    std::uint64_t terms = 0;
    do {
        auto cycles = cycles_of(perm, anchor);
        // anchor cycle out, the rest ordered by their minima
        auto anchor_it = std::find_if(cycles.begin(), cycles.end(), [&](const Cycle& c) {
            return c.elems.front() == anchor;
        });
        Cycle anchor_cycle = std::move(*anchor_it);
        cycles.erase(anchor_it);
        std::sort(cycles.begin(), cycles.end(),
                  [](const Cycle& a_, const Cycle& b_) { return a_.min < b_.min; });

        Quaternion term(1);
        if (side == Side::row) {
            term = chain(a, anchor_cycle);
            for (const auto& c : cycles) term *= chain(a, c);
        } else {
            for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) term *= chain(a, *it);
            term *= chain(a, anchor_cycle);
        }
        std::size_t ncycles = cycles.size() + 1;
        if ((n - ncycles) % 2 != 0) term = -term;
        sum += term;
        ++terms;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (stats) stats->terms = terms;
    return sum;
}

} // namespace

Quaternion rdet(std::size_t i, const QMatrix& a, DetStats* stats) {
    return expand_serial(a, i, Side::row, stats);
}

Quaternion cdet(std::size_t j, const QMatrix& a, DetStats* stats) {
    return expand_serial(a, j, Side::column, stats);
}

Rational hdet(const QMatrix& a) {
    if (!is_hermitian(a)) throw not_hermitian("hdet of a non-Hermitian matrix");
    Quaternion v = expand_serial(a, 1, Side::row, nullptr);
    if (!v.is_real()) throw internal_error("reference hdet produced a non-real value");
    return v.w;
}

Rational principal_minor_sum(const QMatrix& b, std::size_t r) {
    if (r == 0) return Rational(0);
    if (!is_hermitian(b)) throw not_hermitian("principal minor sum of a non-Hermitian matrix");
    Rational sum(0);
    for (const auto& alpha : IndexSet::all(r, b.rows()))
        sum += ref::hdet(submatrix(b, alpha, alpha));
    return sum;
}

Quaternion rdet_minor_sum(const QMatrix& b, std::size_t j,
                          std::span<const Quaternion> repl, std::size_t r) {
    if (r == 0) return Quaternion();
    if (!is_hermitian(b)) throw not_hermitian("replaced minor sum over a non-Hermitian matrix");
    if (repl.size() != b.cols()) throw dimension_mismatch("replacement vector length");
    std::vector<Quaternion> vec(repl.begin(), repl.end());
    const QMatrix replaced = replace_row(b, j, vec);
    Quaternion sum;
    for (const auto& alpha : IndexSet::containing(r, b.rows(), j))
        sum += ref::rdet(alpha.position_of(j) + 1, submatrix(replaced, alpha, alpha));
    return sum;
}

Quaternion cdet_minor_sum(const QMatrix& b, std::size_t i,
                          std::span<const Quaternion> repl, std::size_t r) {
    if (r == 0) return Quaternion();
    if (!is_hermitian(b)) throw not_hermitian("replaced minor sum over a non-Hermitian matrix");
    if (repl.size() != b.rows()) throw dimension_mismatch("replacement vector length");
    std::vector<Quaternion> vec(repl.begin(), repl.end());
    const QMatrix replaced = replace_col(b, i, vec);
    Quaternion sum;
    for (const auto& alpha : IndexSet::containing(r, b.rows(), i))
        sum += ref::cdet(alpha.position_of(i) + 1, submatrix(replaced, alpha, alpha));
    return sum;
}

} // namespace qgi::ref
