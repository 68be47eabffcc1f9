#include "qgi/weighted_family.hpp"

#include "qgi/errors.hpp"
#include "qgi/nc_determinant.hpp"

namespace qgi {

namespace {

Rational nonzero_denominator(Rational d, const char* where) {
    if (d.is_zero())
        throw internal_error(std::string(where) +
                             ": zero determinantal denominator (rank precondition violated)");
    return d;
}

void trace_add(Trace* trace, const char* name, const QMatrix& m) {
    if (trace) trace->add(name, m);
}

Variant resolve(const WeightedPair& pair, Variant v, bool u_side_exists, bool v_side_exists) {
    switch (v) {
    case Variant::auto_select:
        if (u_side_exists && is_hermitian(pair.u)) return Variant::hermitian_wa;
        if (v_side_exists && is_hermitian(pair.v)) return Variant::hermitian_aw;
        [[fallthrough]];
    case Variant::general:
        if (u_side_exists && (!v_side_exists || pair.n() <= pair.m())) return Variant::general_u;
        return Variant::general_v;
    default:
        return v;
    }
}

} // namespace

QMatrix wcep_right(const WeightedPair& pair, Trace* trace) {
    const std::size_t m = pair.m(), n = pair.n(), k = pair.k;
    const std::size_t s = pair.rank_uk;
    if (s == 0) return QMatrix::zero(m, n);

    const QMatrix uk1 = power(pair.u, k + 1);
    const QMatrix uk1s = conj_transpose(uk1);
    const QMatrix gram = uk1 * uk1s; // n x n
    const QMatrix util = pair.a * power(pair.u, k) * uk1s; // m x n
    trace_add(trace, "U_tilde", util);

    QMatrix phi(m, n);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t f = 1; f <= n; ++f)
            phi(i, f) = rdet_minor_sum(gram, f, util.row(i), s);
    trace_add(trace, "Phi", phi);

    const QMatrix phi_tilde = phi * power(pair.u, k) * uk1s; // m x n
    trace_add(trace, "Phi_tilde", phi_tilde);

    const Rational den1 = nonzero_denominator(principal_minor_sum(gram, s), "wcep (right)");
    const Rational den = den1 * den1;
    QMatrix x(m, n);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            x(i, j) = rdet_minor_sum(gram, j, phi_tilde.row(i), s) / den;
    return x;
}

QMatrix wcep_left(const WeightedPair& pair, Trace* trace) {
    const std::size_t m = pair.m(), n = pair.n(), k = pair.k;
    const std::size_t s = pair.rank_vk;
    if (s == 0) return QMatrix::zero(m, n);

    const QMatrix vk1 = power(pair.v, k + 1);
    const QMatrix vk1s = conj_transpose(vk1);
    const QMatrix gram = vk1s * vk1; // m x m
    const QMatrix vtil = vk1s * power(pair.v, k) * pair.a; // m x n
    trace_add(trace, "V_tilde", vtil);

    QMatrix psi(m, n);
    for (std::size_t l = 1; l <= m; ++l)
        for (std::size_t j = 1; j <= n; ++j)
            psi(l, j) = cdet_minor_sum(gram, l, vtil.col(j), s);
    trace_add(trace, "Psi", psi);

    const QMatrix psi_tilde = vk1s * power(pair.v, k) * psi; // m x n
    trace_add(trace, "Psi_tilde", psi_tilde);

    const Rational den1 = nonzero_denominator(principal_minor_sum(gram, s), "wcep (left)");
    const Rational den = den1 * den1;
    QMatrix x(m, n);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            x(i, j) = cdet_minor_sum(gram, i, psi_tilde.col(j), s) / den;
    return x;
}

QMatrix wdmp(const WeightedPair& pair, Variant variant, Trace* trace) {
    const std::size_t m = pair.m(), n = pair.n(), k = pair.k;
    const std::size_t r = pair.rank_a;
    const std::size_t r1 = pair.rank_uk;
    if (r == 0 || r1 == 0) return QMatrix::zero(n, m);
    variant = resolve(pair, variant, true, false);

    const QMatrix aas = pair.a * conj_transpose(pair.a); // m x m
    const Rational den_a = nonzero_denominator(principal_minor_sum(aas, r), "wdmp");

    QMatrix omega_tilde(n, m);
    Rational den(0);
    if (variant == Variant::general_u) {
        const QMatrix uk = power(pair.u, k);
        const QMatrix u2k1 = power(pair.u, 2 * k + 1);
        const QMatrix u2k1s = conj_transpose(u2k1);
        const QMatrix gram = u2k1 * u2k1s; // n x n
        const QMatrix ucheck = uk * u2k1s;
        trace_add(trace, "U_check", ucheck);

        QMatrix phi(n, n);
        for (std::size_t l = 1; l <= n; ++l)
            for (std::size_t q = 1; q <= n; ++q)
                phi(l, q) = rdet_minor_sum(gram, q, ucheck.row(l), r1);
        trace_add(trace, "Phi", phi);

        const QMatrix phi_hat = pair.u * phi * power(pair.u, 2 * k) * u2k1s; // n x n
        trace_add(trace, "Phi_hat", phi_hat);

        QMatrix omega(n, n);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t s = 1; s <= n; ++s)
                omega(i, s) = rdet_minor_sum(gram, s, phi_hat.row(i), r1);
        trace_add(trace, "Omega", omega);

        omega_tilde = omega * power(pair.u, k + 1) * conj_transpose(pair.a);
        const Rational den_u = nonzero_denominator(principal_minor_sum(gram, r1), "wdmp");
        den = den_a * den_u * den_u;
    } else if (variant == Variant::hermitian_wa) {
        if (!is_hermitian(pair.u)) throw not_hermitian("wdmp Hermitian variant: w*a");
        const QMatrix host = power(pair.u, k + 2);
        const QMatrix uhat = power(pair.u, k + 1);
        trace_add(trace, "U_hat", uhat);

        QMatrix omega(n, n);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t s = 1; s <= n; ++s)
                omega(i, s) = rdet_minor_sum(host, s, uhat.row(i), r1);
        trace_add(trace, "Omega", omega);

        omega_tilde = omega * pair.u * conj_transpose(pair.a);
        den = den_a * nonzero_denominator(principal_minor_sum(host, r1), "wdmp");
    } else {
        throw dimension_mismatch("wdmp has no a*w-side variant");
    }
    trace_add(trace, "Omega_tilde", omega_tilde);

    QMatrix x(n, m);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j)
            x(i, j) = rdet_minor_sum(aas, j, omega_tilde.row(i), r) / den;
    return x;
}

QMatrix wmpd(const WeightedPair& pair, Variant variant, Trace* trace) {
    const std::size_t m = pair.m(), n = pair.n(), k = pair.k;
    const std::size_t r = pair.rank_a;
    const std::size_t r1 = pair.rank_vk;
    if (r == 0 || r1 == 0) return QMatrix::zero(n, m);
    variant = resolve(pair, variant, false, true);

    const QMatrix asa = conj_transpose(pair.a) * pair.a; // n x n
    const Rational den_a = nonzero_denominator(principal_minor_sum(asa, r), "wmpd");

    QMatrix upsilon_tilde(n, m);
    Rational den(0);
    if (variant == Variant::general_v) {
        const QMatrix vk = power(pair.v, k);
        const QMatrix v2k1 = power(pair.v, 2 * k + 1);
        const QMatrix v2k1s = conj_transpose(v2k1);
        const QMatrix gram = v2k1s * v2k1; // m x m
        const QMatrix vhat = v2k1s * vk;
        trace_add(trace, "V_hat", vhat);

        QMatrix psi(m, m);
        for (std::size_t s = 1; s <= m; ++s)
            for (std::size_t l = 1; l <= m; ++l)
                psi(s, l) = cdet_minor_sum(gram, s, vhat.col(l), r1);
        trace_add(trace, "Psi", psi);

        const QMatrix psi_hat = v2k1s * power(pair.v, 2 * k) * psi * pair.v; // m x m
        trace_add(trace, "Psi_hat", psi_hat);

        QMatrix upsilon(m, m);
        for (std::size_t t = 1; t <= m; ++t)
            for (std::size_t j = 1; j <= m; ++j)
                upsilon(t, j) = cdet_minor_sum(gram, t, psi_hat.col(j), r1);
        trace_add(trace, "Upsilon", upsilon);

        upsilon_tilde = conj_transpose(pair.a) * power(pair.v, k + 1) * upsilon;
        const Rational den_v = nonzero_denominator(principal_minor_sum(gram, r1), "wmpd");
        // the defining composition carries the a*w-side denominator twice
        den = den_a * den_v * den_v;
    } else if (variant == Variant::hermitian_aw) {
        if (!is_hermitian(pair.v)) throw not_hermitian("wmpd Hermitian variant: a*w");
        const QMatrix host = power(pair.v, k + 2);
        const QMatrix vtil = power(pair.v, k + 1);
        trace_add(trace, "V_tilde", vtil);

        QMatrix upsilon(m, m);
        for (std::size_t s = 1; s <= m; ++s)
            for (std::size_t j = 1; j <= m; ++j)
                upsilon(s, j) = cdet_minor_sum(host, s, vtil.col(j), r1);
        trace_add(trace, "Upsilon", upsilon);

        // a* (aw) prefix and a single host denominator, the exact mirror of
        // the wdmp Hermitian case
        upsilon_tilde = conj_transpose(pair.a) * pair.v * upsilon;
        den = den_a * nonzero_denominator(principal_minor_sum(host, r1), "wmpd");
    } else {
        throw dimension_mismatch("wmpd has no w*a-side variant");
    }
    trace_add(trace, "Upsilon_tilde", upsilon_tilde);

    QMatrix x(n, m);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j)
            x(i, j) = cdet_minor_sum(asa, i, upsilon_tilde.col(j), r) / den;
    return x;
}

QMatrix wcmp(const WeightedPair& pair, Variant variant, Trace* trace) {
    const std::size_t m = pair.m(), n = pair.n(), k = pair.k;
    const std::size_t r = pair.rank_a;
    if (r == 0) return QMatrix::zero(n, m);
    variant = resolve(pair, variant, true, true);
    const std::size_t r1 =
        (variant == Variant::general_u || variant == Variant::hermitian_wa) ? pair.rank_uk
                                                                            : pair.rank_vk;
    if (r1 == 0) return QMatrix::zero(n, m);

    const QMatrix astar = conj_transpose(pair.a);
    const QMatrix asa = astar * pair.a; // n x n
    const QMatrix aas = pair.a * astar; // m x m
    const Rational den_a = nonzero_denominator(principal_minor_sum(asa, r), "wcmp");

    QMatrix x(n, m);
    switch (variant) {
    case Variant::general_u: {
        const QMatrix uk = power(pair.u, k);
        const QMatrix u2k1 = power(pair.u, 2 * k + 1);
        const QMatrix u2k1s = conj_transpose(u2k1);
        const QMatrix gram = u2k1 * u2k1s; // n x n
        const QMatrix ucheck = uk * u2k1s;
        trace_add(trace, "U_check", ucheck);

        QMatrix phi(n, n);
        for (std::size_t l = 1; l <= n; ++l)
            for (std::size_t q = 1; q <= n; ++q)
                phi(l, q) = rdet_minor_sum(gram, q, ucheck.row(l), r1);
        trace_add(trace, "Phi", phi);

        const QMatrix phi_tilde = pair.a * phi * power(pair.u, 2 * k) * u2k1s; // m x n
        trace_add(trace, "Phi_tilde", phi_tilde);

        QMatrix phi_hat(m, n);
        for (std::size_t t = 1; t <= m; ++t)
            for (std::size_t z = 1; z <= n; ++z)
                phi_hat(t, z) = rdet_minor_sum(gram, z, phi_tilde.row(t), r1);
        trace_add(trace, "Phi_hat", phi_hat);

        const QMatrix phi1 = asa * pair.w * phi_hat; // n x n
        trace_add(trace, "Phi_1", phi1);

        QMatrix omega(n, n);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t z = 1; z <= n; ++z)
                omega(i, z) = cdet_minor_sum(asa, i, phi1.col(z), r);
        trace_add(trace, "Omega", omega);

        const QMatrix omega_tilde = omega * power(pair.u, k + 1) * astar; // n x m
        trace_add(trace, "Omega_tilde", omega_tilde);

        const Rational den_u = nonzero_denominator(principal_minor_sum(gram, r1), "wcmp");
        const Rational den = den_a * den_a * den_u * den_u;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= m; ++j)
                x(i, j) = rdet_minor_sum(aas, j, omega_tilde.row(i), r) / den;
        return x;
    }
    case Variant::general_v: {
        const QMatrix vk = power(pair.v, k);
        const QMatrix v2k1 = power(pair.v, 2 * k + 1);
        const QMatrix v2k1s = conj_transpose(v2k1);
        const QMatrix gram = v2k1s * v2k1; // m x m
        const QMatrix vhat = v2k1s * vk;
        trace_add(trace, "V_hat", vhat);

        QMatrix psi(m, m);
        for (std::size_t l = 1; l <= m; ++l)
            for (std::size_t t = 1; t <= m; ++t)
                psi(l, t) = cdet_minor_sum(gram, l, vhat.col(t), r1);
        trace_add(trace, "Psi", psi);

        const QMatrix psi_tilde = v2k1s * power(pair.v, 2 * k) * psi * pair.a; // m x n
        trace_add(trace, "Psi_tilde", psi_tilde);

        QMatrix psi_hat(m, n);
        for (std::size_t z = 1; z <= m; ++z)
            for (std::size_t s = 1; s <= n; ++s)
                psi_hat(z, s) = cdet_minor_sum(gram, z, psi_tilde.col(s), r1);
        trace_add(trace, "Psi_hat", psi_hat);

        const QMatrix psi1 = psi_hat * pair.u * astar; // m x m
        trace_add(trace, "Psi_1", psi1);

        QMatrix upsilon(m, m);
        for (std::size_t z = 1; z <= m; ++z)
            for (std::size_t j = 1; j <= m; ++j)
                upsilon(z, j) = rdet_minor_sum(aas, j, psi1.row(z), r);
        trace_add(trace, "Upsilon", upsilon);

        const QMatrix upsilon_tilde = astar * power(pair.v, k + 1) * upsilon; // n x m
        trace_add(trace, "Upsilon_tilde", upsilon_tilde);

        const Rational den_v = nonzero_denominator(principal_minor_sum(gram, r1), "wcmp");
        // both projector denominators and the squared a*w-side denominator
        const Rational den = den_a * den_a * den_v * den_v;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= m; ++j)
                x(i, j) = cdet_minor_sum(asa, i, upsilon_tilde.col(j), r) / den;
        return x;
    }
    case Variant::hermitian_wa: {
        if (!is_hermitian(pair.u)) throw not_hermitian("wcmp Hermitian variant: w*a");
        const QMatrix w1 = asa * pair.w; // n x m
        trace_add(trace, "W_1", w1);

        QMatrix phi(n, m);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t t = 1; t <= m; ++t)
                phi(i, t) = cdet_minor_sum(asa, i, w1.col(t), r);
        trace_add(trace, "Phi", phi);

        const QMatrix phi1 = phi * pair.a * power(pair.u, k); // n x n
        trace_add(trace, "Phi_1", phi1);

        const QMatrix host = power(pair.u, k + 2);
        QMatrix omega(n, n);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t s = 1; s <= n; ++s)
                omega(i, s) = rdet_minor_sum(host, s, phi1.row(i), r1);
        trace_add(trace, "Omega", omega);

        const QMatrix omega_tilde = omega * pair.u * astar; // n x m
        trace_add(trace, "Omega_tilde", omega_tilde);

        const Rational den = den_a * den_a *
                             nonzero_denominator(principal_minor_sum(host, r1), "wcmp");
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= m; ++j)
                x(i, j) = rdet_minor_sum(aas, j, omega_tilde.row(i), r) / den;
        return x;
    }
    case Variant::hermitian_aw: {
        if (!is_hermitian(pair.v)) throw not_hermitian("wcmp Hermitian variant: a*w");
        const QMatrix w2 = pair.w * aas; // n x m
        trace_add(trace, "W_2", w2);

        QMatrix psi(n, m);
        for (std::size_t s = 1; s <= n; ++s)
            for (std::size_t j = 1; j <= m; ++j)
                psi(s, j) = rdet_minor_sum(aas, j, w2.row(s), r);
        trace_add(trace, "Psi", psi);

        const QMatrix psi1 = power(pair.v, k) * pair.a * psi; // m x m
        trace_add(trace, "Psi_1", psi1);

        const QMatrix host = power(pair.v, k + 2);
        QMatrix upsilon(m, m);
        for (std::size_t t = 1; t <= m; ++t)
            for (std::size_t j = 1; j <= m; ++j)
                upsilon(t, j) = cdet_minor_sum(host, t, psi1.col(j), r1);
        trace_add(trace, "Upsilon", upsilon);

        const QMatrix upsilon_tilde = asa * pair.w * upsilon; // n x m
        trace_add(trace, "Upsilon_tilde", upsilon_tilde);

        const Rational den = den_a * den_a *
                             nonzero_denominator(principal_minor_sum(host, r1), "wcmp");
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= m; ++j)
                x(i, j) = cdet_minor_sum(asa, i, upsilon_tilde.col(j), r) / den;
        return x;
    }
    default:
        throw unknown_system("unresolved wcmp variant");
    }
}

} // namespace qgi
