#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgi/errors.hpp"
#include "qgi/nc_determinant.hpp"
#include "qgi/oracle.hpp"
#include "qgi/weighted_family.hpp"

#include "test_support.hpp"

#include <random>

using namespace qgi;
using qgi::test::q;
using qgi::test::random_hermitian;
using qgi::test::random_matrix;
namespace ex = qgi::test::worked_example;

TEST_CASE("weighted core-EP right") {
    // identity weight on a nonsingular matrix: the plain inverse
    QMatrix a{{q("1"), q("j")}, {q("i"), q("2")}};
    WeightedPair nw(a, QMatrix::identity(2));
    CHECK(wcep_right(nw) * a == QMatrix::identity(2));

    std::mt19937_64 rng(51);
    for (int t = 0; t < 15; ++t) {
        std::size_t m = 1 + t % 3, n = 1 + (t / 2) % 3;
        QMatrix b = random_matrix(rng, m, n);
        WeightedPair p(b, random_matrix(rng, n, m));
        QMatrix x = wcep_right(p);
        CHECK(x.rows() == m);
        CHECK(x.cols() == n);
        CHECK(x == oracle::compose_wcep_right(p));
        CHECK(oracle::verify_system("wcep_right", p.a, p.w, x).all_hold());
    }
}

TEST_CASE("weighted core-EP left") {
    std::mt19937_64 rng(52);
    for (int t = 0; t < 15; ++t) {
        std::size_t m = 1 + t % 3, n = 1 + (t / 2) % 3;
        QMatrix b = random_matrix(rng, m, n);
        WeightedPair p(b, random_matrix(rng, n, m));
        QMatrix x = wcep_left(p);
        CHECK(x.rows() == m);
        CHECK(x.cols() == n);
        CHECK(x == oracle::compose_wcep_left(p));
        CHECK(oracle::verify_system("wcep_left", p.a, p.w, x).all_hold());
    }
    // Hermitian index-1 matrix with identity weight: the left core inverse
    for (int t = 0; t < 8; ++t) {
        QMatrix h = random_hermitian(rng, 2);
        if (index_of(h) > 1) continue;
        WeightedPair p(h, QMatrix::identity(2));
        CHECK(wcep_left(p) == core_left(h));
    }
}

TEST_CASE("wdmp reproduces the worked example with its trace") {
    WeightedPair pair(ex::a(), ex::w());
    Trace trace;
    QMatrix x = wdmp(pair, Variant::general_u, &trace);
    CHECK(x == ex::wdmp_expected());

    REQUIRE(trace.steps.size() == 5);
    CHECK(trace.steps[0].first == "U_check");
    // the tabulated step-1 matrix is the reversed product; the pipeline
    // value differs and equals the tabulated Phi_hat for this data
    QMatrix u5s = conj_transpose(ex::u5());
    CHECK(trace.steps[0].second == ex::u2() * u5s);
    CHECK(u5s * ex::u2() == ex::u_check_tabulated());
    CHECK(trace.steps[1].first == "Phi");
    CHECK(trace.steps[1].second == ex::phi());
    CHECK(trace.steps[2].first == "Phi_hat");
    CHECK(trace.steps[2].second == ex::phi_hat());
    CHECK(trace.steps[3].first == "Omega");
    CHECK(trace.steps[3].second == ex::phi()); // Omega collapses to Phi here
    CHECK(trace.steps[4].first == "Omega_tilde");
    CHECK(trace.steps[4].second == ex::omega_tilde());

    CHECK(oracle::verify_system("wdmp", ex::a(), ex::w(), x).all_hold());
}

TEST_CASE("wdmp equals its closed-form transcription") {
    // the pipeline is an evaluation order for the closed formula; evaluate
    // the formula directly for every entry on the worked example
    WeightedPair pair(ex::a(), ex::w());
    const std::size_t k = pair.k, r = pair.rank_a, r1 = pair.rank_uk;
    const QMatrix u2k1 = power(pair.u, 2 * k + 1);
    const QMatrix gram = u2k1 * conj_transpose(u2k1);
    const QMatrix ucheck = power(pair.u, k) * conj_transpose(u2k1);
    const QMatrix aas = pair.a * conj_transpose(pair.a);
    QMatrix phi(3, 3), omega(3, 3);
    for (std::size_t l = 1; l <= 3; ++l)
        for (std::size_t c = 1; c <= 3; ++c)
            phi(l, c) = rdet_minor_sum(gram, c, ucheck.row(l), r1);
    const QMatrix phihat = pair.u * phi * power(pair.u, 2 * k) * conj_transpose(u2k1);
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t s = 1; s <= 3; ++s)
            omega(i, s) = rdet_minor_sum(gram, s, phihat.row(i), r1);
    const QMatrix omt = omega * power(pair.u, k + 1) * conj_transpose(pair.a);
    const Rational du = principal_minor_sum(gram, r1);
    const Rational den = principal_minor_sum(aas, r) * du * du;
    QMatrix direct(3, 4);
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= 4; ++j)
            direct(i, j) = rdet_minor_sum(aas, j, omt.row(i), r) / den;
    CHECK(direct == wdmp(pair, Variant::general_u));
}

TEST_CASE("wdmp/wmpd/wcmp match their compositions on random pairs") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 12; ++t) {
        std::size_t m = 1 + t % 3, n = 1 + (t / 2) % 3;
        QMatrix b = random_matrix(rng, m, n);
        WeightedPair p(b, random_matrix(rng, n, m));

        QMatrix dmp = wdmp(p, Variant::general_u);
        CHECK(dmp.rows() == n);
        CHECK(dmp.cols() == m);
        CHECK(dmp == oracle::compose_wdmp(p));
        CHECK(oracle::verify_system("wdmp", p.a, p.w, dmp).all_hold());

        QMatrix mpd = wmpd(p, Variant::general_v);
        CHECK(mpd.rows() == n);
        CHECK(mpd.cols() == m);
        CHECK(mpd == oracle::compose_wmpd(p));
        CHECK(oracle::verify_system("wmpd", p.a, p.w, mpd).all_hold());

        QMatrix cmp_u = wcmp(p, Variant::general_u);
        QMatrix cmp_v = wcmp(p, Variant::general_v);
        CHECK(cmp_u == cmp_v);
        CHECK(cmp_u == oracle::compose_wcmp(p));
        CHECK(oracle::verify_system("wcmp", p.a, p.w, cmp_u).all_hold());
    }
}

TEST_CASE("Hermitian variants agree with the general ones") {
    std::mt19937_64 rng(54);
    for (int t = 0; t < 8; ++t) {
        std::size_t m = 1 + t % 3, n = 1 + (t / 2) % 3;
        QMatrix b = random_matrix(rng, m, n);
        WeightedPair p(b, conj_transpose(b)); // both products Hermitian

        CHECK(wdmp(p, Variant::hermitian_wa) == wdmp(p, Variant::general_u));
        CHECK(wmpd(p, Variant::hermitian_aw) == wmpd(p, Variant::general_v));
        QMatrix cmp = wcmp(p, Variant::general_u);
        CHECK(wcmp(p, Variant::hermitian_wa) == cmp);
        CHECK(wcmp(p, Variant::hermitian_aw) == cmp);
        CHECK(wcmp(p, Variant::general_v) == cmp);
        // auto resolves to a Hermitian form here and must agree too
        CHECK(wdmp(p) == wdmp(p, Variant::general_u));
        CHECK(wcmp(p) == cmp);
    }
    WeightedPair pair(ex::a(), ex::w());
    CHECK_THROWS_AS(wdmp(pair, Variant::hermitian_wa), not_hermitian);
    CHECK_THROWS_AS(wmpd(pair, Variant::hermitian_aw), not_hermitian);
    CHECK_THROWS_AS(wcmp(pair, Variant::hermitian_aw), not_hermitian);
}

TEST_CASE("identity-weight reductions") {
    std::mt19937_64 rng(55);
    for (int t = 0; t < 8; ++t) {
        std::size_t n = 1 + t % 3;
        QMatrix a = random_matrix(rng, n, n);
        WeightedPair p(a, QMatrix::identity(n));
        QMatrix ad = oracle::drazin(a);
        QMatrix adag = oracle::mp(a);
        CHECK(wdmp(p) == ad * a * adag);
        CHECK(wmpd(p) == adag * a * ad);
        CHECK(wcmp(p) == adag * a * ad * a * adag);
    }
}

TEST_CASE("degenerate ranks give zero matrices") {
    QMatrix nil{{q("0"), q("1")}, {q("0"), q("0")}};
    WeightedPair p(nil, QMatrix::identity(2));
    CHECK(wdmp(p) == QMatrix::zero(2, 2));
    CHECK(wmpd(p) == QMatrix::zero(2, 2));
    CHECK(wcmp(p) == QMatrix::zero(2, 2));
    CHECK(wcep_right(p) == QMatrix::zero(2, 2));
    CHECK(wcep_left(p) == QMatrix::zero(2, 2));

    WeightedPair z(QMatrix::zero(2, 3), QMatrix::zero(3, 2));
    CHECK(wdmp(z) == QMatrix::zero(3, 2));
    CHECK(wcep_right(z) == QMatrix::zero(2, 3));
}
