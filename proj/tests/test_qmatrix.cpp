#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgi/cmatrix.hpp"
#include "qgi/errors.hpp"
#include "qgi/nc_determinant.hpp"
#include "qgi/qmatrix.hpp"

#include "test_support.hpp"

#include <random>

using namespace qgi;
using qgi::test::q;
using qgi::test::random_matrix;
namespace ex = qgi::test::worked_example;

TEST_CASE("products reproduce the worked-example pair") {
    CHECK(ex::w() * ex::a() == ex::u());
    CHECK(ex::a() * ex::w() == ex::v());
    CHECK(QMatrix::identity(4) * ex::a() == ex::a());
    CHECK_THROWS_AS(ex::a() * ex::a(), dimension_mismatch);
}

TEST_CASE("conjugate transpose") {
    CHECK(conj_transpose(ex::a()) * ex::a() == ex::asa());
    CHECK(ex::a() * conj_transpose(ex::a()) == ex::aas());
    CHECK(conj_transpose(conj_transpose(ex::a())) == ex::a());
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        QMatrix a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 2);
        CHECK(conj_transpose(a * b) == conj_transpose(b) * conj_transpose(a));
    }
}

TEST_CASE("powers") {
    CHECK(power(ex::u(), 2) == ex::u2());
    CHECK(power(ex::u(), 5) == ex::u5());
    CHECK(power(ex::a() * ex::w(), 0) == QMatrix::identity(4));
    CHECK_THROWS_AS(power(ex::a(), 2), dimension_mismatch);
}

TEST_CASE("submatrix and replacement") {
    QMatrix g = ex::asa();
    IndexSet all12({1, 2});
    QMatrix corner{{q("3"), q("-2*k")}, {q("2*k"), q("3")}};
    CHECK(submatrix(g, all12, all12) == corner);
    IndexSet full({1, 2, 3});
    CHECK(submatrix(g, full, full) == g);
    QMatrix one = submatrix(g, IndexSet({2}), IndexSet({3}));
    CHECK(one.rows() == 1);
    CHECK(one(1, 1) == q("2*i"));

    CHECK(replace_row(g, 2, g.row(2)) == g);
    QMatrix id = QMatrix::identity(2);
    QMatrix swapped = replace_col(id, 1, {q("0"), q("1")});
    CHECK(swapped(1, 1) == q("0"));
    CHECK(swapped(2, 1) == q("1"));
    CHECK_THROWS_AS(replace_row(g, 4, g.row(1)), index_out_of_range);
    CHECK_THROWS_AS(replace_row(g, 1, {q("1")}), dimension_mismatch);

    CHECK_THROWS_AS(IndexSet({2, 2}), index_out_of_range);
    CHECK_THROWS_AS(IndexSet({}), index_out_of_range);
    CHECK(IndexSet::all(2, 4).size() == 6);
    CHECK(IndexSet::containing(2, 4, 3).size() == 3);
}

TEST_CASE("complex embedding is a star-algebra homomorphism") {
    QMatrix jq(1, 1);
    jq(1, 1) = Quaternion::unit_j();
    CMatrix e = complex_embedding(jq);
    CHECK(e(1, 1) == Complex(0));
    CHECK(e(1, 2) == Complex(1));
    CHECK(e(2, 1) == Complex(-1));
    CHECK(e(2, 2) == Complex(0));

    CHECK(complex_embedding(QMatrix::identity(3)) == CMatrix::identity(6));
    CHECK(complex_embedding(ex::a()) * complex_embedding(ex::w()) ==
          complex_embedding(ex::a() * ex::w()));

    std::mt19937_64 rng(12);
    for (int t = 0; t < 25; ++t) {
        QMatrix a = random_matrix(rng, 2, 3), b = random_matrix(rng, 2, 3),
                c = random_matrix(rng, 3, 2);
        CHECK(complex_embedding(a + b) == complex_embedding(a) + complex_embedding(b));
        CHECK(complex_embedding(a * c) == complex_embedding(a) * complex_embedding(c));
        CHECK(complex_embedding(conj_transpose(a)) == c_conj_transpose(complex_embedding(a)));
        CHECK(embedding_to_quaternion(complex_embedding(a)) == a);
        CHECK(c_rank(complex_embedding(a)) % 2 == 0);
    }
}

TEST_CASE("rank") {
    CHECK(rank(ex::a()) == 3);
    CHECK(rank(ex::w()) == 3);
    CHECK(rank(ex::v()) == 3);
    CHECK(rank(power(ex::v(), 3)) == 2);
    CHECK(rank(power(ex::v(), 2)) == 2);
    CHECK(rank(ex::u()) == 2);
    CHECK(rank(power(ex::u(), 2)) == 2);
    CHECK(rank(QMatrix::zero(2, 3)) == 0);

    // cross-check against the determinantal rank: the largest r with a
    // nonzero r x r principal minor of a* a
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        QMatrix a = random_matrix(rng, 3, 3);
        const QMatrix gram = conj_transpose(a) * a;
        std::size_t det_rank = 0;
        for (std::size_t r = 1; r <= 3; ++r)
            for (const auto& alpha : IndexSet::all(r, 3))
                if (!hdet(submatrix(gram, alpha, alpha)).is_zero()) {
                    det_rank = r;
                    break;
                }
        CHECK(rank(a) == det_rank);
        CHECK(rank(a) == rank(gram));
        CHECK(rank(a) == rank(a * conj_transpose(a)));
    }
}

TEST_CASE("index") {
    CHECK(index_of(ex::v()) == 2);
    CHECK(index_of(ex::u()) == 1);
    CHECK(index_of(QMatrix::identity(3)) == 0);
    QMatrix nil{{q("0"), q("1")}, {q("0"), q("0")}}; // ranks of powers: 1, 0, 0
    CHECK(index_of(nil) == 2);
    CHECK_THROWS_AS(index_of(ex::a()), dimension_mismatch);
}
