#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgi/errors.hpp"
#include "qgi/matrix_io.hpp"

#include "test_support.hpp"

#include <random>

using namespace qgi;
using qgi::test::q;
using qgi::test::random_matrix;

TEST_CASE("quaternion literal grammar") {
    CHECK(parse_quaternion("0") == Quaternion());
    CHECK(parse_quaternion("k") == Quaternion::unit_k());
    CHECK(parse_quaternion("-k") == -Quaternion::unit_k());
    CHECK(parse_quaternion("-2+3*j") == Quaternion(Rational(-2), Rational(0), Rational(3), Rational(0)));
    CHECK(parse_quaternion("1/2 - 3/4*i") ==
          Quaternion(Rational(1, 2), Rational(-3, 4), Rational(0), Rational(0)));
    CHECK(parse_quaternion("3j") == parse_quaternion("3*j")); // '*' optional on input
    CHECK(parse_quaternion("i+j+k+1") == Quaternion(Rational(1), Rational(1), Rational(1), Rational(1)));
    CHECK(parse_quaternion("2+2") == Quaternion(Rational(4))); // repeated terms accumulate

    CHECK_THROWS_AS(parse_quaternion(""), parse_error);
    CHECK_THROWS_AS(parse_quaternion("+"), parse_error);
    CHECK_THROWS_AS(parse_quaternion("1 2"), parse_error);
    CHECK_THROWS_AS(parse_quaternion("*j"), parse_error);
    CHECK_THROWS_AS(parse_quaternion("1/0"), zero_divisor);
    CHECK_THROWS_AS(parse_quaternion("q"), parse_error);
}

TEST_CASE("literal formatting round-trips") {
    CHECK(format_quaternion(Quaternion()) == "0");
    CHECK(format_quaternion(q("-2+3*j")) == "-2+3*j");
    CHECK(format_quaternion(q("1/2-3/4*i")) == "1/2-3/4*i");
    CHECK(format_quaternion(q("k")) == "k");
    CHECK(format_quaternion(q("-1/3*k")) == "-1/3*k");
    std::mt19937_64 rng(61);
    for (int t = 0; t < 200; ++t) {
        Quaternion a = qgi::test::random_quaternion(rng, 1);
        CHECK(parse_quaternion(format_quaternion(a)) == a);
    }
}

TEST_CASE("matrix text format") {
    QMatrix m = parse_matrix("# leading comment\n2 2\n1 ; i\n# interior comment\n-j ; 1/2*k\n");
    CHECK(m.rows() == 2);
    CHECK(m(1, 2) == q("i"));
    CHECK(m(2, 1) == q("-j"));
    CHECK(m(2, 2) == q("1/2*k"));

    CHECK_THROWS_AS(parse_matrix(""), parse_error);
    CHECK_THROWS_AS(parse_matrix("2 2\n1 ; 2\n"), parse_error);      // missing row
    CHECK_THROWS_AS(parse_matrix("1 2\n1\n"), parse_error);          // short row
    CHECK_THROWS_AS(parse_matrix("1 2\n1 ; 2 ; 3\n"), parse_error);  // long row
    CHECK_THROWS_AS(parse_matrix("x y\n"), parse_error);

    std::mt19937_64 rng(62);
    for (int t = 0; t < 30; ++t) {
        QMatrix a = random_matrix(rng, 1 + t % 3, 1 + (t / 2) % 4, 1);
        CHECK(parse_matrix(format_matrix(a)) == a);
        CHECK(parse_matrix(format_matrix_json(a)) == a);
    }
}

TEST_CASE("matrix json format") {
    QMatrix m = parse_matrix(R"({"rows":2,"cols":1,"data":[["1+i"],["-2/3*k"]]})");
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 1);
    CHECK(m(2, 1) == q("-2/3*k"));
    CHECK_THROWS_AS(parse_matrix(R"({"rows":2})"), parse_error);
    CHECK_THROWS_AS(parse_matrix(R"({"rows":1,"cols":2,"data":[["1"]]})"), parse_error);
    CHECK_THROWS_AS(parse_matrix("{not json"), parse_error);
}
