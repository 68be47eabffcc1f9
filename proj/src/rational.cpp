#include "qgi/rational.hpp"

#include <cctype>

namespace qgi {

Rational Rational::from_string(std::string_view s) {
    // strict grammar: [+-]digits ( "/" digits )?
    std::string text(s);
    std::size_t pos = 0;
    auto fail = [&]() -> Rational {
        throw parse_error("bad rational literal: '" + text + "'");
    };

    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        neg = text[pos] == '-';
        ++pos;
    }
    std::size_t num_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_begin) return fail();
    mpz_class num(text.substr(num_begin, pos - num_begin));
    if (neg) num = -num;

    mpz_class den(1);
    if (pos < text.size()) {
        if (text[pos] != '/') return fail();
        ++pos;
        std::size_t den_begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == den_begin || pos != text.size()) return fail();
        den = mpz_class(text.substr(den_begin));
        if (den == 0) throw zero_divisor("rational literal with zero denominator");
    }

    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

} // namespace qgi
