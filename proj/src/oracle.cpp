#include "qgi/oracle.hpp"

#include "qgi/errors.hpp"

namespace qgi::oracle {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw oracle_failure(std::string("oracle self-check failed: ") + what);
}

// residual entry of largest squared norm
Quaternion max_residual(const QMatrix& lhs, const QMatrix& rhs) {
    const QMatrix d = lhs - rhs;
    Quaternion worst;
    Rational worst_n2(0);
    for (std::size_t i = 1; i <= d.rows(); ++i)
        for (std::size_t j = 1; j <= d.cols(); ++j) {
            Rational n2 = norm2(d(i, j));
            if (n2 > worst_n2) {
                worst_n2 = n2;
                worst = d(i, j);
            }
        }
    return worst;
}

EquationCheck check_equal(std::string label, const QMatrix& lhs, const QMatrix& rhs) {
    EquationCheck c;
    c.label = std::move(label);
    c.residual = max_residual(lhs, rhs);
    c.holds = c.residual.is_zero();
    return c;
}

bool penrose_holds(const QMatrix& a, const QMatrix& x) {
    return a * x * a == a && x * a * x == x && conj_transpose(a * x) == a * x &&
           conj_transpose(x * a) == x * a;
}

} // namespace

QMatrix mp(const QMatrix& a) {
    const CMatrix pinv = c_mp_inverse(complex_embedding(a));
    const QMatrix x = embedding_to_quaternion(pinv);
    require(penrose_holds(a, x), "Penrose equations");
    return x;
}

QMatrix drazin(const QMatrix& a) {
    if (a.rows() != a.cols()) throw dimension_mismatch("drazin of a non-square matrix");
    const std::size_t l = index_of(a);
    const QMatrix al = power(a, l);
    const QMatrix x = al * mp(power(a, 2 * l + 1)) * al;
    require(power(a, l + 1) * x == al, "a^(l+1) x = a^l");
    require(x * a * x == x, "x a x = x");
    require(a * x == x * a, "a x = x a");
    return x;
}

QMatrix wdrazin(const WeightedPair& pair) {
    const QMatrix ud = drazin(pair.u);
    const QMatrix vd = drazin(pair.v);
    const QMatrix x = pair.a * ud * ud;
    require(x == vd * vd * pair.a, "the two weighted Drazin compositions agree");
    const std::size_t k = pair.k;
    require(power(pair.v, k + 1) * x * pair.w == power(pair.v, k), "(aw)^(k+1) x w = (aw)^k");
    require(x * pair.w * pair.a * pair.w * x == x, "x w a w x = x");
    require(pair.a * pair.w * x == x * pair.w * pair.a, "a w x = x w a");
    return x;
}

QMatrix compose_core_ep_right(const QMatrix& a) {
    const std::size_t l = index_of(a);
    const QMatrix al = power(a, l);
    return drazin(a) * al * mp(al);
}

QMatrix compose_core_ep_left(const QMatrix& a) {
    const std::size_t l = index_of(a);
    const QMatrix al = power(a, l);
    return mp(al) * al * drazin(a);
}

QMatrix compose_wcep_right(const WeightedPair& pair) {
    const QMatrix c = compose_core_ep_right(pair.u);
    return pair.a * c * c;
}

QMatrix compose_wcep_left(const WeightedPair& pair) {
    const QMatrix c = compose_core_ep_left(pair.v);
    return c * c * pair.a;
}

QMatrix compose_wdmp(const WeightedPair& pair) {
    return pair.w * oracle::wdrazin(pair) * pair.w * pair.a * mp(pair.a);
}

QMatrix compose_wmpd(const WeightedPair& pair) {
    return mp(pair.a) * pair.a * pair.w * oracle::wdrazin(pair) * pair.w;
}

QMatrix compose_wcmp(const WeightedPair& pair) {
    const QMatrix adag = mp(pair.a);
    return adag * pair.a * pair.w * oracle::wdrazin(pair) * pair.w * pair.a * adag;
}

VerificationVerdict verify_system(const std::string& name, const QMatrix& a,
                                  const QMatrix& w, const QMatrix& x) {
    VerificationVerdict v;
    v.system = name;

    if (name == "penrose") {
        v.equations.push_back(check_equal("a x a = a", a * x * a, a));
        v.equations.push_back(check_equal("x a x = x", x * a * x, x));
        v.equations.push_back(check_equal("(a x)* = a x", conj_transpose(a * x), a * x));
        v.equations.push_back(check_equal("(x a)* = x a", conj_transpose(x * a), x * a));
        return v;
    }
    if (name == "drazin") {
        const std::size_t k = index_of(a);
        v.equations.push_back(
            check_equal("a^(k+1) x = a^k", power(a, k + 1) * x, power(a, k)));
        v.equations.push_back(check_equal("x a x = x", x * a * x, x));
        v.equations.push_back(check_equal("a x = x a", a * x, x * a));
        return v;
    }
    if (name == "core_ep_right") {
        const std::size_t k = index_of(a);
        v.equations.push_back(
            check_equal("x a^(k+1) = a^k", x * power(a, k + 1), power(a, k)));
        v.equations.push_back(check_equal("a x^2 = x", a * x * x, x));
        v.equations.push_back(check_equal("(a x)* = a x", conj_transpose(a * x), a * x));
        return v;
    }
    if (name == "core_ep_left") {
        const std::size_t k = index_of(a);
        v.equations.push_back(
            check_equal("a^(k+1) x = a^k", power(a, k + 1) * x, power(a, k)));
        v.equations.push_back(check_equal("x^2 a = x", x * x * a, x));
        v.equations.push_back(check_equal("(x a)* = x a", conj_transpose(x * a), x * a));
        return v;
    }

    // weighted systems from here on
    WeightedPair pair(a, w);
    const std::size_t k = pair.k;

    if (name == "wdrazin") {
        v.equations.push_back(check_equal("(aw)^(k+1) x w = (aw)^k",
                                          power(pair.v, k + 1) * x * w, power(pair.v, k)));
        v.equations.push_back(check_equal("x w a w x = x", x * w * a * w * x, x));
        v.equations.push_back(check_equal("a w x = x w a", a * w * x, x * w * a));
        return v;
    }
    if (name == "wcep_right") {
        v.equations.push_back(check_equal("x w (aw)^(k+1) = (aw)^k",
                                          x * w * power(pair.v, k + 1), power(pair.v, k)));
        v.equations.push_back(check_equal("a w x w x = x", a * w * x * w * x, x));
        v.equations.push_back(
            check_equal("(w a w x)* = w a w x", conj_transpose(w * a * w * x), w * a * w * x));
        return v;
    }
    if (name == "wcep_left") {
        v.equations.push_back(check_equal("(wa)^(k+1) w x = (wa)^k",
                                          power(pair.u, k + 1) * w * x, power(pair.u, k)));
        v.equations.push_back(check_equal("x w x w a = x", x * w * x * w * a, x));
        v.equations.push_back(
            check_equal("(x w a w)* = x w a w", conj_transpose(x * w * a * w), x * w * a * w));
        return v;
    }
    if (name == "wdmp") {
        const QMatrix adw = oracle::wdrazin(pair);
        const QMatrix adag = mp(a);
        v.equations.push_back(check_equal("x a x = x", x * a * x, x));
        v.equations.push_back(check_equal("x a = w a_dw w a", x * a, w * adw * w * a));
        v.equations.push_back(check_equal("(wa)^(k+1) x = (wa)^(k+1) a^+",
                                          power(pair.u, k + 1) * x,
                                          power(pair.u, k + 1) * adag));
        return v;
    }
    if (name == "wmpd") {
        const QMatrix adw = oracle::wdrazin(pair);
        const QMatrix adag = mp(a);
        v.equations.push_back(check_equal("x a x = x", x * a * x, x));
        v.equations.push_back(check_equal("a x = a w a_dw w", a * x, a * w * adw * w));
        v.equations.push_back(check_equal("x (aw)^(k+1) = a^+ (aw)^(k+1)",
                                          x * power(pair.v, k + 1),
                                          adag * power(pair.v, k + 1)));
        return v;
    }
    if (name == "wcmp") {
        const QMatrix adw = oracle::wdrazin(pair);
        const QMatrix adag = mp(a);
        v.equations.push_back(check_equal("x a x = x", x * a * x, x));
        v.equations.push_back(
            check_equal("a x = a w a_dw w a a^+", a * x, a * w * adw * w * a * adag));
        v.equations.push_back(
            check_equal("x a = a^+ a w a_dw w a", x * a, adag * a * w * adw * w * a));
        return v;
    }
    throw unknown_system("unknown verification system: " + name);
}

VerificationVerdict verify_system(const std::string& name, const QMatrix& a,
                                  const QMatrix& x) {
    return verify_system(name, a, QMatrix::identity(a.cols()), x);
}

} // namespace qgi::oracle
