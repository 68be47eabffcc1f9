#pragma once

#include "qgi/cmatrix.hpp"
#include "qgi/gen_inverses.hpp"
#include "qgi/qmatrix.hpp"

#include <string>
#include <vector>

namespace qgi::oracle {

// Ground truth computed without the noncommutative determinant layer: only
// the complex embedding, exact elimination, and definitional compositions.
// Every result is checked against its own defining equations before being
// returned; a failed self-check throws oracle_failure.

// Moore-Penrose inverse through the complex embedding and a full-rank
// factorization, mapped back and checked against the four defining
// equations over the quaternions.
QMatrix mp(const QMatrix& a);

// Drazin inverse a^l (a^(2l+1))^+ a^l with l = index_of(a); checked against
// a^(l+1) x = a^l, x a x = x, a x = x a.
QMatrix drazin(const QMatrix& a);

// Weighted Drazin inverse a ((w a)^D)^2, cross-checked against the
// ((a w)^D)^2 a route and the three defining equations.
QMatrix wdrazin(const WeightedPair& pair);

// Core-EP inverses as drazin/Moore-Penrose compositions.
QMatrix compose_core_ep_right(const QMatrix& a);
QMatrix compose_core_ep_left(const QMatrix& a);

// Definitional compositions of the weighted family.
QMatrix compose_wcep_right(const WeightedPair& pair); // a [ (wa) core-EP right ]^2
QMatrix compose_wcep_left(const WeightedPair& pair);  // [ (aw) core-EP left ]^2 a
QMatrix compose_wdmp(const WeightedPair& pair);       // w a_dw w a a^+
QMatrix compose_wmpd(const WeightedPair& pair);       // a^+ a w a_dw w
QMatrix compose_wcmp(const WeightedPair& pair);       // a^+ a w a_dw w a a^+

struct EquationCheck {
    std::string label;
    bool holds = false;
    // entry of largest squared norm in lhs - rhs; exactly zero iff holds
    Quaternion residual;
};

struct VerificationVerdict {
    std::string system;
    std::vector<EquationCheck> equations;

    bool all_hold() const {
        for (const auto& e : equations)
            if (!e.holds) return false;
        return true;
    }
};

// Evaluates every equation of the named characterizing system exactly.
// Known systems: penrose, drazin, wdrazin, core_ep_right, core_ep_left,
// wcep_right, wcep_left, wdmp, wmpd, wcmp. The systems that do not involve
// a weight ignore w (pass any matrix, conventionally the identity).
VerificationVerdict verify_system(const std::string& name, const QMatrix& a,
                                  const QMatrix& w, const QMatrix& x);

// Single-matrix overload for the unweighted systems.
VerificationVerdict verify_system(const std::string& name, const QMatrix& a,
                                  const QMatrix& x);

} // namespace qgi::oracle
