#pragma once

#include "qgi/gen_inverses.hpp"
#include "qgi/qmatrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qgi {

// Named intermediate matrices of a determinantal pipeline, in evaluation
// order. Populated when a caller passes a trace to one of the operations
// below; the CLI prints it step by step.
struct Trace {
    std::vector<std::pair<std::string, QMatrix>> steps;

    void add(std::string name, const QMatrix& m) { steps.emplace_back(std::move(name), m); }
};

enum class Variant {
    auto_select,
    general,      // resolves to the cheaper side
    general_u,    // pipeline over w*a
    general_v,    // pipeline over a*w
    hermitian_wa, // requires w*a Hermitian
    hermitian_aw, // requires a*w Hermitian
};

// Right and left weighted core-EP inverses, both m x n.
QMatrix wcep_right(const WeightedPair& pair, Trace* trace = nullptr);
QMatrix wcep_left(const WeightedPair& pair, Trace* trace = nullptr);

// Weighted DMP / MPD / CMP inverses, all n x m. Degenerate ranks give the
// zero matrix. Hermitian variants throw not_hermitian when their product
// precondition fails.
QMatrix wdmp(const WeightedPair& pair, Variant variant = Variant::auto_select,
             Trace* trace = nullptr);
QMatrix wmpd(const WeightedPair& pair, Variant variant = Variant::auto_select,
             Trace* trace = nullptr);
QMatrix wcmp(const WeightedPair& pair, Variant variant = Variant::auto_select,
             Trace* trace = nullptr);

} // namespace qgi
