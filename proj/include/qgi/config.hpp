#pragma once

#include <cstddef>

namespace qgi::config {

// Square dimensions above this cap are rejected by the determinant layer;
// the permutation expansion enumerates n! terms. Default 7.
std::size_t max_dim();
void set_max_dim(std::size_t n);

// Worker threads for the parallel kernels. 0 means the OpenMP default,
// 1 forces serial execution.
unsigned threads();
void set_threads(unsigned t);

} // namespace qgi::config
