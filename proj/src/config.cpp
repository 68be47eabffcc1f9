#include "qgi/config.hpp"

#include <atomic>

namespace qgi::config {

namespace {
std::atomic<std::size_t> g_max_dim{7};
std::atomic<unsigned> g_threads{0};
} // namespace

std::size_t max_dim() { return g_max_dim.load(std::memory_order_relaxed); }
void set_max_dim(std::size_t n) { g_max_dim.store(n, std::memory_order_relaxed); }

unsigned threads() { return g_threads.load(std::memory_order_relaxed); }
void set_threads(unsigned t) { g_threads.store(t, std::memory_order_relaxed); }

} // namespace qgi::config
