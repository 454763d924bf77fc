#include "orbiclass/parallel.hpp"

#include <atomic>

namespace orbiclass {

namespace {
std::atomic<std::size_t> g_threads{1};
}

std::size_t thread_count() { return g_threads.load(); }

void set_thread_count(std::size_t n) { g_threads.store(n == 0 ? 1 : n); }

}  // namespace orbiclass
