#include "latmod/parallel.hpp"

#include <omp.h>

namespace latmod::par {

namespace {
std::atomic<Exec> g_mode{Exec::openmp};
std::atomic<int> g_threads{0};
}  // namespace

Exec default_mode() { return g_mode.load(); }
void set_default_mode(Exec mode) { g_mode.store(mode); }

int thread_count() { return g_threads.load(); }
void set_thread_count(int n) { g_threads.store(n < 0 ? 0 : n); }

namespace detail {

void omp_for(std::size_t n, void (*body)(std::size_t, void*), void* ctx) {
  const int requested = g_threads.load();
  const long long count = static_cast<long long>(n);
  if (requested > 0) {
#pragma omp parallel for schedule(static) num_threads(requested)
    for (long long i = 0; i < count; ++i) body(static_cast<std::size_t>(i), ctx);
  } else {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < count; ++i) body(static_cast<std::size_t>(i), ctx);
  }
}

}  // namespace detail
}  // namespace latmod::par
