#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <utility>
#include <vector>

namespace latmod {

// Execution mode for the data-parallel kernels. Every kernel produces
// bit-identical results in both modes: work items are independent, outputs
// are merged by index, and all lattice folds land in canonical forms that do
// not depend on evaluation order. `serial` is the reference implementation
// kept alongside the OpenMP path and compared against it in the tests.
enum class Exec { serial, openmp };

namespace par {

// Process-wide default used by code that does not thread an Exec through.
Exec default_mode();
void set_default_mode(Exec mode);

// Thread count for openmp mode; 0 means the OpenMP runtime default.
int thread_count();
void set_thread_count(int n);

namespace detail {
void omp_for(std::size_t n, void (*body)(std::size_t, void*), void* ctx);
}

// Runs f(0), ..., f(n-1). In openmp mode iterations are distributed across
// threads; the lowest-index exception, if any, is rethrown after the loop so
// failure behaviour matches the serial path.
template <class F>
void for_index(Exec mode, std::size_t n, F&& f) {
  if (mode == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  struct Ctx {
    F* fn;
    std::mutex m;
    std::size_t first_bad;
    std::exception_ptr err;
  } ctx{&f, {}, n, nullptr};
  detail::omp_for(
      n,
      [](std::size_t i, void* p) {
        auto* c = static_cast<Ctx*>(p);
        try {
          (*c->fn)(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(c->m);
          if (i < c->first_bad) {
            c->first_bad = i;
            c->err = std::current_exception();
          }
        }
      },
      &ctx);
  if (ctx.err) std::rethrow_exception(ctx.err);
}

// Fills a vector with f(i) per index. Output order is by index regardless of
// execution interleaving.
template <class T, class F>
std::vector<T> map_index(Exec mode, std::size_t n, F&& f) {
  std::vector<T> out(n);
  for_index(mode, n, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace par
}  // namespace latmod
