#include "cvconc/parallel.hpp"

#include <cstdlib>
#include <string>

#include "cvconc/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cvconc {

namespace {
#ifdef _OPENMP
const int kDefaultThreads = omp_get_max_threads();
#endif
}  // namespace

void set_thread_limit(int threads) {
  if (threads < 0) throw InputError("thread count must be >= 0");
#ifdef _OPENMP
  omp_set_num_threads(threads == 0 ? kDefaultThreads : threads);
#endif
}

int thread_limit() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

int apply_thread_environment() {
  const char* raw = std::getenv("CVCONC_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  int threads = 0;
  try {
    std::size_t used = 0;
    threads = std::stoi(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
  } catch (const std::logic_error&) {
    throw InputError(std::string("CVCONC_THREADS must be a non-negative integer, got '") + raw + "'");
  }
  set_thread_limit(threads);
  return threads;
}

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace cvconc
