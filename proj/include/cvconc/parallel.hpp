#pragma once

namespace cvconc {

/// Caps OpenMP parallelism; 0 restores the runtime default.
void set_thread_limit(int threads);
int thread_limit();

/// Reads CVCONC_THREADS (0 or unset = auto) and applies it. Returns the value
/// applied, or 0 for auto. Throws InputError on a malformed value.
int apply_thread_environment();

bool openmp_enabled();

}  // namespace cvconc
