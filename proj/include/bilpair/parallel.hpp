#pragma once

namespace bilpair {

// Worker count for OpenMP kernels: BILPAIR_THREADS if set and positive,
// otherwise the OpenMP default.
int worker_count();
// Overrides the environment for the rest of the process (0 restores it).
void set_worker_count(int n);

}  // namespace bilpair
