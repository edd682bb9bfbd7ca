#include "bilpair/parallel.hpp"

#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bilpair {

namespace {
std::atomic<int> override_count{0};
}

int worker_count() {
    int o = override_count.load();
    if (o > 0) return o;
    if (const char* env = std::getenv("BILPAIR_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_worker_count(int n) { override_count.store(n > 0 ? n : 0); }

}  // namespace bilpair
