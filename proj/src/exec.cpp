#include "entdist/exec.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace entdist {

int effective_threads() {
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("ENTDIST_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1 && cap < n)
                n = cap;
        } catch (...) {
            // ignore malformed values, keep the OpenMP default
        }
    }
    return n;
}

} // namespace entdist
