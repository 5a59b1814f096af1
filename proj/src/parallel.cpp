#include "epkit/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace epkit {

int configured_threads() {
#ifdef _OPENMP
    int threads = omp_get_max_threads();
    if (const char* env = std::getenv("EPKIT_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap > 0) threads = cap;
        } catch (const std::exception&) {
            // ignore unparsable values
        }
    }
    return threads;
#else
    return 1;
#endif
}

}  // namespace epkit
