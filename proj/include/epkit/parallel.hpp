#pragma once

namespace epkit {

/// Thread count for parallel kernels: EPKIT_THREADS when set to a positive
/// integer, otherwise the OpenMP default. Always 1 without OpenMP.
int configured_threads();

}  // namespace epkit
