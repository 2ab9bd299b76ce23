#pragma once

namespace ptdirac {

// Pins the OpenBLAS kernel family and thread count before the first LAPACK
// call. The library reads these variables only at load time, so when they
// are missing the process re-executes itself once with them set.
// Call first thing in main(); returns normally if nothing needs changing.
void configure_blas_runtime(int argc, char** argv);

}  // namespace ptdirac
