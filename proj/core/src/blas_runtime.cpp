#include "ptdirac/blas_runtime.hpp"

#include <unistd.h>

#include <cstdlib>
#include <vector>

namespace ptdirac {

void configure_blas_runtime(int argc, char** argv) {
  if (std::getenv("PTDIRAC_BLAS_CONFIGURED") != nullptr) return;
  setenv("PTDIRAC_BLAS_CONFIGURED", "1", 1);
  bool changed = false;
  if (std::getenv("OPENBLAS_CORETYPE") == nullptr) {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2")) {
      setenv("OPENBLAS_CORETYPE", "Haswell", 1);
      changed = true;
    }
#endif
  }
  if (std::getenv("OPENBLAS_NUM_THREADS") == nullptr) {
    setenv("OPENBLAS_NUM_THREADS", "1", 1);
    changed = true;
  }
  if (!changed) return;
  std::vector<char*> args(argv, argv + argc);
  args.push_back(nullptr);
  execv("/proc/self/exe", args.data());
  // Exec failure leaves the process running with the inherited settings.
}

}  // namespace ptdirac
