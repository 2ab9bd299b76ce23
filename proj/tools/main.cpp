#include <string>
#include <vector>

#include "cli.hpp"
#include "ptdirac/blas_runtime.hpp"

int main(int argc, char** argv) {
  ptdirac::configure_blas_runtime(argc, argv);
  return ptdirac::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
