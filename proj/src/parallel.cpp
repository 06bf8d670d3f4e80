#include "endolat/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace endolat {

namespace {
#ifdef _OPENMP
int const kDefaultThreads = omp_get_max_threads();
#endif
}  // namespace

void set_num_threads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n > 0 ? n : kDefaultThreads);
#else
  (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace endolat
