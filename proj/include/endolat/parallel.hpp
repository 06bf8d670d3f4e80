#pragma once

namespace endolat {

// Every kernel with an OpenMP path also keeps a plain loop; tests compare
// the two and the benchmark target times them.
enum class Exec { kSerial, kParallel };

// Thread count for parallel kernels (<= 0 restores the runtime default).
void set_num_threads(int n);
int max_threads();

}  // namespace endolat
