#pragma once

namespace specgap {

// Execution policy for the O(n^3) kernels and the parameter sweep.
// Every parallel kernel is element-wise deterministic: the serial and
// parallel paths produce bit-identical results.
enum class Exec { serial, parallel };

// Number of worker threads the parallel policy would use (1 without OpenMP).
int hardware_threads();

// Clamp the OpenMP thread count; n <= 0 restores the runtime default.
void set_threads(int n);

}  // namespace specgap
