#pragma once

namespace spancalc {

// True unless SPANCALC_SERIAL=1 in the environment; gates every OpenMP
// region so the parallel and serial paths can be compared at runtime.
bool parallel_enabled();

// Runtime override: 0 forces serial, 1 forces parallel, -1 returns to the
// environment default.  Used by the benchmark to compare both paths in one
// process.
void set_parallel_override(int mode);

}  // namespace spancalc
