#pragma once

namespace entdist {

// Serial is the reference path; Parallel runs the same per-point code under
// OpenMP and must produce bitwise-identical results.
enum class ExecPolicy { Serial, Parallel };

// Honors ENTDIST_THREADS when set, otherwise the OpenMP default.
int effective_threads();

} // namespace entdist
