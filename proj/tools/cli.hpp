#pragma once

#include <string>
#include <vector>

namespace fermat::cli {

/// Dispatches a full command line (without the program name) to the verb
/// handlers. Returns the process exit code: 0 success (including searches
/// that find nothing), 1 usage/argument error, 2 numerical failure.
int run(const std::vector<std::string>& args);

/// Worker count for partitioned searches: FERMAT_TORUS_THREADS when set to
/// a positive integer, otherwise the machine parallelism. Affects wall
/// time only, never output bytes.
unsigned thread_count();

}  // namespace fermat::cli
