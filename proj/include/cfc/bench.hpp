#ifndef CFC_BENCH_HPP
#define CFC_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cfc::bench {

std::vector<std::string> suite_names();

// Runs a named experiment suite and returns its results table. Every row's
// coloring is re-verified before being reported. Deterministic under a fixed
// seed; wall times are only included when with_times is set since they vary
// across machines. Unknown names raise input_error.
std::string run_suite(const std::string& name, uint64_t seed, bool with_times = false);

}  // namespace cfc::bench

#endif
