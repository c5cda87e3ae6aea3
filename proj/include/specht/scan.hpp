#pragma once

#include <cstdint>
#include <vector>

#include "specht/polynomial.hpp"

namespace specht {

// Exhaustive zero-set enumeration over F_p^k: returns all points at which
// every polynomial in `polys` vanishes, as residue vectors, sorted
// lexicographically. The grid walk is the data-parallel inner loop of the
// solver; the serial routine is the reference the parallel one is tested
// against.
struct ScanOptions {
  std::uint64_t budget = 10'000'000;  // maximum number of grid points
};

std::vector<std::vector<long long>> zero_scan_serial(Field field, int k,
                                                     const std::vector<Poly>& polys,
                                                     const ScanOptions& opts = {});

std::vector<std::vector<long long>> zero_scan_parallel(Field field, int k,
                                                       const std::vector<Poly>& polys,
                                                       const ScanOptions& opts = {});

// Parallel when the grid is large enough to pay for it.
std::vector<std::vector<long long>> zero_scan(Field field, int k, const std::vector<Poly>& polys,
                                              const ScanOptions& opts = {});

}  // namespace specht
