#pragma once

#include <cstdint>
#include <vector>

#include "hashfactor/correlation.hpp"
#include "hashfactor/ingest.hpp"

namespace hashfactor {

struct BenchRow {
    int d = 0;
    double parallel_ms_per_iter = 0.0;  // sparse OpenMP kernels
    double serial_ms_per_iter = 0.0;    // dense reference implementation
};

// Times one full training iteration (U gradient + step, V gradient + step,
// objective) per latent dimension, reporting the median over `iters`
// measured iterations for both kernel paths.
std::vector<BenchRow> benchmark_kernels(const UserHashtagMatrix& x, const WeightMatrix& w,
                                        const std::vector<int>& dims, int iters,
                                        std::uint64_t seed);

// Median per-iteration time of the parallel path only; used for scaling
// checks without paying for the dense baseline.
double time_parallel_iteration(const UserHashtagMatrix& x, const WeightMatrix& w, int d,
                               int iters, std::uint64_t seed);

}  // namespace hashfactor
