#pragma once

#include "hashfactor/correlation.hpp"
#include "hashfactor/dense_matrix.hpp"
#include "hashfactor/factorization.hpp"
#include "hashfactor/ingest.hpp"

namespace hashfactor::reference {

// Serial dense implementations of the hot-path computations. They share no
// code with the sparse OpenMP kernels and exist as the oracle side of the
// tests and the baseline side of the kernel benchmark.

DenseMatrix dense_adoptions(const UserHashtagMatrix& x);
DenseMatrix dense_weights(const WeightMatrix& w);

double objective(const UserHashtagMatrix& x, const WeightMatrix& w, const DenseMatrix& u,
                 const DenseMatrix& v, double gamma1, double gamma2);
DenseMatrix grad_u(const UserHashtagMatrix& x, const WeightMatrix& w, const DenseMatrix& u,
                   const DenseMatrix& v, double gamma1, bool paper_exact_grad = false);
DenseMatrix grad_v(const UserHashtagMatrix& x, const WeightMatrix& w, const DenseMatrix& u,
                   const DenseMatrix& v, double gamma2, bool paper_exact_grad = false);

double correlation(const CooccurrenceMatrix& y, std::uint32_t k, std::uint32_t j);
WeightMatrix build_weight_matrix(const UserHashtagMatrix& x, const CooccurrenceMatrix& y,
                                 WeightAveraging averaging = WeightAveraging::kAdoptedSetSize);

}  // namespace hashfactor::reference
