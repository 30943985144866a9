#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "hashfactor/correlation.hpp"
#include "hashfactor/dense_matrix.hpp"
#include "hashfactor/ingest.hpp"

namespace hashfactor {

struct TrainConfig {
    int d = 10;
    double gamma1 = 0.2;
    double gamma2 = 0.2;
    double lambda = 1e-3;
    int max_iters = 500;
    double rel_tol = 1e-5;
    std::uint64_t rng_seed = 0;
    bool nonneg_projection = true;
    // Reproduce the printed gradient form (weights and regularizers enter
    // linearly) instead of the exact derivative of the objective.
    bool paper_exact_grad = false;

    void validate(std::size_t n_users, std::size_t n_hashtags) const;
};

struct FactorModel {
    DenseMatrix u;  // N x d
    DenseMatrix v;  // M x d
    TrainConfig config;
    std::vector<double> trace;  // objective after each iteration
};

// (X, W) flattened into CSR and CSC views over the stored positions of W,
// with the binary X target carried per entry. Built once per training run;
// both layouts keep entries in ascending index order so that per-row and
// per-column accumulation is a fixed floating-point sequence regardless of
// thread count.
struct TrainingProblem {
    std::uint32_t n_users = 0;
    std::uint32_t n_hashtags = 0;

    std::vector<std::size_t> row_ptr;
    std::vector<std::uint32_t> col;
    std::vector<double> w;
    std::vector<double> x;

    std::vector<std::size_t> col_ptr;
    std::vector<std::uint32_t> row;
    std::vector<double> w_t;
    std::vector<double> x_t;

    static TrainingProblem build(const UserHashtagMatrix& x, const WeightMatrix& w);
    std::size_t stored() const { return col.size(); }
};

namespace kernels {

// OpenMP-parallel sparse kernels. Deterministic: per-row (per-column)
// partial results are accumulated in index order and combined serially.
double objective(const TrainingProblem& p, const DenseMatrix& u, const DenseMatrix& v,
                 double gamma1, double gamma2);
void grad_u(const TrainingProblem& p, const DenseMatrix& u, const DenseMatrix& v,
            double gamma1, bool paper_exact_grad, DenseMatrix& out);
void grad_v(const TrainingProblem& p, const DenseMatrix& u, const DenseMatrix& v,
            double gamma2, bool paper_exact_grad, DenseMatrix& out);

}  // namespace kernels

// ||W (.) (X - U V^T)||_F^2 + gamma1 ||U||_F^2 + gamma2 ||V||_F^2, the
// Hadamard term summed over stored positions of W only.
double objective(const UserHashtagMatrix& x, const WeightMatrix& w, const DenseMatrix& u,
                 const DenseMatrix& v, double gamma1, double gamma2);

// Exact derivative of the objective by default: the data term carries W (.) W
// and the regularizer contributes 2*gamma*U. With paper_exact_grad the
// printed form -2(W.X)V + 2(W.(UV^T))V + gamma*U is produced instead.
DenseMatrix grad_u(const UserHashtagMatrix& x, const WeightMatrix& w, const DenseMatrix& u,
                   const DenseMatrix& v, double gamma1, bool paper_exact_grad = false);
DenseMatrix grad_v(const UserHashtagMatrix& x, const WeightMatrix& w, const DenseMatrix& u,
                   const DenseMatrix& v, double gamma2, bool paper_exact_grad = false);

// Alternating gradient descent: U step, then V step at the updated U, with
// optional clamping of negatives after each step. Stops when the relative
// objective change falls below rel_tol or max_iters is reached. Factors are
// initialized uniformly in [0,1) from rng_seed. Throws when the objective
// turns non-finite (step too large).
FactorModel train(const UserHashtagMatrix& x, const WeightMatrix& w, const TrainConfig& config);

double predict_entry(const FactorModel& m, std::size_t i, std::size_t j);
DenseMatrix predict_dense(const FactorModel& m);

// Top-k unadopted hashtags by predicted score, descending, ties broken by
// ascending hashtag index. k larger than the candidate set returns them all.
std::vector<std::pair<std::uint32_t, double>> recommend(const FactorModel& m,
                                                        const UserHashtagMatrix& x,
                                                        std::uint32_t user, std::size_t k);

// Text format: `hwmf-model v1 N M d` header, then N rows of U and M rows of V
// as space-separated decimals with 17 significant digits (round-trip exact).
void save_model(const FactorModel& m, std::ostream& out);
FactorModel load_model(std::istream& in);

// CSV `iter,objective`.
void write_trace_csv(const std::vector<double>& trace, std::ostream& out);

}  // namespace hashfactor
