#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hashfactor/correlation.hpp"
#include "hashfactor/factorization.hpp"
#include "hashfactor/ingest.hpp"

namespace hashfactor {

// MF baseline weights: 1 exactly where x_ij = 1, nothing stored elsewhere.
WeightMatrix build_binary_weight_matrix(const UserHashtagMatrix& x);

// The MF baseline is the same trainer with binary weights.
FactorModel train_mf(const UserHashtagMatrix& x, const TrainConfig& config);

// Correlation average of a user's adopted set against each unadopted
// hashtag; adopted positions score 0. Doubles as the baseline's RMSE
// prediction (a value in [0, 1]).
std::vector<double> knn_correlation_scores(const UserHashtagMatrix& x, const CooccurrenceMatrix& y,
                                           std::uint32_t user);

// Top-k by score, descending, ties by ascending index.
std::vector<std::pair<std::uint32_t, double>> knn_top_k(const UserHashtagMatrix& x,
                                                        const CooccurrenceMatrix& y,
                                                        std::uint32_t user, std::size_t k);

// Fair coin draw in {0, 1} per held-out entry.
std::vector<double> random_predict(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& heldout,
                                   std::uint64_t seed);

}  // namespace hashfactor
