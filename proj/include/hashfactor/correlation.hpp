#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "hashfactor/ingest.hpp"

namespace hashfactor {

// Denominator choice for the unknown-entry weight average: the literal
// formula divides by the full adopted-set size |A|; the alternative divides
// by the number of adopted hashtags that actually co-occur with the candidate.
enum class WeightAveraging {
    kAdoptedSetSize,   // default, literal reading
    kCorrelatedCount,
};

// corr(h_k, h_j) = y_jk / sum_{t != k} y_jt, i.e. the candidate j's row
// normalizes, excluding the k column. Returns 0 when the denominator is 0 and
// clamps to 1 when y_jk exceeds the rest of the row, keeping the documented
// [0, 1] range. Asymmetric in its arguments. Throws on j == k.
double correlation(const CooccurrenceMatrix& y, std::uint32_t k, std::uint32_t j);

// Per-entry learning weights: 1 on observed adoptions, the correlation
// average on unknowns, nothing stored where that average is zero.
struct WeightMatrix {
    std::uint32_t n_users = 0;
    std::uint32_t n_hashtags = 0;
    std::vector<std::vector<std::pair<std::uint32_t, double>>> rows;  // sorted (tag, weight), weight in (0,1]

    std::size_t entry_count() const;
    double at(std::uint32_t i, std::uint32_t j) const;  // 0 when absent
};

// Builds W from X and the co-occurrence side information. Row-parallel;
// result is independent of thread count.
WeightMatrix build_weight_matrix(const UserHashtagMatrix& x, const CooccurrenceMatrix& y,
                                 WeightAveraging averaging = WeightAveraging::kAdoptedSetSize);

// Correlation-average scores for one user against every hashtag; adopted
// positions score 0. Shared by weight construction and the kNN baseline.
std::vector<double> correlation_score_row(const UserHashtagMatrix& x, const CooccurrenceMatrix& y,
                                          std::uint32_t user);

// `i<TAB>j<TAB>weight` triples for inspection.
void write_weights(const WeightMatrix& w, std::ostream& out);

}  // namespace hashfactor
