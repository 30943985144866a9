#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hashfactor/ingest.hpp"

namespace hashfactor {

// Within-user vs cross-user hashtag correlation samples for the usage
// consistency test.
struct ConsistencySample {
    std::vector<double> hc_u;
    std::vector<double> hc_r;
    std::uint64_t seed = 0;
};

// hc_u: correlation of a random distinct pair from one user's adopted set;
// hc_r: correlation of one hashtag from user u and one from a different user
// r. Pairs are drawn with replacement; identical-hashtag cross draws are
// rejected and redrawn. Deterministic per seed.
ConsistencySample build_consistency_sample(const UserHashtagMatrix& x, const CooccurrenceMatrix& y,
                                           std::size_t n_pairs, std::uint64_t seed);

// The hc_r mechanism on its own; also used to simulate the null (two vectors
// drawn i.i.d. from the same population).
std::vector<double> sample_cross_user_correlations(const UserHashtagMatrix& x,
                                                   const CooccurrenceMatrix& y, std::size_t n,
                                                   std::mt19937_64& rng);

struct TTestResult {
    double t_statistic = 0.0;
    double p_value_one_sided = 0.0;
    double dof = 0.0;
    double reject_at = 0.0;  // significance level used

    bool reject() const { return p_value_one_sided < reject_at; }
};

// One-sided two-sample t-test of H1: mean(a) > mean(b). Welch's statistic
// with Welch-Satterthwaite dof by default; pooled_variance switches to the
// equal-variance form with dof = n_a + n_b - 2. Throws when either sample has
// fewer than two elements or both variances are zero.
TTestResult welch_t_test(std::span<const double> a, std::span<const double> b,
                         double alpha = 0.001, bool pooled_variance = false);

// Regularized incomplete beta I_x(a, b), Lentz continued fraction, relative
// accuracy ~1e-14 over the Student-t argument range.
double incomplete_beta_reg(double a, double b, double x);

// Upper tail P(T > t) of Student's t with `dof` degrees of freedom.
double student_t_sf(double t, double dof);

}  // namespace hashfactor
