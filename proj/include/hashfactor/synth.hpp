#pragma once

#include <cstdint>
#include <string>

#include "hashfactor/ingest.hpp"

namespace hashfactor {

struct CountRange {
    std::uint32_t lo = 1;
    std::uint32_t hi = 1;
};

// Topic-cluster generative model: hashtags partition into power-law-sized
// topics, each user gets 1-2 home topics, and each tweet draws its hashtags
// from a home topic with probability within_topic_prob, else uniformly. The
// defaults give a desk-scale corpus with >0.98 sparsity, mostly-once pair
// counts and planted within-user consistency.
struct SynthParams {
    std::uint32_t n_users = 500;
    std::uint32_t n_hashtags = 800;
    std::uint32_t n_topics = 200;
    CountRange tweets_per_user{2, 10};
    CountRange hashtags_per_tweet{2, 4};
    double within_topic_prob = 0.8;
    double power_exponent = 2.0;  // cluster-size and activity distributions
    std::uint64_t rng_seed = 0;

    void validate() const;
};

// Deterministic per seed. Users and hashtags are reindexed by first
// appearance (never-used hashtags dropped) so the result round-trips through
// the TSV format losslessly.
InteractionDataset generate(const SynthParams& params);

// Sidecar description of the parameters used.
std::string params_json(const SynthParams& params);

}  // namespace hashfactor
