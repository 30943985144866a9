#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hashfactor {

// Raw interaction log: tweets as (user, hashtag-set) records. User and
// hashtag indices are assigned in first-appearance order, hashtags normalized
// to lowercase with a leading '#' stripped.
struct InteractionDataset {
    struct Tweet {
        std::uint32_t user = 0;
        std::vector<std::uint32_t> tags;  // sorted, no duplicates

        bool operator==(const Tweet&) const = default;
    };

    std::vector<std::string> users;
    std::vector<std::string> hashtags;
    std::vector<Tweet> tweets;

    bool operator==(const InteractionDataset&) const = default;
};

// Sparse binary user-hashtag matrix. A stored (i, j) means user i adopted
// hashtag j at least once; absent positions are unknown, not negative.
struct UserHashtagMatrix {
    std::uint32_t n_users = 0;
    std::uint32_t n_hashtags = 0;
    std::vector<std::vector<std::uint32_t>> rows;  // sorted column indices

    static UserHashtagMatrix from_entries(std::uint32_t n_users, std::uint32_t n_hashtags,
                                          const std::vector<std::pair<std::uint32_t, std::uint32_t>>& entries);

    bool has(std::uint32_t i, std::uint32_t j) const;
    std::size_t entry_count() const;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> entries() const;  // row-major order

    bool operator==(const UserHashtagMatrix&) const = default;
};

// Symmetric hashtag co-use counts with a zero diagonal, stored as per-row
// sorted adjacency plus cached row sums.
struct CooccurrenceMatrix {
    std::uint32_t n_hashtags = 0;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> rows;  // sorted (tag, count)
    std::vector<std::uint64_t> row_sums;

    // pairs are unordered (a, b, count) with a != b; used by build_matrices and tests.
    static CooccurrenceMatrix from_pairs(std::uint32_t n_hashtags,
                                         const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>& pairs);

    std::uint32_t count(std::uint32_t j, std::uint32_t k) const;
};

// Parses `user_id<TAB>hashtag1,hashtag2,...` lines. Lines starting with '#'
// are comments, empty lines are skipped, CRLF is accepted. Throws
// std::runtime_error naming the line number on malformed input.
InteractionDataset parse_tweets(std::istream& in);

void write_tsv(const InteractionDataset& d, std::ostream& out);

// X from adoptions, Y from per-tweet unordered co-occurring pairs.
std::pair<UserHashtagMatrix, CooccurrenceMatrix> build_matrices(const InteractionDataset& d);

// Key:value block with the corpus-description row labels.
std::string dataset_summary(const InteractionDataset& d);

}  // namespace hashfactor
