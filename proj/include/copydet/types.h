#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace copydet {

/** Dense id-addressed matrix of 32-bit float descriptors, one row per id.
 *
 * Immutable after construction; rows are row-major and contiguous. All
 * entries are finite and ids are unique (enforced by validate()).
 */
struct DescriptorSet {
    std::vector<std::string> ids;
    uint32_t dim = 0;
    std::vector<float> data; // ids.size() * dim, row-major

    // Maximum dimensionality accepted by validate(); the descriptor track
    // fixes vectors to 256 components.
    static constexpr uint32_t kDefaultMaxDim = 256;

    size_t size() const { return ids.size(); }

    std::span<const float> row(size_t i) const {
        return {data.data() + i * dim, dim};
    }
    std::span<float> row(size_t i) {
        return {data.data() + i * dim, dim};
    }

    /// Row index for an id, or npos.
    size_t find(const std::string& id) const;
    static constexpr size_t npos = static_cast<size_t>(-1);

    /// Throws ValidationError on duplicate ids, non-finite values,
    /// shape mismatch, or dim outside [1, max_dim].
    void validate(uint32_t max_dim = kDefaultMaxDim) const;

private:
    mutable std::unordered_map<std::string, size_t> index_; // built lazily
};

/// Partial map query id -> reference id; at most one true match per query.
struct GroundTruth {
    std::map<std::string, std::string> pairs;

    size_t size() const { return pairs.size(); }
    bool contains(const std::string& query_id) const {
        return pairs.count(query_id) != 0;
    }
};

/** Ranked (query, reference, score) triples; the matching-track submission
 *  unit. Scores are finite and (query, reference) pairs unique. */
struct CandidateList {
    struct Triple {
        std::string query_id;
        std::string reference_id;
        float score = 0.f;
    };

    std::vector<Triple> triples;
    bool sorted_by_score = false; // globally sorted by descending score

    size_t size() const { return triples.size(); }

    /// Throws ValidationError on duplicate pairs or non-finite scores.
    void validate() const;

    /// Global evaluation order: score desc, then query_id, reference_id asc.
    void sort_global();
};

/// Fitted per-transformation penalty vector with diagnostics.
struct PenaltyModel {
    std::map<std::string, double> penalties;
    double residual_norm = 0.0;
    bool rank_deficient = false;
    double regularization = 0.0;
};

} // namespace copydet
