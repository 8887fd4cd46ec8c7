#pragma once

#include <string>
#include <vector>

#include "copydet/metadata.h"
#include "copydet/types.h"

namespace copydet {

/* File formats
 *
 * Descriptors (binary, little-endian):
 *   magic "DSC1", u32 version=1, u32 count, u32 dim,
 *   count x (u16 length, UTF-8 id bytes),
 *   count*dim float32, row-major.
 * Candidates: CSV, header "query_id,reference_id,score",
 *   scores printed with 9 significant digits.
 * Ground truth: CSV, header "query_id,reference_id".
 * Metadata: JSON lines, one object per query.
 */

struct LoadOptions {
    uint32_t max_dim = DescriptorSet::kDefaultMaxDim;
};

DescriptorSet load_descriptors(const std::string& path, const LoadOptions& opts = {});
void save_descriptors(const DescriptorSet& set, const std::string& path);

/// CSV fallback importer: header "id,v0,v1,...".
DescriptorSet load_descriptors_csv(const std::string& path, const LoadOptions& opts = {});

CandidateList load_candidates(const std::string& path);
void save_candidates(const CandidateList& candidates, const std::string& path);

GroundTruth load_ground_truth(const std::string& path);
void save_ground_truth(const GroundTruth& gt, const std::string& path);

std::vector<QueryMetadata> load_metadata(const std::string& path,
                                         const TransformationRegistry& registry);
void save_metadata(const std::vector<QueryMetadata>& records, const std::string& path);

/// Per-query AP table: CSV, header "query_id,ap".
std::vector<std::pair<std::string, double>> load_aps(const std::string& path);
void save_aps(const std::vector<std::pair<std::string, double>>& aps,
              const std::string& path);

/// Format a score with 9 significant digits (the candidates CSV convention).
std::string format_score(float score);

/// FNV-1a 64-bit content hash, as "fnv1a64:<hex>"; used in run manifests.
std::string file_content_hash(const std::string& path);

} // namespace copydet
