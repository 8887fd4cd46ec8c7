#include "copydet/types.h"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "copydet/errors.h"

namespace copydet {

size_t DescriptorSet::find(const std::string& id) const {
    if (index_.size() != ids.size()) {
        index_.clear();
        index_.reserve(ids.size());
        for (size_t i = 0; i < ids.size(); i++) {
            index_.emplace(ids[i], i);
        }
    }
    auto it = index_.find(id);
    return it == index_.end() ? npos : it->second;
}

void DescriptorSet::validate(uint32_t max_dim) const {
    if (dim == 0) {
        throw ValidationError("descriptor set: dim must be positive");
    }
    if (dim > max_dim) {
        throw ValidationError("descriptor set: dim " + std::to_string(dim) +
                              " exceeds maximum " + std::to_string(max_dim));
    }
    if (data.size() != ids.size() * static_cast<size_t>(dim)) {
        throw ValidationError("descriptor set: data size " +
                              std::to_string(data.size()) + " != count*dim " +
                              std::to_string(ids.size() * static_cast<size_t>(dim)));
    }
    std::unordered_set<std::string> seen;
    seen.reserve(ids.size());
    for (const auto& id : ids) {
        if (!seen.insert(id).second) {
            throw ValidationError("descriptor set: duplicate id \"" + id + "\"");
        }
    }
    for (size_t i = 0; i < data.size(); i++) {
        if (!std::isfinite(data[i])) {
            throw ValidationError("descriptor set: non-finite value in row " +
                                  std::to_string(i / dim) + " (id \"" +
                                  ids[i / dim] + "\")");
        }
    }
}

void CandidateList::validate() const {
    std::unordered_set<std::string> seen;
    seen.reserve(triples.size());
    for (const auto& t : triples) {
        if (!std::isfinite(t.score)) {
            throw ValidationError("candidates: non-finite score for (" +
                                  t.query_id + ", " + t.reference_id + ")");
        }
        std::string key = t.query_id + '\x1f' + t.reference_id;
        if (!seen.insert(std::move(key)).second) {
            throw ValidationError("candidates: duplicate pair (" + t.query_id +
                                  ", " + t.reference_id + ")");
        }
    }
}

void CandidateList::sort_global() {
    std::sort(triples.begin(), triples.end(),
              [](const Triple& a, const Triple& b) {
                  if (a.score != b.score) return a.score > b.score;
                  if (a.query_id != b.query_id) return a.query_id < b.query_id;
                  return a.reference_id < b.reference_id;
              });
    sorted_by_score = true;
}

} // namespace copydet
