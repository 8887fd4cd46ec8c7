#pragma once

#include <optional>
#include <string>
#include <vector>

#include "copydet/errors.h"

namespace copydet {

// Transformation classes: G geometric, L local pixel, O partial occlusion,
// P photometric, I insertion on another image, A adversarial attack.
enum class TransformationClass : uint8_t { G, L, O, P, I, A };

char class_letter(TransformationClass c);
TransformationClass class_from_letter(char c);

constexpr int kNumTransformationClasses = 6;

/** Registry of known transformations: name -> class + whether the
 *  transformation carries an intensity value (crop surface fraction,
 *  overlay pixel fraction).
 *
 *  Shipped as a data file (data/transformations.csv) so new transformations
 *  require no code change; builtin() returns the same table compiled in. */
class TransformationRegistry {
public:
    struct Entry {
        std::string name;
        TransformationClass cls;
        bool intensity_bearing = false;
    };

    static const TransformationRegistry& builtin();
    static TransformationRegistry load(const std::string& path);
    static TransformationRegistry from_entries(std::vector<Entry> entries);

    const Entry* find(const std::string& name) const;
    const Entry& at(const std::string& name) const; // throws ValidationError
    const std::vector<Entry>& entries() const { return entries_; }
    size_t size() const { return entries_.size(); }

    /// Names of a class, in registry order.
    std::vector<std::string> names_of_class(TransformationClass cls) const;

private:
    std::vector<Entry> entries_;
    std::vector<size_t> order_; // lookup helper, sorted by name
    size_t lookup(const std::string& name) const;
};

/// One applied transformation step of a query image.
struct TransformationStep {
    std::string name;
    TransformationClass cls = TransformationClass::G;
    std::optional<float> intensity;      // in [0,1], intensity-bearing only
    std::optional<std::string> attack_model; // class A only
};

enum class Source : uint8_t { face, generic };
enum class EditMode : uint8_t { manual, automatic };

/** Per-query provenance: source, edit mode, editor (manual only) and the
 *  ordered transformation steps (automatic only; empty for distractors). */
struct QueryMetadata {
    std::string query_id;
    Source source = Source::generic;
    EditMode edit_mode = EditMode::automatic;
    std::optional<std::string> editor_id;
    std::vector<TransformationStep> steps;

    bool has_class(TransformationClass cls) const;
    const TransformationStep* step_of_class(TransformationClass cls) const;

    /** Enforces the record invariants:
     *   - manual => editor_id present and steps empty;
     *     automatic => editor_id absent
     *   - steps.size() <= 6, at most one step per class
     *   - 5 steps => one step has class A
     *   - step names/classes/intensities agree with the registry
     *  Throws ValidationError with a description of the violation. */
    void validate(const TransformationRegistry& registry) const;
};

} // namespace copydet
