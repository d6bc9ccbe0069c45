#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pindex/person.hpp"

namespace pindex {

using TextId = std::int64_t;

// One snippet of the corpus T. Content may contain internal line breaks.
struct ShortText {
  TextId id = 0;
  std::string content;

  bool operator==(const ShortText&) const = default;
};

// A (text, person) pair of the relation R (or R_a).
struct MentionRelation {
  TextId text_id = 0;
  PersonId person_id = 0;

  auto operator<=>(const MentionRelation&) const = default;
};

// A (text, reason, candidate set) triple of the ambiguity list A (or A_a).
struct AmbiguityEntry {
  TextId text_id = 0;
  std::string reason;
  std::set<PersonId> person_ids;

  bool operator==(const AmbiguityEntry&) const = default;
};

using PersonIndex = std::vector<std::pair<PersonId, Person>>;

// The (T, P, R, A) bundle produced by the generator.
struct GroundTruth {
  std::vector<ShortText> texts;
  PersonIndex index;
  std::set<MentionRelation> relations;
  std::vector<AmbiguityEntry> ambiguities;

  bool operator==(const GroundTruth&) const = default;
};

// The (P_a, R_a, A_a) bundle produced by an extractor.
struct AlgorithmOutput {
  PersonIndex index;
  std::set<MentionRelation> relations;
  std::vector<AmbiguityEntry> ambiguities;

  bool operator==(const AlgorithmOutput&) const = default;
};

// Full structural check of every GroundTruth invariant; throws
// ValidationError naming the first offending record.
void validate_ground_truth(const GroundTruth& gt);

// Structural check of an extractor bundle. Text ids cannot be verified
// without the corpus; evaluate() checks those against its ground truth.
void validate_output(const AlgorithmOutput& out);

}  // namespace pindex
