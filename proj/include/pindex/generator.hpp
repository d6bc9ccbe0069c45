#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pindex/corpus.hpp"
#include "pindex/person.hpp"
#include "pindex/rng.hpp"

namespace pindex {

// Which name components a mention prints at full length (the FN/MN/LN
// columns of the pattern table).
struct NameParts {
  bool first = false;
  bool middle = false;
  bool last = false;

  bool operator==(const NameParts&) const = default;
};

struct GeneratorConfig {
  std::uint64_t seed = 0;
  int num_persons = 1;
  int num_texts = 1;
  // 0 means exactly one bare mention per text, without delimiter or wrapper
  // composition; k >= 1 means a per-text mention count drawn from 1..k with
  // composition applied.
  int max_mentions_per_text = 0;
  int num_middle_names = 0;
  int ambiguity_degree = 0;
  // Unset defaults to max(ambiguity_degree, 2); unused when degree is 0.
  std::optional<int> ambiguity_group_size;

  int resolved_group_size() const;
};

// Throws ConfigError when a config invariant is violated.
void validate_config(const GeneratorConfig& config);

struct NameCatalogs {
  std::vector<std::string> first_names;
  std::vector<std::string> last_names;
};

// Non-empty, distinct, proper-name-shaped entries (see is_proper_name).
void validate_catalogs(const NameCatalogs& catalogs);

inline constexpr int kNumPatterns = 14;

// FN/MN/LN flags for pattern 1..14.
NameParts pattern_parts(int pattern_id);

// True for patterns 11-14, which render the middle name or its initial.
bool pattern_needs_middle(int pattern_id);

struct MentionPlan {
  PersonId person_id = -1;
  int pattern_id = 0;
  std::string rendered;
  NameParts fully_mentioned;
};

// Composition knobs. One delimiter is drawn per text; each mention is
// independently wrapped with probability kWrapProbability.
extern const std::vector<std::string> kDelimiters;
extern const std::vector<std::pair<std::string, std::string>> kWrappers;
extern const double kWrapProbability;

// Builds the person index: first `ambiguity_degree` groups sharing a last
// name, then as many sharing a first name, then persons with globally
// unique names, then `num_middle_names` middle names sprinkled uniformly.
PersonIndex build_person_index(const GeneratorConfig& config,
                               const NameCatalogs& catalogs, Rng& rng);

// Renders one mention of a person through the given pattern. Throws
// std::invalid_argument when the pattern references an absent component.
MentionPlan render_mention(PersonId person_id, const Person& person,
                           int pattern_id, Rng& rng);

struct Classification {
  bool ambiguous = false;
  PersonId person_id = -1;         // unambiguous case: the single candidate
  std::string reason;              // ambiguous case: the mentioned name(s)
  std::set<PersonId> candidates;   // ambiguous case: all consistent persons
};

// Decides whether the plan pins down a single index person. A person is
// consistent with the plan when every fully mentioned component matches
// exactly; components outside fully_mentioned are unconstrained.
Classification classify_mention(const MentionPlan& plan, const PersonIndex& index);

// Joins the rendered mentions into one snippet: per-text delimiter, random
// wrapper pairs around individual mentions.
std::string compose_text(const std::vector<MentionPlan>& plans, Rng& rng);

// One rendered mention and the text it landed in. The trace exists so tests
// can re-check every recorded mention independently of the R/A bookkeeping.
struct MentionRecord {
  TextId text_id = 0;
  MentionPlan plan;
};

struct GenerationResult {
  GroundTruth ground_truth;
  // Corpus order: ascending text id, mention position within the text.
  std::vector<MentionRecord> trace;
};

// Deterministic function of (config, catalogs). All randomness comes from
// one Rng seeded with config.seed, consumed in a fixed order:
//   1. person index (group names, member names, middle-name placement),
//   2. per-text mention counts (raised front-to-back if the draw cannot
//      host every person's first mention),
//   3. first-mention text per person, then the remaining slot fills;
//      members of one ambiguity group never share a text,
//   4. per text: pattern draws (without replacement per person, reset on
//      exhaustion; middle-name persons open with pattern 11), pattern
//      randomness, then composition (delimiter, wrappers).
GenerationResult generate_with_trace(const GeneratorConfig& config,
                                     const NameCatalogs& catalogs);

GroundTruth generate(const GeneratorConfig& config, const NameCatalogs& catalogs);

}  // namespace pindex
