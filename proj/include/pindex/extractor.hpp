#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pindex/corpus.hpp"
#include "pindex/person.hpp"

namespace pindex {

using Gazetteer = std::set<std::string>;

// The three independently switchable features of the baseline.
struct ExtractorConfig {
  bool reset_state_per_text = false;          // (a) reset detector per text
  bool confidence_threshold = false;          // (b) drop detections below 0.5
  std::optional<Gazetteer> gazetteer;         // (c) first-name lookup
};

// A detected run of 1-3 tokens that presumably names one person.
struct DetectionSpan {
  TextId text_id = 0;
  std::size_t begin = 0;  // token index range [begin, end)
  std::size_t end = 0;
  std::vector<std::string> tokens;
  double confidence = 0.0;
};

// Whitespace/newline split; wrapper characters [](){}"'<> are dropped and
// split tokens apart; leading/trailing punctuation (, ; . -) splits off as
// its own token, except the period of a single-letter abbreviation ("J.").
std::vector<std::string> tokenize(const std::string& content);

// One uppercase letter followed by one or more lowercase letters.
bool is_proper_name(const std::string& token);

// Detector contract: emit spans of 1-3 tokens with confidences in [0, 1].
// reset() is invoked before every text while reset_state_per_text is on.
class NameDetector {
 public:
  virtual ~NameDetector() = default;
  virtual void reset() {}
  virtual std::vector<DetectionSpan> detect(TextId text_id,
                                            const std::vector<std::string>& tokens,
                                            const ExtractorConfig& config) = 0;
};

// Default stateless detector: maximal runs of proper-name tokens, split
// left-to-right into chunks of at most 3. Confidence is (g + s) / (t + 1)
// with t tokens, s of them proper names (all, by construction) and g = 1
// when any token hits the gazetteer.
class HeuristicDetector final : public NameDetector {
 public:
  std::vector<DetectionSpan> detect(TextId text_id,
                                    const std::vector<std::string>& tokens,
                                    const ExtractorConfig& config) override;
};

// Runs the default detector, applying the 0.5 cut when configured.
std::vector<DetectionSpan> detect_name_spans(TextId text_id,
                                             const std::vector<std::string>& tokens,
                                             const ExtractorConfig& config);

// 1 token: last name; 2 tokens: last then first; 3 tokens: first, middle,
// last.
Person assign_name_roles(const DetectionSpan& span);

// Swaps first and last name when the gazetteer flags the assumed last name
// as a first name and gives no such evidence for the assumed first name.
Person gazetteer_swap(const Person& person, const Gazetteer& gazetteer);

// Collapses exact duplicates, then absorbs every partial person that is
// subsumed by exactly one fuller entry. Ids follow first occurrence.
PersonIndex consolidate_index(const std::vector<Person>& candidates);

struct LinkResult {
  std::set<MentionRelation> relations;
  std::vector<AmbiguityEntry> ambiguities;
};

// Second pass: matches tokens against first and last names of the index.
// A token matching exactly one person yields a relation, several persons an
// ambiguity entry; duplicates are emitted once.
LinkResult link_mentions(const std::vector<ShortText>& texts, const PersonIndex& index);

// The whole pipeline over the corpus with the default detector.
AlgorithmOutput extract(const std::vector<ShortText>& texts, const ExtractorConfig& config);

// Same pipeline with a caller-supplied detector.
AlgorithmOutput extract(const std::vector<ShortText>& texts, const ExtractorConfig& config,
                        NameDetector& detector);

}  // namespace pindex
