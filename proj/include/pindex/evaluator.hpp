#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pindex/corpus.hpp"

namespace pindex {

// A metric whose denominator was empty is undefined — a reportable value
// (printed "-"), not an error.
using Metric = std::optional<double>;

struct MetricTriple {
  Metric precision;
  Metric recall;
  Metric fscore;
};

struct EvaluationReport {
  MetricTriple index_metrics;      // P
  MetricTriple relation_metrics;   // R
  MetricTriple ambiguity_metrics;  // A
  std::size_t matched_person_count = 0;
};

// Harmonic mean; undefined when an input is undefined or both are zero.
Metric fscore(Metric precision, Metric recall);

using PersonMatches = std::vector<std::pair<PersonId, PersonId>>;

// (gt_id, algo_id) pairs whose persons are equal on all names. Throws
// ValidationError when either index contains duplicate persons.
PersonMatches match_persons(const PersonIndex& gt_index, const PersonIndex& algo_index);

MetricTriple index_metrics(const PersonIndex& gt_index, const PersonIndex& algo_index);

// Per matched person: precision |R̂_m|/|R̂_a| and recall |R̂_m|/|R̂|, each
// skipped when its denominator is empty; final values are unweighted means.
MetricTriple relation_metrics(const std::set<MentionRelation>& gt_relations,
                              const std::set<MentionRelation>& algo_relations,
                              const PersonMatches& matches);

// Both lists flatten to (text, reason, person) triples; algorithm person
// ids translate through the matching, unmatched ones only widen the
// denominator.
MetricTriple ambiguity_metrics(const std::vector<AmbiguityEntry>& gt_ambiguities,
                               const std::vector<AmbiguityEntry>& algo_ambiguities,
                               const PersonMatches& matches);

// Full report. Throws ValidationError on unknown text ids in the output or
// duplicate persons in either index.
EvaluationReport evaluate(const GroundTruth& gt, const AlgorithmOutput& out);

}  // namespace pindex
