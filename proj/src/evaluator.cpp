#include "pindex/evaluator.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "pindex/errors.hpp"

namespace pindex {

Metric fscore(Metric precision, Metric recall) {
  if (!precision || !recall) return std::nullopt;
  double sum = *precision + *recall;
  if (sum <= 0.0) return std::nullopt;
  return 2.0 * (*precision * *recall) / sum;
}

PersonMatches match_persons(const PersonIndex& gt_index, const PersonIndex& algo_index) {
  auto check_duplicates = [](const PersonIndex& index, const char* which) {
    for (std::size_t i = 0; i < index.size(); ++i)
      for (std::size_t j = i + 1; j < index.size(); ++j)
        if (persons_equal(index[i].second, index[j].second))
          throw ValidationError(std::string(which) + " index lists person " +
                                person_to_string(index[i].second) + " twice (ids " +
                                std::to_string(index[i].first) + ", " +
                                std::to_string(index[j].first) + ")");
  };
  check_duplicates(gt_index, "ground-truth");
  check_duplicates(algo_index, "algorithm");

  PersonMatches matches;
  for (const auto& [gt_id, gt_person] : gt_index)
    for (const auto& [algo_id, algo_person] : algo_index)
      if (persons_equal(gt_person, algo_person)) {
        matches.emplace_back(gt_id, algo_id);
        break;
      }
  return matches;
}

MetricTriple index_metrics(const PersonIndex& gt_index, const PersonIndex& algo_index) {
  PersonMatches matches = match_persons(gt_index, algo_index);
  double matched = static_cast<double>(matches.size());
  MetricTriple triple;
  if (!algo_index.empty()) triple.precision = matched / static_cast<double>(algo_index.size());
  if (!gt_index.empty()) triple.recall = matched / static_cast<double>(gt_index.size());
  triple.fscore = fscore(triple.precision, triple.recall);
  return triple;
}

MetricTriple relation_metrics(const std::set<MentionRelation>& gt_relations,
                              const std::set<MentionRelation>& algo_relations,
                              const PersonMatches& matches) {
  // Canonical summation order (ascending ground-truth id) keeps the means
  // reproducible bit for bit.
  PersonMatches ordered = matches;
  std::sort(ordered.begin(), ordered.end());

  double precision_sum = 0.0, recall_sum = 0.0;
  std::size_t precision_n = 0, recall_n = 0;
  for (const auto& [gt_id, algo_id] : ordered) {
    std::size_t gt_count = 0, algo_count = 0, common = 0;
    for (const MentionRelation& rel : gt_relations)
      if (rel.person_id == gt_id) ++gt_count;
    for (const MentionRelation& rel : algo_relations) {
      if (rel.person_id != algo_id) continue;
      ++algo_count;
      if (gt_relations.count(MentionRelation{rel.text_id, gt_id})) ++common;
    }
    if (algo_count > 0) {
      precision_sum += static_cast<double>(common) / static_cast<double>(algo_count);
      ++precision_n;
    }
    if (gt_count > 0) {
      recall_sum += static_cast<double>(common) / static_cast<double>(gt_count);
      ++recall_n;
    }
  }

  MetricTriple triple;
  if (precision_n > 0) triple.precision = precision_sum / static_cast<double>(precision_n);
  if (recall_n > 0) triple.recall = recall_sum / static_cast<double>(recall_n);
  triple.fscore = fscore(triple.precision, triple.recall);
  return triple;
}

namespace {

// Flattened ambiguity triple. Algorithm-side persons that match nobody in
// the ground truth live in their own key space (matched == false): they can
// never intersect but still count toward |Â_a|.
using FlatEntry = std::tuple<TextId, std::string, bool, PersonId>;

std::set<FlatEntry> flatten_gt(const std::vector<AmbiguityEntry>& entries) {
  std::set<FlatEntry> flat;
  for (const AmbiguityEntry& entry : entries)
    for (PersonId pid : entry.person_ids)
      flat.emplace(entry.text_id, entry.reason, true, pid);
  return flat;
}

std::set<FlatEntry> flatten_algo(const std::vector<AmbiguityEntry>& entries,
                                 const std::map<PersonId, PersonId>& algo_to_gt) {
  std::set<FlatEntry> flat;
  for (const AmbiguityEntry& entry : entries)
    for (PersonId pid : entry.person_ids) {
      auto hit = algo_to_gt.find(pid);
      if (hit != algo_to_gt.end())
        flat.emplace(entry.text_id, entry.reason, true, hit->second);
      else
        flat.emplace(entry.text_id, entry.reason, false, pid);
    }
  return flat;
}

}  // namespace

MetricTriple ambiguity_metrics(const std::vector<AmbiguityEntry>& gt_ambiguities,
                               const std::vector<AmbiguityEntry>& algo_ambiguities,
                               const PersonMatches& matches) {
  std::map<PersonId, PersonId> algo_to_gt;
  for (const auto& [gt_id, algo_id] : matches) algo_to_gt[algo_id] = gt_id;

  std::set<FlatEntry> gt_flat = flatten_gt(gt_ambiguities);
  std::set<FlatEntry> algo_flat = flatten_algo(algo_ambiguities, algo_to_gt);

  std::size_t common = 0;
  for (const FlatEntry& entry : algo_flat) common += gt_flat.count(entry);

  MetricTriple triple;
  if (!algo_flat.empty())
    triple.precision = static_cast<double>(common) / static_cast<double>(algo_flat.size());
  if (!gt_flat.empty())
    triple.recall = static_cast<double>(common) / static_cast<double>(gt_flat.size());
  triple.fscore = fscore(triple.precision, triple.recall);
  return triple;
}

EvaluationReport evaluate(const GroundTruth& gt, const AlgorithmOutput& out) {
  std::set<TextId> known;
  for (const ShortText& text : gt.texts) known.insert(text.id);
  for (const MentionRelation& rel : out.relations)
    if (!known.count(rel.text_id))
      throw ValidationError("output relation references unknown text " +
                            std::to_string(rel.text_id));
  for (const AmbiguityEntry& entry : out.ambiguities)
    if (!known.count(entry.text_id))
      throw ValidationError("output ambiguity entry references unknown text " +
                            std::to_string(entry.text_id));

  PersonMatches matches = match_persons(gt.index, out.index);

  EvaluationReport report;
  report.matched_person_count = matches.size();
  report.index_metrics = index_metrics(gt.index, out.index);
  report.relation_metrics = relation_metrics(gt.relations, out.relations, matches);
  report.ambiguity_metrics = ambiguity_metrics(gt.ambiguities, out.ambiguities, matches);
  return report;
}

}  // namespace pindex
