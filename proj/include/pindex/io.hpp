#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "pindex/corpus.hpp"
#include "pindex/evaluator.hpp"
#include "pindex/extractor.hpp"
#include "pindex/generator.hpp"

// CSV persistence for corpora, bundles, name lists and reports.
//
// File schemas (header row, LF line endings, minimal quoting):
//   texts.csv        text_id,text
//   persons.csv      person_id,first_name,middle_name,last_name
//   relations.csv    text_id,person_id
//   ambiguities.csv  text_id,reason,person_ids   (ascending ids, '|'-joined)
namespace pindex::io {

void write_texts(std::ostream& out, const std::vector<ShortText>& texts);
void write_persons(std::ostream& out, const PersonIndex& index);
void write_relations(std::ostream& out, const std::set<MentionRelation>& relations);
void write_ambiguities(std::ostream& out, const std::vector<AmbiguityEntry>& ambiguities);

std::vector<ShortText> read_texts(std::istream& in);
PersonIndex read_persons(std::istream& in);
std::set<MentionRelation> read_relations(std::istream& in);
std::vector<AmbiguityEntry> read_ambiguities(std::istream& in);

// Directory bundles. Ground truth spans all four files, extractor output
// the three without texts.csv. Readers validate structure on load.
void write_ground_truth(const std::filesystem::path& dir, const GroundTruth& gt);
GroundTruth read_ground_truth(const std::filesystem::path& dir);
void write_output(const std::filesystem::path& dir, const AlgorithmOutput& out);
AlgorithmOutput read_output(const std::filesystem::path& dir);

// One name per line, UTF-8, no header; blank lines are skipped.
std::vector<std::string> read_name_list(const std::filesystem::path& path);
NameCatalogs read_catalogs(const std::filesystem::path& first_names,
                           const std::filesystem::path& last_names);
Gazetteer read_gazetteer(const std::filesystem::path& path);

// "0.72"-style two-decimal display, or "-" when undefined.
std::string format_metric_display(const Metric& metric);
// Round-trippable full precision, or "-".
std::string format_metric_exact(const Metric& metric);

// Flat key/value listing, nine metrics in table order plus matched count.
void write_report_text(std::ostream& out, const EvaluationReport& report);
// Machine-readable single-row CSV, full precision, same column order.
void write_report_csv(std::ostream& out, const EvaluationReport& report);

}  // namespace pindex::io
