#include "pindex/io.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "pindex/csv.hpp"
#include "pindex/errors.hpp"

namespace pindex::io {

namespace {

const std::vector<std::string> kTextsHeader = {"text_id", "text"};
const std::vector<std::string> kPersonsHeader = {"person_id", "first_name",
                                                 "middle_name", "last_name"};
const std::vector<std::string> kRelationsHeader = {"text_id", "person_id"};
const std::vector<std::string> kAmbiguitiesHeader = {"text_id", "reason",
                                                     "person_ids"};

std::int64_t parse_id(const std::string& field, const char* what, std::size_t line) {
  if (field.empty()) throw ParseError(std::string("empty ") + what, line);
  std::int64_t value = 0;
  for (char c : field) {
    if (c < '0' || c > '9')
      throw ParseError(std::string(what) + " \"" + field + "\" is not a non-negative integer",
                       line);
    value = value * 10 + (c - '0');
  }
  return value;
}

std::vector<csv::Record> read_table(std::istream& in,
                                    const std::vector<std::string>& header) {
  std::vector<csv::Record> records = csv::read_records(in);
  if (records.empty()) throw ParseError("missing header row", 1);
  if (records.front().fields != header) {
    std::string expected;
    for (const std::string& h : header)
      expected += (expected.empty() ? "" : ",") + h;
    throw ParseError("unexpected header; expected \"" + expected + "\"",
                     records.front().line);
  }
  for (const csv::Record& record : records)
    if (record.fields.size() != header.size())
      throw ParseError("expected " + std::to_string(header.size()) + " fields, got " +
                           std::to_string(record.fields.size()),
                       record.line);
  records.erase(records.begin());
  return records;
}

std::optional<std::string> to_component(std::string field) {
  if (field.empty()) return std::nullopt;
  return field;
}

std::string join_ids(const std::set<PersonId>& ids) {
  std::string out;
  for (PersonId id : ids) {
    if (!out.empty()) out += '|';
    out += std::to_string(id);
  }
  return out;
}

}  // namespace

void write_texts(std::ostream& out, const std::vector<ShortText>& texts) {
  csv::write_record(out, kTextsHeader);
  for (const ShortText& text : texts)
    csv::write_record(out, {std::to_string(text.id), text.content});
}

void write_persons(std::ostream& out, const PersonIndex& index) {
  csv::write_record(out, kPersonsHeader);
  for (const auto& [id, person] : index)
    csv::write_record(out, {std::to_string(id), person.first_name.value_or(""),
                            person.middle_name.value_or(""),
                            person.last_name.value_or("")});
}

void write_relations(std::ostream& out, const std::set<MentionRelation>& relations) {
  csv::write_record(out, kRelationsHeader);
  for (const MentionRelation& rel : relations)
    csv::write_record(out, {std::to_string(rel.text_id), std::to_string(rel.person_id)});
}

void write_ambiguities(std::ostream& out, const std::vector<AmbiguityEntry>& ambiguities) {
  csv::write_record(out, kAmbiguitiesHeader);
  for (const AmbiguityEntry& entry : ambiguities)
    csv::write_record(out, {std::to_string(entry.text_id), entry.reason,
                            join_ids(entry.person_ids)});
}

std::vector<ShortText> read_texts(std::istream& in) {
  std::vector<ShortText> texts;
  for (const csv::Record& record : read_table(in, kTextsHeader))
    texts.push_back(ShortText{parse_id(record.fields[0], "text_id", record.line),
                              record.fields[1]});
  return texts;
}

PersonIndex read_persons(std::istream& in) {
  PersonIndex index;
  for (const csv::Record& record : read_table(in, kPersonsHeader)) {
    Person person{to_component(record.fields[1]), to_component(record.fields[2]),
                  to_component(record.fields[3])};
    index.emplace_back(parse_id(record.fields[0], "person_id", record.line), person);
  }
  return index;
}

std::set<MentionRelation> read_relations(std::istream& in) {
  std::set<MentionRelation> relations;
  for (const csv::Record& record : read_table(in, kRelationsHeader))
    relations.insert(
        MentionRelation{parse_id(record.fields[0], "text_id", record.line),
                        parse_id(record.fields[1], "person_id", record.line)});
  return relations;
}

std::vector<AmbiguityEntry> read_ambiguities(std::istream& in) {
  std::vector<AmbiguityEntry> ambiguities;
  for (const csv::Record& record : read_table(in, kAmbiguitiesHeader)) {
    AmbiguityEntry entry;
    entry.text_id = parse_id(record.fields[0], "text_id", record.line);
    entry.reason = record.fields[1];
    std::stringstream ids(record.fields[2]);
    std::string piece;
    while (std::getline(ids, piece, '|'))
      entry.person_ids.insert(parse_id(piece, "person_id", record.line));
    if (entry.person_ids.empty())
      throw ParseError("empty person_ids list", record.line);
    ambiguities.push_back(std::move(entry));
  }
  return ambiguities;
}

namespace {

void write_file(const std::filesystem::path& path,
                const std::function<void(std::ostream&)>& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  writer(out);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

template <typename T>
T read_file(const std::filesystem::path& path,
            T (*reader)(std::istream&)) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return reader(in);
  } catch (const ParseError& e) {
    throw ParseError(path.filename().string() + ": " + e.base, e.line);
  }
}

}  // namespace

void write_ground_truth(const std::filesystem::path& dir, const GroundTruth& gt) {
  std::filesystem::create_directories(dir);
  write_file(dir / "texts.csv", [&](std::ostream& out) { write_texts(out, gt.texts); });
  write_file(dir / "persons.csv", [&](std::ostream& out) { write_persons(out, gt.index); });
  write_file(dir / "relations.csv",
             [&](std::ostream& out) { write_relations(out, gt.relations); });
  write_file(dir / "ambiguities.csv",
             [&](std::ostream& out) { write_ambiguities(out, gt.ambiguities); });
}

GroundTruth read_ground_truth(const std::filesystem::path& dir) {
  GroundTruth gt;
  gt.texts = read_file(dir / "texts.csv", read_texts);
  gt.index = read_file(dir / "persons.csv", read_persons);
  gt.relations = read_file(dir / "relations.csv", read_relations);
  gt.ambiguities = read_file(dir / "ambiguities.csv", read_ambiguities);
  validate_ground_truth(gt);
  return gt;
}

void write_output(const std::filesystem::path& dir, const AlgorithmOutput& out) {
  std::filesystem::create_directories(dir);
  write_file(dir / "persons.csv", [&](std::ostream& os) { write_persons(os, out.index); });
  write_file(dir / "relations.csv",
             [&](std::ostream& os) { write_relations(os, out.relations); });
  write_file(dir / "ambiguities.csv",
             [&](std::ostream& os) { write_ambiguities(os, out.ambiguities); });
}

AlgorithmOutput read_output(const std::filesystem::path& dir) {
  AlgorithmOutput out;
  out.index = read_file(dir / "persons.csv", read_persons);
  out.relations = read_file(dir / "relations.csv", read_relations);
  out.ambiguities = read_file(dir / "ambiguities.csv", read_ambiguities);
  validate_output(out);
  return out;
}

std::vector<std::string> read_name_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) names.push_back(line);
  }
  return names;
}

NameCatalogs read_catalogs(const std::filesystem::path& first_names,
                           const std::filesystem::path& last_names) {
  NameCatalogs catalogs{read_name_list(first_names), read_name_list(last_names)};
  validate_catalogs(catalogs);
  return catalogs;
}

Gazetteer read_gazetteer(const std::filesystem::path& path) {
  std::vector<std::string> names = read_name_list(path);
  return Gazetteer(names.begin(), names.end());
}

std::string format_metric_display(const Metric& metric) {
  if (!metric) return "-";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", *metric);
  return buffer;
}

std::string format_metric_exact(const Metric& metric) {
  if (!metric) return "-";
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%.17g", *metric);
  return buffer;
}

namespace {

const char* kMetricNames[] = {"prec_P", "recall_P", "f_P", "prec_R", "recall_R",
                              "f_R", "prec_A", "recall_A", "f_A"};

std::vector<Metric> metrics_in_table_order(const EvaluationReport& report) {
  return {report.index_metrics.precision,     report.index_metrics.recall,
          report.index_metrics.fscore,        report.relation_metrics.precision,
          report.relation_metrics.recall,     report.relation_metrics.fscore,
          report.ambiguity_metrics.precision, report.ambiguity_metrics.recall,
          report.ambiguity_metrics.fscore};
}

}  // namespace

void write_report_text(std::ostream& out, const EvaluationReport& report) {
  std::vector<Metric> metrics = metrics_in_table_order(report);
  for (std::size_t i = 0; i < metrics.size(); ++i)
    out << kMetricNames[i] << ' ' << format_metric_display(metrics[i]) << '\n';
  out << "matched_persons " << report.matched_person_count << '\n';
}

void write_report_csv(std::ostream& out, const EvaluationReport& report) {
  std::vector<std::string> header(std::begin(kMetricNames), std::end(kMetricNames));
  csv::write_record(out, header);
  std::vector<std::string> row;
  for (const Metric& metric : metrics_in_table_order(report))
    row.push_back(format_metric_exact(metric));
  csv::write_record(out, row);
}

}  // namespace pindex::io
