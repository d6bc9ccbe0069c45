// Acceptance suite: one gate per criterion, one PASS/FAIL line each.
//
// Gates:
//   1  worked-example fidelity (self-evaluation scores 1.00 everywhere)
//   2  f-score arithmetic against reference table rows
//   3  byte-identical generator reruns across the 8-row evaluation grid
//   4  generator invariants on >= 100 random configurations
//   5  evaluator equals the brute-force scoring oracle exactly
//   6  baseline end-to-end recall on the single-person corpus
//   7  baseline metric snapshot across the 8-row grid (frozen golden file)
//   8  gazetteer ablation direction (mean f_P with >= without)
//   9  CSV round-trip fidelity for random corpora
//
// Set PINDEX_UPDATE_SNAPSHOT=1 to re-freeze the gate-7 golden file after an
// intentional baseline change.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pindex/commands.hpp"
#include "pindex/evaluator.hpp"
#include "pindex/extractor.hpp"
#include "pindex/generator.hpp"
#include "pindex/io.hpp"
#include "support.hpp"

using namespace pindex;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int gate, const std::string& name, bool pass, const std::string& detail = "") {
  std::printf("[%s] %d. %s%s%s\n", pass ? "PASS" : "FAIL", gate, name.c_str(),
              detail.empty() ? "" : " — ", detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct GridRow {
  int persons, texts, max_mentions, middle_names, ambiguity;
};

// The 8-row evaluation grid: |P|, |T|, Max, MN, Amb.
const std::vector<GridRow> kGrid = {
    {1, 10, 0, 0, 0},    {1, 200, 0, 0, 0},   {20, 200, 0, 0, 0},
    {20, 200, 10, 0, 0}, {20, 200, 10, 4, 0}, {20, 200, 10, 4, 2},
    {20, 200, 10, 4, 3}, {40, 300, 10, 4, 3},
};

// Reference values for the same grid, reported by the original pre-trained
// statistical detector this heuristic replaces; printed for comparison,
// never asserted.
const char* kReference[8][9] = {
    {"1.00", "1.00", "1.00", "1.00", "1.00", "1.00", "-", "-", "-"},
    {"0.14", "1.00", "0.25", "0.00", "0.00", "-", "-", "-", "-"},
    {"0.63", "0.85", "0.72", "0.82", "0.72", "0.77", "-", "-", "-"},
    {"0.38", "0.90", "0.54", "0.61", "0.09", "0.16", "-", "-", "-"},
    {"0.31", "0.80", "0.45", "0.63", "0.09", "0.16", "-", "-", "-"},
    {"0.39", "0.75", "0.52", "0.47", "0.41", "0.44", "0.03", "1.00", "0.06"},
    {"0.45", "0.85", "0.59", "0.59", "0.54", "0.56", "0.05", "0.95", "0.09"},
    {"0.39", "0.75", "0.52", "0.53", "0.49", "0.51", "0.03", "0.87", "0.06"},
};

GeneratorConfig grid_config(const GridRow& row, std::uint64_t seed) {
  GeneratorConfig config;
  config.seed = seed;
  config.num_persons = row.persons;
  config.num_texts = row.texts;
  config.max_mentions_per_text = row.max_mentions;
  config.num_middle_names = row.middle_names;
  config.ambiguity_degree = row.ambiguity;
  return config;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "<unreadable>";
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> nine_metrics_exact(const EvaluationReport& r) {
  std::vector<std::string> out;
  for (const Metric& m :
       {r.index_metrics.precision, r.index_metrics.recall, r.index_metrics.fscore,
        r.relation_metrics.precision, r.relation_metrics.recall, r.relation_metrics.fscore,
        r.ambiguity_metrics.precision, r.ambiguity_metrics.recall,
        r.ambiguity_metrics.fscore})
    out.push_back(io::format_metric_exact(m));
  return out;
}

bool all_exact_one(const MetricTriple& t) {
  return t.precision && *t.precision == 1.0 && t.recall && *t.recall == 1.0 &&
         t.fscore && *t.fscore == 1.0;
}

// --------------------------------------------------------------------------

void gate1_worked_example() {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    GroundTruth gt = io::read_ground_truth(testsupport::test_data_dir() / "sec11");
    pass = gt.texts.size() == 3 && gt.index.size() == 4 && gt.relations.size() == 5 &&
           gt.ambiguities.size() == 1 && gt.ambiguities[0].person_ids.size() == 2;
    EvaluationReport report = evaluate(gt, testsupport::as_output(gt));
    pass = pass && all_exact_one(report.index_metrics) &&
           all_exact_one(report.relation_metrics) &&
           all_exact_one(report.ambiguity_metrics) && report.matched_person_count == 4;
    double elapsed = seconds_since(start);
    pass = pass && elapsed < 1.0;
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "all defined metrics 1.00, %.3fs", elapsed);
    detail = buffer;
  } catch (const std::exception& e) {
    detail = e.what();
    pass = false;
  }
  report(1, "worked-example fidelity", pass, detail);
}

void gate2_fscore_arithmetic() {
  struct Case {
    double precision, recall, expected;
  };
  const std::vector<Case> cases = {{0.63, 0.85, 0.72}, {0.14, 1.00, 0.25}, {0.45, 0.85, 0.59}};
  bool pass = true;
  std::string detail;
  for (const Case& c : cases) {
    Metric f = fscore(c.precision, c.recall);
    bool ok = f && std::fabs(*f - c.expected) <= 0.005;
    pass = pass && ok;
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "f(%.2f,%.2f)=%.4f ", c.precision, c.recall,
                  f ? *f : -1.0);
    detail += buffer;
  }
  report(2, "f-score arithmetic vs reference rows (±0.005)", pass, detail);
}

void gate3_generator_determinism() {
  auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  fs::path base = fs::temp_directory_path() / "pindex_acceptance_gate3";
  fs::remove_all(base);
  try {
    for (std::size_t row = 0; row < kGrid.size(); ++row) {
      GenerateOptions options;
      options.seed = row + 1;
      options.persons = kGrid[row].persons;
      options.texts = kGrid[row].texts;
      options.max_mentions = kGrid[row].max_mentions;
      options.middle_names = kGrid[row].middle_names;
      options.ambiguity = kGrid[row].ambiguity;
      options.first_names = testsupport::data_dir() / "first_names.txt";
      options.last_names = testsupport::data_dir() / "last_names.txt";

      options.out_dir = base / ("row" + std::to_string(row) + "_a");
      cmd_generate(options);
      options.out_dir = base / ("row" + std::to_string(row) + "_b");
      cmd_generate(options);

      for (const char* name : {"texts.csv", "persons.csv", "relations.csv", "ambiguities.csv"})
        if (slurp(base / ("row" + std::to_string(row) + "_a") / name) !=
            slurp(base / ("row" + std::to_string(row) + "_b") / name)) {
          pass = false;
          detail = "row " + std::to_string(row + 1) + " " + name + " differs";
        }
    }
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  fs::remove_all(base);
  double elapsed = seconds_since(start);
  pass = pass && elapsed < 5.0;
  if (detail.empty()) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "8 rows byte-identical, %.3fs", elapsed);
    detail = buffer;
  }
  report(3, "generator determinism across the grid", pass, detail);
}

void gate4_generator_invariants() {
  std::mt19937_64 rng(2001);
  int violations = 0, runs = 0;
  std::string first_violation;
  for (int i = 0; i < 120; ++i) {
    GeneratorConfig config = testsupport::random_config(rng);
    try {
      GenerationResult result = generate_with_trace(config, testsupport::catalogs());
      ++runs;
      std::vector<std::string> bad = oracles::audit_generation(config, result);
      violations += static_cast<int>(bad.size());
      if (!bad.empty() && first_violation.empty()) first_violation = bad.front();
    } catch (const std::exception& e) {
      ++violations;
      if (first_violation.empty()) first_violation = e.what();
    }
  }
  bool pass = violations == 0 && runs >= 100;
  report(4, "generator invariant suite (120 random configs)", pass,
         pass ? "0 violations" : first_violation);
}

void gate5_evaluator_oracle() {
  std::mt19937_64 rng(31337);
  int mismatches = 0;
  for (int i = 0; i < 50; ++i) {
    GeneratorConfig config;
    config.seed = rng();
    config.num_persons = 1 + static_cast<int>(rng() % 5);
    config.num_texts = 10;
    config.max_mentions_per_text = (rng() % 2 == 0) ? 0 : 10;
    config.num_middle_names = static_cast<int>(rng() % (config.num_persons + 1));
    if (config.num_persons >= 4 && rng() % 2 == 0) {
      config.ambiguity_degree = 1;
      config.ambiguity_group_size = 2;
    }
    GroundTruth gt = generate(config, testsupport::catalogs());
    AlgorithmOutput out = oracles::perturb_output(gt, rng);
    EvaluationReport got = evaluate(gt, out);
    oracles::OracleReport want = oracles::oracle_evaluate(gt, out);

    std::vector<std::string> have = nine_metrics_exact(got);
    EvaluationReport oracle_as_report;
    oracle_as_report.index_metrics = {want.index.precision, want.index.recall,
                                      want.index.fscore};
    oracle_as_report.relation_metrics = {want.relation.precision, want.relation.recall,
                                         want.relation.fscore};
    oracle_as_report.ambiguity_metrics = {want.ambiguity.precision, want.ambiguity.recall,
                                          want.ambiguity.fscore};
    if (have != nine_metrics_exact(oracle_as_report) ||
        got.matched_person_count != want.matched)
      ++mismatches;
  }
  report(5, "evaluator equals brute-force oracle (50 small instances, exact)",
         mismatches == 0,
         mismatches == 0 ? "0 mismatches" : std::to_string(mismatches) + " mismatches");
}

void gate6_baseline_recall() {
  auto start = std::chrono::steady_clock::now();
  GroundTruth gt = generate(grid_config(kGrid[0], 1), testsupport::catalogs());
  ExtractorConfig config;
  config.gazetteer = testsupport::first_name_gazetteer();
  EvaluationReport report_row1 = evaluate(gt, extract(gt.texts, config));

  double elapsed = seconds_since(start);
  bool pass = report_row1.index_metrics.recall &&
              *report_row1.index_metrics.recall == 1.0 && elapsed < 2.0;
  std::string detail =
      "recall_P=" + io::format_metric_display(report_row1.index_metrics.recall) +
      " (reference 1.00, asserted); prec_P=" +
      io::format_metric_display(report_row1.index_metrics.precision) +
      ", f_P=" + io::format_metric_display(report_row1.index_metrics.fscore) +
      " (report-only; reference detector scored 1.00/1.00)";
  report(6, "baseline end-to-end on the single-person corpus", pass, detail);
}

void gate7_regression_snapshot() {
  fs::path golden = testsupport::test_data_dir() / "regression_snapshot.csv";
  std::vector<std::vector<std::string>> rows;
  for (std::size_t row = 0; row < kGrid.size(); ++row) {
    GroundTruth gt = generate(grid_config(kGrid[row], row + 1), testsupport::catalogs());
    ExtractorConfig config;
    config.gazetteer = testsupport::first_name_gazetteer();
    EvaluationReport r = evaluate(gt, extract(gt.texts, config));
    rows.push_back(nine_metrics_exact(r));
  }

  std::stringstream rendered;
  rendered << "row,prec_P,recall_P,f_P,prec_R,recall_R,f_R,prec_A,recall_A,f_A\n";
  for (std::size_t row = 0; row < rows.size(); ++row) {
    rendered << row + 1;
    for (const std::string& value : rows[row]) rendered << ',' << value;
    rendered << '\n';
  }

  std::printf("    baseline vs reference values (row: ours | reference)\n");
  const char* names[] = {"prec_P", "recall_P", "f_P", "prec_R", "recall_R",
                         "f_R",    "prec_A",   "recall_A", "f_A"};
  for (std::size_t row = 0; row < rows.size(); ++row) {
    std::printf("    row %zu:", row + 1);
    for (int m = 0; m < 9; ++m) {
      double value;
      char shown[16];
      if (rows[row][static_cast<std::size_t>(m)] == "-")
        std::snprintf(shown, sizeof shown, "-");
      else {
        value = std::stod(rows[row][static_cast<std::size_t>(m)]);
        std::snprintf(shown, sizeof shown, "%.2f", value);
      }
      std::printf(" %s=%s|%s", names[m], shown, kReference[row][m]);
    }
    std::printf("\n");
  }

  if (std::getenv("PINDEX_UPDATE_SNAPSHOT")) {
    std::ofstream out(golden, std::ios::binary);
    out << rendered.str();
    report(7, "baseline regression snapshot", true, "snapshot re-frozen");
    return;
  }

  std::string want = slurp(golden);
  bool pass = want == rendered.str();
  report(7, "baseline regression snapshot (8 rows, exact)", pass,
         pass ? "matches golden file" : "differs from " + golden.string());
}

void gate8_ablation_direction() {
  std::mt19937_64 rng(77);
  double with_sum = 0.0, without_sum = 0.0;
  int counted = 0;
  bool defined = true;
  const std::vector<int> person_counts = {5, 10, 15, 20, 25};
  const std::vector<int> text_counts = {60, 100, 150, 200};
  for (int i = 0; i < 20; ++i) {
    GeneratorConfig config;
    config.seed = rng();
    config.num_persons = person_counts[static_cast<std::size_t>(i) % person_counts.size()];
    config.num_texts = text_counts[static_cast<std::size_t>(i) % text_counts.size()];
    config.max_mentions_per_text = (i % 2 == 0) ? 0 : 10;
    GroundTruth gt = generate(config, testsupport::catalogs());

    ExtractorConfig with;
    with.gazetteer = testsupport::first_name_gazetteer();
    EvaluationReport with_report = evaluate(gt, extract(gt.texts, with));
    EvaluationReport without_report = evaluate(gt, extract(gt.texts, ExtractorConfig{}));

    if (!with_report.index_metrics.fscore || !without_report.index_metrics.fscore) {
      defined = false;
      continue;
    }
    with_sum += *with_report.index_metrics.fscore;
    without_sum += *without_report.index_metrics.fscore;
    ++counted;
  }
  double with_mean = with_sum / counted, without_mean = without_sum / counted;
  bool pass = defined && counted == 20 && with_mean >= without_mean;
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "mean f_P with gazetteer %.3f vs %.3f without",
                with_mean, without_mean);
  report(8, "gazetteer ablation direction (20 datasets)", pass, buffer);
}

void gate9_round_trip() {
  std::mt19937_64 rng(90210);
  int mismatches = 0;
  for (int i = 0; i < 50; ++i) {
    GeneratorConfig config = testsupport::random_config(rng);
    GroundTruth gt = generate(config, testsupport::catalogs());

    std::stringstream texts, persons, relations, ambiguities;
    io::write_texts(texts, gt.texts);
    io::write_persons(persons, gt.index);
    io::write_relations(relations, gt.relations);
    io::write_ambiguities(ambiguities, gt.ambiguities);

    GroundTruth back;
    back.texts = io::read_texts(texts);
    back.index = io::read_persons(persons);
    back.relations = io::read_relations(relations);
    back.ambiguities = io::read_ambiguities(ambiguities);
    if (!(back == gt)) ++mismatches;
  }
  report(9, "CSV round-trip fidelity (50 random corpora)", mismatches == 0,
         mismatches == 0 ? "all byte-faithful" : std::to_string(mismatches) + " mismatches");
}

}  // namespace

int main() {
  gate1_worked_example();
  gate2_fscore_arithmetic();
  gate3_generator_determinism();
  gate4_generator_invariants();
  gate5_evaluator_oracle();
  gate6_baseline_recall();
  gate7_regression_snapshot();
  gate8_ablation_direction();
  gate9_round_trip();

  if (failures == 0)
    std::printf("acceptance: all 9 gates passed\n");
  else
    std::printf("acceptance: %d gate(s) FAILED\n", failures);
  return failures;
}
