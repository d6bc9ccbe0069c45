#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

// Subcommand implementations behind the CLI, callable from tests.
namespace pindex {

struct GenerateOptions {
  std::uint64_t seed = 0;
  int persons = 1;
  int texts = 1;
  int max_mentions = 0;
  int middle_names = 0;
  int ambiguity = 0;
  std::optional<int> ambiguity_group_size;
  std::filesystem::path first_names;
  std::filesystem::path last_names;
  std::filesystem::path out_dir;
};

struct ExtractOptions {
  std::filesystem::path texts;
  std::filesystem::path out_dir;
  std::optional<std::filesystem::path> gazetteer;
  bool reset_state = false;
  bool confidence_threshold = false;
};

struct EvaluateOptions {
  std::filesystem::path ground_truth_dir;
  std::filesystem::path output_dir;
  std::optional<std::filesystem::path> report;
};

// Writes texts.csv, persons.csv, relations.csv, ambiguities.csv into
// out_dir; byte-identical across runs with identical inputs.
void cmd_generate(const GenerateOptions& options);

// Writes persons.csv, relations.csv, ambiguities.csv into out_dir.
void cmd_extract(const ExtractOptions& options);

// Prints the nine metrics to `out`; optionally writes the machine report.
void cmd_evaluate(const EvaluateOptions& options, std::ostream& out);

// Full argv dispatch. Exit codes: 0 success, 1 usage or configuration
// error, 2 malformed or inconsistent data, 3 I/O failure.
int run_cli(int argc, const char* const* argv);

}  // namespace pindex
