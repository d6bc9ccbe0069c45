#include "pindex/commands.hpp"

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "pindex/errors.hpp"
#include "pindex/evaluator.hpp"
#include "pindex/extractor.hpp"
#include "pindex/generator.hpp"
#include "pindex/io.hpp"

namespace pindex {

void cmd_generate(const GenerateOptions& options) {
  GeneratorConfig config;
  config.seed = options.seed;
  config.num_persons = options.persons;
  config.num_texts = options.texts;
  config.max_mentions_per_text = options.max_mentions;
  config.num_middle_names = options.middle_names;
  config.ambiguity_degree = options.ambiguity;
  config.ambiguity_group_size = options.ambiguity_group_size;

  NameCatalogs catalogs = io::read_catalogs(options.first_names, options.last_names);
  GroundTruth gt = generate(config, catalogs);
  io::write_ground_truth(options.out_dir, gt);
}

void cmd_extract(const ExtractOptions& options) {
  ExtractorConfig config;
  config.reset_state_per_text = options.reset_state;
  config.confidence_threshold = options.confidence_threshold;
  if (options.gazetteer) config.gazetteer = io::read_gazetteer(*options.gazetteer);

  std::ifstream in(options.texts, std::ios::binary);
  if (!in) throw IoError("cannot open " + options.texts.string());
  std::vector<ShortText> texts;
  try {
    texts = io::read_texts(in);
  } catch (const ParseError& e) {
    throw ParseError(options.texts.filename().string() + ": " + e.base, e.line);
  }

  io::write_output(options.out_dir, extract(texts, config));
}

void cmd_evaluate(const EvaluateOptions& options, std::ostream& out) {
  GroundTruth gt = io::read_ground_truth(options.ground_truth_dir);
  AlgorithmOutput algo = io::read_output(options.output_dir);
  EvaluationReport report = evaluate(gt, algo);
  io::write_report_text(out, report);
  if (options.report) {
    std::ofstream report_file(*options.report, std::ios::binary);
    if (!report_file)
      throw IoError("cannot open " + options.report->string() + " for writing");
    io::write_report_csv(report_file, report);
  }
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Person index toolkit: ground truth generation, baseline "
               "extraction and evaluation for messy short texts"};
  app.require_subcommand(1);

  GenerateOptions gen;
  int group_size = -1;
  CLI::App* generate = app.add_subcommand(
      "generate", "Generate a ground-truth corpus as four CSV files");
  generate->add_option("--seed", gen.seed, "Random seed")->required();
  generate->add_option("--persons", gen.persons, "Number of persons")->required();
  generate->add_option("--texts", gen.texts, "Number of short texts")->required();
  generate->add_option("--max-mentions", gen.max_mentions,
                       "Maximum persons mentioned per text (0: exactly one, bare)")
      ->required();
  generate->add_option("--middle-names", gen.middle_names,
                       "Number of persons that receive a middle name")
      ->required();
  generate->add_option("--ambiguity", gen.ambiguity, "Ambiguity degree")->required();
  generate->add_option("--ambiguity-group-size", group_size,
                       "Persons per ambiguity group (default: max(degree, 2))");
  generate->add_option("--first-names", gen.first_names, "First-name catalog file")
      ->required();
  generate->add_option("--last-names", gen.last_names, "Last-name catalog file")
      ->required();
  generate->add_option("--out", gen.out_dir, "Output directory")->required();

  ExtractOptions ext;
  std::string gazetteer_path;
  CLI::App* extract_cmd = app.add_subcommand(
      "extract", "Run the baseline extractor over a texts.csv corpus");
  extract_cmd->add_option("--texts", ext.texts, "texts.csv to process")->required();
  extract_cmd->add_option("--out", ext.out_dir, "Output directory")->required();
  extract_cmd->add_option("--gazetteer", gazetteer_path,
                          "First-name list used to correct name order");
  extract_cmd->add_flag("--reset-state", ext.reset_state,
                        "Reset detector state before every text");
  extract_cmd->add_flag("--confidence-threshold", ext.confidence_threshold,
                        "Drop detections with confidence below 0.5");

  EvaluateOptions eval;
  std::string report_path;
  CLI::App* evaluate_cmd = app.add_subcommand(
      "evaluate", "Score an extractor output directory against ground truth");
  evaluate_cmd->add_option("--ground-truth", eval.ground_truth_dir,
                           "Directory with the four ground-truth CSV files")
      ->required();
  evaluate_cmd->add_option("--output", eval.output_dir,
                           "Directory with the three extractor CSV files")
      ->required();
  evaluate_cmd->add_option("--report", report_path,
                           "Write the machine-readable report CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (generate->parsed()) {
      if (group_size >= 0) gen.ambiguity_group_size = group_size;
      cmd_generate(gen);
    } else if (extract_cmd->parsed()) {
      if (!gazetteer_path.empty()) ext.gazetteer = gazetteer_path;
      cmd_extract(ext);
    } else if (evaluate_cmd->parsed()) {
      if (!report_path.empty()) eval.report = report_path;
      cmd_evaluate(eval, std::cout);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace pindex
