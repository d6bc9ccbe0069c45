#pragma once

// Shared fixtures and data builders for the test binaries.

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "pindex/corpus.hpp"
#include "pindex/generator.hpp"
#include "pindex/io.hpp"

namespace testsupport {

inline std::filesystem::path data_dir() { return {PINDEX_DATA_DIR}; }
inline std::filesystem::path test_data_dir() { return {PINDEX_TEST_DATA_DIR}; }

inline const pindex::NameCatalogs& catalogs() {
  static const pindex::NameCatalogs c = pindex::io::read_catalogs(
      data_dir() / "first_names.txt", data_dir() / "last_names.txt");
  return c;
}

inline const pindex::Gazetteer& first_name_gazetteer() {
  static const pindex::Gazetteer g =
      pindex::io::read_gazetteer(data_dir() / "first_names.txt");
  return g;
}

// The worked example: three texts, four persons, five relations, one
// ambiguity entry ("Baker" could be either Baker).
inline pindex::GroundTruth worked_example() {
  using namespace pindex;
  GroundTruth gt;
  gt.texts = {
      {0, "Baker\nThompson LS-Z-U"},
      {1, "mail to Chief Morgan (Wilson), [remove Baker, Robert]"},
      {2, "Wilson, M.; Susan Lea Baker"},
  };
  gt.index = {
      {0, Person{"Robert", std::nullopt, "Baker"}},
      {1, Person{"Wilson", std::nullopt, "Morgan"}},
      {2, Person{std::nullopt, std::nullopt, "Thompson"}},
      {3, Person{"Susan", "Lea", "Baker"}},
  };
  gt.relations = {{0, 2}, {1, 0}, {1, 1}, {2, 1}, {2, 3}};
  gt.ambiguities = {{0, "Baker", {0, 3}}};
  return gt;
}

inline pindex::AlgorithmOutput as_output(const pindex::GroundTruth& gt) {
  return pindex::AlgorithmOutput{gt.index, gt.relations, gt.ambiguities};
}

// Feasible random generator config within the evaluation grid ranges:
// |P| in [1,40], |T| in [10,300], Max in {0,10}, MN in [0,4], Amb in [0,3].
inline pindex::GeneratorConfig random_config(std::mt19937_64& rng) {
  auto draw = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  pindex::GeneratorConfig config;
  config.seed = rng();
  config.num_persons = draw(1, 40);
  config.num_texts = draw(10, 300);
  config.max_mentions_per_text = (rng() % 2 == 0) ? 0 : 10;
  if (config.max_mentions_per_text == 0 && config.num_persons > config.num_texts)
    config.num_persons = config.num_texts;
  config.num_middle_names = draw(0, std::min(4, config.num_persons));

  // Group structure must fit: 2 * degree * group_size <= |P|.
  std::vector<std::pair<int, std::optional<int>>> choices = {{0, std::nullopt}};
  for (int degree = 1; degree <= 3; ++degree)
    for (int gs = 2; gs <= 3; ++gs)
      if (2 * degree * gs <= config.num_persons && gs <= config.num_texts)
        choices.emplace_back(degree, gs);
  if (config.num_persons >= 8) choices.emplace_back(2, std::nullopt);
  if (config.num_persons >= 18) choices.emplace_back(3, std::nullopt);
  auto [degree, group_size] = choices[rng() % choices.size()];
  config.ambiguity_degree = degree;
  config.ambiguity_group_size = group_size;
  return config;
}

}  // namespace testsupport
