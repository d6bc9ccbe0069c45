#include "pindex/generator.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "pindex/errors.hpp"
#include "pindex/extractor.hpp"
#include "pindex/lexical.hpp"

namespace pindex {

const std::vector<std::string> kDelimiters = {"; ", ";", " - "};
const std::vector<std::pair<std::string, std::string>> kWrappers = {
    {"[", "]"}, {"{", "}"}, {"(", ")"}, {"\"", "\""}};
const double kWrapProbability = 0.3;

namespace {

struct PatternInfo {
  NameParts parts;
  const char* referenced;  // components the pattern reads at all
  const char* order;       // fully mentioned components in rendered order
};

// Index 0 unused; 1..14 mirror the mention pattern table.
const PatternInfo kPatternTable[kNumPatterns + 1] = {
    {{}, "", ""},
    {{true, false, false}, "F", "F"},    // fn
    {{false, false, true}, "L", "L"},    // ln
    {{true, false, true}, "FL", "FL"},   // fn ln
    {{true, false, true}, "FL", "LF"},   // ln fn
    {{true, false, true}, "FL", "LF"},   // ln, fn
    {{false, false, true}, "FL", "L"},   // ln, letter(fn).
    {{false, false, true}, "L", "L"},    // ln department()
    {{true, false, true}, "FL", "LF"},   // department() \n ln fn
    {{true, false, true}, "FL", "LF"},   // ln fn <lc(ln)@rnd(5).rnd(2)>
    {{true, false, true}, "FL", "LF"},   // note() role() ln fn
    {{true, true, true}, "FML", "FML"},  // fn mn ln
    {{true, false, true}, "FML", "FL"},  // fn letter(mn). ln
    {{false, false, true}, "FML", "L"},  // letter(fn). letter(mn). ln
    {{false, false, true}, "FML", "L"},  // ln, letter(fn). letter(mn).
};

const std::optional<std::string>& component(const Person& person, char which) {
  switch (which) {
    case 'F': return person.first_name;
    case 'M': return person.middle_name;
    default: return person.last_name;
  }
}

void check_pattern_id(int pattern_id) {
  if (pattern_id < 1 || pattern_id > kNumPatterns)
    throw std::invalid_argument("pattern id out of range: " + std::to_string(pattern_id));
}

}  // namespace

int GeneratorConfig::resolved_group_size() const {
  if (ambiguity_group_size) return *ambiguity_group_size;
  return std::max(ambiguity_degree, 2);
}

void validate_config(const GeneratorConfig& config) {
  if (config.num_persons < 1) throw ConfigError("num_persons must be >= 1");
  if (config.num_texts < 1) throw ConfigError("num_texts must be >= 1");
  if (config.max_mentions_per_text < 0)
    throw ConfigError("max_mentions_per_text must be >= 0");
  if (config.num_middle_names < 0) throw ConfigError("num_middle_names must be >= 0");
  if (config.ambiguity_degree < 0) throw ConfigError("ambiguity_degree must be >= 0");
  if (config.ambiguity_group_size && *config.ambiguity_group_size < 2)
    throw ConfigError("ambiguity_group_size must be >= 2");
  if (config.num_middle_names > config.num_persons)
    throw ConfigError("num_middle_names must not exceed num_persons");
  if (config.ambiguity_degree > 0) {
    int group_size = config.resolved_group_size();
    if (2 * config.ambiguity_degree * group_size > config.num_persons)
      throw ConfigError(
          "ambiguity groups need 2 * ambiguity_degree * group_size <= num_persons");
    if (group_size > config.num_texts)
      throw ConfigError(
          "num_texts too small: members of one ambiguity group never share a text, "
          "so each of the " +
          std::to_string(group_size) + " group members needs its own text");
  }
  int per_text_cap = config.max_mentions_per_text == 0
                         ? 1
                         : std::min(config.max_mentions_per_text, config.num_persons);
  if (static_cast<long>(config.num_texts) * per_text_cap < config.num_persons)
    throw ConfigError("num_texts too small to mention every person at least once");
}

void validate_catalogs(const NameCatalogs& catalogs) {
  auto check = [](const std::vector<std::string>& names, const char* which) {
    if (names.empty())
      throw ConfigError(std::string(which) + " catalog is empty");
    std::set<std::string> seen;
    for (const std::string& name : names) {
      if (!is_proper_name(name))
        throw ConfigError(std::string(which) + " catalog entry \"" + name +
                          "\" is not a proper name (uppercase letter followed "
                          "by lowercase letters)");
      if (!seen.insert(name).second)
        throw ConfigError(std::string(which) + " catalog lists \"" + name +
                          "\" twice");
    }
  };
  check(catalogs.first_names, "first-name");
  check(catalogs.last_names, "last-name");
}

NameParts pattern_parts(int pattern_id) {
  check_pattern_id(pattern_id);
  return kPatternTable[pattern_id].parts;
}

bool pattern_needs_middle(int pattern_id) {
  check_pattern_id(pattern_id);
  const char* referenced = kPatternTable[pattern_id].referenced;
  return std::string_view(referenced).find('M') != std::string_view::npos;
}

PersonIndex build_person_index(const GeneratorConfig& config,
                               const NameCatalogs& catalogs, Rng& rng) {
  const int group_size = config.resolved_group_size();
  std::vector<std::string> first_pool = catalogs.first_names;
  std::vector<std::string> last_pool = catalogs.last_names;

  auto draw = [&rng](std::vector<std::string>& pool, const char* which) {
    if (pool.empty())
      throw ConfigError(std::string(which) +
                        " catalog exhausted; supply more names or shrink the "
                        "configuration");
    return rng.take(pool);
  };
  auto retire = [](std::vector<std::string>& pool, const std::string& name) {
    auto it = std::find(pool.begin(), pool.end(), name);
    if (it != pool.end()) pool.erase(it);
  };

  PersonIndex index;
  PersonId next_id = 0;

  // Ambiguous persons come first. A name shared by a group is retired from
  // both pools so it can never introduce ambiguity the records don't cover.
  for (int g = 0; g < config.ambiguity_degree; ++g) {
    std::string shared_last = draw(last_pool, "last-name");
    retire(first_pool, shared_last);
    for (int m = 0; m < group_size; ++m) {
      std::string first = draw(first_pool, "first-name");
      index.emplace_back(next_id++,
                         Person{std::move(first), std::nullopt, shared_last});
    }
  }
  for (int g = 0; g < config.ambiguity_degree; ++g) {
    std::string shared_first = draw(first_pool, "first-name");
    retire(last_pool, shared_first);
    for (int m = 0; m < group_size; ++m) {
      std::string last = draw(last_pool, "last-name");
      index.emplace_back(next_id++,
                         Person{shared_first, std::nullopt, std::move(last)});
    }
  }

  int remaining =
      config.num_persons - 2 * config.ambiguity_degree * group_size;
  for (int i = 0; i < remaining; ++i) {
    std::string first = draw(first_pool, "first-name");
    std::string last = draw(last_pool, "last-name");
    index.emplace_back(next_id++,
                       Person{std::move(first), std::nullopt, std::move(last)});
  }

  if (config.num_middle_names > 0) {
    std::set<std::string> used;
    for (const auto& [id, person] : index) {
      used.insert(*person.first_name);
      used.insert(*person.last_name);
    }
    std::vector<std::string> middle_pool;
    for (const std::string& name : catalogs.first_names)
      if (!used.count(name)) middle_pool.push_back(name);
    if (middle_pool.empty())
      throw ConfigError(
          "first-name catalog exhausted: no names left to use as middle names");

    std::vector<std::size_t> chosen = rng.sample(
        index.size(), static_cast<std::size_t>(config.num_middle_names));
    std::sort(chosen.begin(), chosen.end());
    for (std::size_t i : chosen) index[i].second.middle_name = rng.pick(middle_pool);
  }

  return index;
}

MentionPlan render_mention(PersonId person_id, const Person& person,
                           int pattern_id, Rng& rng) {
  check_pattern_id(pattern_id);
  for (const char* c = kPatternTable[pattern_id].referenced; *c; ++c)
    if (!component(person, *c))
      throw std::invalid_argument("pattern " + std::to_string(pattern_id) +
                                  " references an absent name component of " +
                                  person_to_string(person));

  const std::string first = person.first_name.value_or("");
  const std::string middle = person.middle_name.value_or("");
  const std::string last = person.last_name.value_or("");

  // Random sub-strings are drawn in their left-to-right rendering order.
  std::string rendered;
  switch (pattern_id) {
    case 1: rendered = first; break;
    case 2: rendered = last; break;
    case 3: rendered = first + " " + last; break;
    case 4: rendered = last + " " + first; break;
    case 5: rendered = last + ", " + first; break;
    case 6: rendered = last + ", " + lex::letter(first) + "."; break;
    case 7: rendered = last + " " + lex::department(rng); break;
    case 8: rendered = lex::department(rng) + "\n" + last + " " + first; break;
    case 9: {
      std::string host = lex::random_lower(5, rng);
      std::string tld = lex::random_lower(2, rng);
      rendered = last + " " + first + " <" + lex::lower(last) + "@" + host +
                 "." + tld + ">";
      break;
    }
    case 10: {
      std::string note = lex::note(rng);
      std::string role = lex::role(rng);
      rendered = note + " " + role + " " + last + " " + first;
      break;
    }
    case 11: rendered = first + " " + middle + " " + last; break;
    case 12: rendered = first + " " + lex::letter(middle) + ". " + last; break;
    case 13:
      rendered = lex::letter(first) + ". " + lex::letter(middle) + ". " + last;
      break;
    case 14:
      rendered = last + ", " + lex::letter(first) + ". " + lex::letter(middle) + ".";
      break;
  }
  return MentionPlan{person_id, pattern_id, std::move(rendered),
                     pattern_parts(pattern_id)};
}

Classification classify_mention(const MentionPlan& plan, const PersonIndex& index) {
  const Person* subject = nullptr;
  for (const auto& [id, person] : index)
    if (id == plan.person_id) {
      subject = &person;
      break;
    }
  if (!subject) throw std::invalid_argument("plan's person is not in the index");

  const NameParts parts = plan.fully_mentioned;
  std::set<PersonId> consistent;
  for (const auto& [id, person] : index) {
    if (parts.first && person.first_name != subject->first_name) continue;
    if (parts.middle && person.middle_name != subject->middle_name) continue;
    if (parts.last && person.last_name != subject->last_name) continue;
    consistent.insert(id);
  }

  if (consistent.empty())
    throw std::logic_error("mention is consistent with no index person");
  if (consistent.size() == 1) return {false, *consistent.begin(), "", {}};

  // The mentioned names, joined in the order the pattern renders them.
  std::string reason;
  for (const char* c = kPatternTable[plan.pattern_id].order; *c; ++c) {
    if (!reason.empty()) reason += ' ';
    reason += *component(*subject, *c);
  }
  return {true, -1, std::move(reason), std::move(consistent)};
}

std::string compose_text(const std::vector<MentionPlan>& plans, Rng& rng) {
  if (plans.empty())
    throw std::invalid_argument("compose_text needs at least one mention");

  std::string delimiter;
  if (plans.size() > 1) delimiter = rng.pick(kDelimiters);

  std::string out;
  for (std::size_t i = 0; i < plans.size(); ++i) {
    std::string body = plans[i].rendered;
    if (rng.chance(kWrapProbability)) {
      const auto& [open, close] = rng.pick(kWrappers);
      body = open + body + close;
    }
    if (i > 0) out += delimiter;
    out += body;
  }
  return out;
}

namespace {

// Without-replacement pattern pool per person; resets once exhausted.
// Persons with a middle name draw from 11..14 and always open with 11.
struct PatternState {
  bool has_middle = false;
  bool first_done = false;
  std::vector<int> pool;
};

std::vector<int> legal_patterns(bool has_middle) {
  std::vector<int> pool;
  if (has_middle)
    for (int p = 11; p <= 14; ++p) pool.push_back(p);
  else
    for (int p = 1; p <= 10; ++p) pool.push_back(p);
  return pool;
}

int draw_pattern(PatternState& state, Rng& rng) {
  if (state.has_middle && !state.first_done) {
    state.first_done = true;
    std::erase(state.pool, 11);
    return 11;
  }
  if (state.pool.empty()) state.pool = legal_patterns(state.has_middle);
  return rng.take(state.pool);
}

// Per-text mention counts. Counts are raised (front to back, up to the per
// text cap) when the drawn total could not host every person's first
// mention; validate_config guarantees the raised total suffices.
std::vector<int> draw_mention_counts(const GeneratorConfig& config, Rng& rng) {
  const int cap = config.max_mentions_per_text == 0
                      ? 1
                      : std::min(config.max_mentions_per_text, config.num_persons);
  std::vector<int> counts(static_cast<std::size_t>(config.num_texts), 1);
  if (config.max_mentions_per_text >= 1)
    for (int& count : counts)
      count = std::min(
          static_cast<int>(rng.between(1, config.max_mentions_per_text)), cap);

  long total = std::accumulate(counts.begin(), counts.end(), 0L);
  for (std::size_t i = 0; i < counts.size() && total < config.num_persons; ++i) {
    int add = static_cast<int>(
        std::min<long>(cap - counts[i], config.num_persons - total));
    counts[i] += add;
    total += add;
  }
  return counts;
}

// Members of one ambiguity group never share a text; otherwise a person
// could land in the relation and in an expanded ambiguity entry of the same
// text at once.
bool group_conflict(const std::vector<int>& group_of,
                    const std::vector<PersonId>& text_persons, PersonId p) {
  if (group_of[static_cast<std::size_t>(p)] < 0) return false;
  for (PersonId q : text_persons)
    if (group_of[static_cast<std::size_t>(q)] == group_of[static_cast<std::size_t>(p)])
      return true;
  return false;
}

using Schedule = std::vector<std::vector<PersonId>>;

// Places every person's first mention in a uniformly chosen text with a
// free slot and no group clash. Fails (rarely) when free slots and group
// constraints wedge; the caller retries with fresh draws.
std::optional<Schedule> try_schedule_first_mentions(const GeneratorConfig& config,
                                                    const std::vector<int>& counts,
                                                    const std::vector<int>& group_of,
                                                    Rng& rng) {
  Schedule schedule(counts.size());
  for (PersonId p = 0; p < config.num_persons; ++p) {
    std::vector<std::size_t> candidates;
    for (std::size_t t = 0; t < counts.size(); ++t)
      if (static_cast<int>(schedule[t].size()) < counts[t] &&
          !group_conflict(group_of, schedule[t], p))
        candidates.push_back(t);
    if (candidates.empty()) return std::nullopt;
    schedule[rng.pick(candidates)].push_back(p);
  }
  return schedule;
}

// Fills the remaining slots with uniform draws over the persons still
// admissible for the text; a text simply stays shorter when none are left.
void fill_schedule(const GeneratorConfig& config, const std::vector<int>& counts,
                   const std::vector<int>& group_of, Schedule& schedule, Rng& rng) {
  for (std::size_t t = 0; t < schedule.size(); ++t) {
    while (static_cast<int>(schedule[t].size()) < counts[t]) {
      std::vector<PersonId> candidates;
      for (PersonId p = 0; p < config.num_persons; ++p) {
        if (std::find(schedule[t].begin(), schedule[t].end(), p) !=
            schedule[t].end())
          continue;
        if (group_conflict(group_of, schedule[t], p)) continue;
        candidates.push_back(p);
      }
      if (candidates.empty()) break;
      schedule[t].push_back(rng.pick(candidates));
    }
  }
}

}  // namespace

GenerationResult generate_with_trace(const GeneratorConfig& config,
                                     const NameCatalogs& catalogs) {
  validate_config(config);
  validate_catalogs(catalogs);

  Rng rng(config.seed);
  PersonIndex index = build_person_index(config, catalogs, rng);

  // Group labels follow the construction layout: the first
  // 2 * degree * group_size persons form the groups, block by block.
  const int group_size = config.resolved_group_size();
  std::vector<int> group_of(static_cast<std::size_t>(config.num_persons), -1);
  for (int g = 0; g < 2 * config.ambiguity_degree; ++g)
    for (int m = 0; m < group_size; ++m)
      group_of[static_cast<std::size_t>(g * group_size + m)] = g;

  std::vector<int> counts = draw_mention_counts(config, rng);

  std::optional<Schedule> schedule;
  for (int attempt = 0; attempt < 100 && !schedule; ++attempt)
    schedule = try_schedule_first_mentions(config, counts, group_of, rng);
  if (!schedule)
    throw ConfigError(
        "could not place every person's first mention; increase num_texts");
  fill_schedule(config, counts, group_of, *schedule, rng);

  std::vector<PatternState> pattern_state(
      static_cast<std::size_t>(config.num_persons));
  for (PersonId p = 0; p < config.num_persons; ++p) {
    auto& state = pattern_state[static_cast<std::size_t>(p)];
    state.has_middle = index[static_cast<std::size_t>(p)].second.middle_name.has_value();
    state.pool = legal_patterns(state.has_middle);
  }

  GroundTruth gt;
  gt.index = index;
  std::vector<MentionRecord> trace;

  for (TextId t = 0; t < config.num_texts; ++t) {
    std::vector<MentionPlan> plans;
    for (PersonId p : (*schedule)[static_cast<std::size_t>(t)]) {
      int pattern = draw_pattern(pattern_state[static_cast<std::size_t>(p)], rng);
      plans.push_back(render_mention(
          p, index[static_cast<std::size_t>(p)].second, pattern, rng));
    }

    std::string content = config.max_mentions_per_text == 0
                              ? plans.front().rendered
                              : compose_text(plans, rng);
    gt.texts.push_back(ShortText{t, std::move(content)});

    for (MentionPlan& plan : plans) {
      Classification cls = classify_mention(plan, index);
      if (!cls.ambiguous) {
        gt.relations.insert(MentionRelation{t, cls.person_id});
      } else {
        AmbiguityEntry entry{t, std::move(cls.reason), std::move(cls.candidates)};
        if (std::find(gt.ambiguities.begin(), gt.ambiguities.end(), entry) ==
            gt.ambiguities.end())
          gt.ambiguities.push_back(std::move(entry));
      }
      trace.push_back(MentionRecord{t, std::move(plan)});
    }
  }

  validate_ground_truth(gt);
  return GenerationResult{std::move(gt), std::move(trace)};
}

GroundTruth generate(const GeneratorConfig& config, const NameCatalogs& catalogs) {
  return generate_with_trace(config, catalogs).ground_truth;
}

}  // namespace pindex
