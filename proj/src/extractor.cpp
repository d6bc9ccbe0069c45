#include "pindex/extractor.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string_view>

namespace pindex {

namespace {

constexpr std::string_view kWrapperChars = "[](){}\"'<>";
constexpr std::string_view kEdgePunctuation = ",;.-";

bool is_wrapper(char c) { return kWrapperChars.find(c) != std::string_view::npos; }
bool is_edge_punct(char c) { return kEdgePunctuation.find(c) != std::string_view::npos; }

bool is_abbreviation(std::string_view s) {
  return s.size() == 2 && std::isalpha(static_cast<unsigned char>(s[0])) && s[1] == '.';
}

// Emits the tokens of one wrapper-free piece: edge punctuation peels off as
// single-character tokens, the interior stays whole.
void emit_piece(std::string_view piece, std::vector<std::string>& out) {
  while (!piece.empty() && is_edge_punct(piece.front())) {
    out.emplace_back(1, piece.front());
    piece.remove_prefix(1);
  }
  std::vector<char> tail;
  while (!piece.empty() && is_edge_punct(piece.back()) && !is_abbreviation(piece)) {
    tail.push_back(piece.back());
    piece.remove_suffix(1);
  }
  if (!piece.empty()) out.emplace_back(piece);
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) out.emplace_back(1, *it);
}

}  // namespace

std::vector<std::string> tokenize(const std::string& content) {
  std::vector<std::string> tokens;
  std::size_t piece_start = 0;
  for (std::size_t i = 0; i <= content.size(); ++i) {
    bool boundary = i == content.size() ||
                    std::isspace(static_cast<unsigned char>(content[i])) ||
                    is_wrapper(content[i]);
    if (!boundary) continue;
    if (i > piece_start)
      emit_piece(std::string_view(content).substr(piece_start, i - piece_start), tokens);
    piece_start = i + 1;
  }
  return tokens;
}

bool is_proper_name(const std::string& token) {
  if (token.size() < 2) return false;
  if (token[0] < 'A' || token[0] > 'Z') return false;
  for (std::size_t i = 1; i < token.size(); ++i)
    if (token[i] < 'a' || token[i] > 'z') return false;
  return true;
}

std::vector<DetectionSpan> HeuristicDetector::detect(TextId text_id,
                                                     const std::vector<std::string>& tokens,
                                                     const ExtractorConfig& config) {
  std::vector<DetectionSpan> spans;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!is_proper_name(tokens[i])) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end < tokens.size() && is_proper_name(tokens[run_end])) ++run_end;
    while (i < run_end) {
      std::size_t end = std::min(i + 3, run_end);
      DetectionSpan span;
      span.text_id = text_id;
      span.begin = i;
      span.end = end;
      span.tokens.assign(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                         tokens.begin() + static_cast<std::ptrdiff_t>(end));
      double t = static_cast<double>(span.tokens.size());
      double g = 0.0;
      if (config.gazetteer)
        for (const std::string& token : span.tokens)
          if (config.gazetteer->count(token)) {
            g = 1.0;
            break;
          }
      span.confidence = (g + t) / (t + 1.0);  // s == t: every token is proper
      spans.push_back(std::move(span));
      i = end;
    }
  }
  return spans;
}

std::vector<DetectionSpan> detect_name_spans(TextId text_id,
                                             const std::vector<std::string>& tokens,
                                             const ExtractorConfig& config) {
  HeuristicDetector detector;
  std::vector<DetectionSpan> spans = detector.detect(text_id, tokens, config);
  if (config.confidence_threshold)
    std::erase_if(spans, [](const DetectionSpan& s) { return s.confidence < 0.5; });
  return spans;
}

Person assign_name_roles(const DetectionSpan& span) {
  switch (span.tokens.size()) {
    case 1: return Person{std::nullopt, std::nullopt, span.tokens[0]};
    case 2: return Person{span.tokens[1], std::nullopt, span.tokens[0]};
    case 3: return Person{span.tokens[0], span.tokens[1], span.tokens[2]};
    default: throw std::invalid_argument("detection span must hold 1-3 tokens");
  }
}

Person gazetteer_swap(const Person& person, const Gazetteer& gazetteer) {
  bool last_is_first = person.last_name && gazetteer.count(*person.last_name) > 0;
  bool first_is_first = person.first_name && gazetteer.count(*person.first_name) > 0;
  if (!last_is_first || first_is_first) return person;
  Person swapped = person;
  std::swap(swapped.first_name, swapped.last_name);
  return swapped;
}

PersonIndex consolidate_index(const std::vector<Person>& candidates) {
  std::vector<Person> unique;
  for (const Person& candidate : candidates) {
    bool seen = false;
    for (const Person& kept : unique)
      if (persons_equal(kept, candidate)) {
        seen = true;
        break;
      }
    if (!seen) unique.push_back(candidate);
  }

  // A partial entry is folded into a fuller one only when that fuller entry
  // is unique; with several supersets the partial reference stays ambiguous
  // and keeps its own row.
  PersonIndex index;
  PersonId next_id = 0;
  for (const Person& person : unique) {
    int subsumers = 0;
    for (const Person& other : unique)
      if (person_subsumes(other, person)) ++subsumers;
    if (subsumers == 1) continue;
    index.emplace_back(next_id++, person);
  }
  return index;
}

LinkResult link_mentions(const std::vector<ShortText>& texts, const PersonIndex& index) {
  LinkResult result;
  for (const ShortText& text : texts) {
    for (const std::string& token : tokenize(text.content)) {
      std::set<PersonId> matched;
      for (const auto& [id, person] : index)
        if ((person.first_name && *person.first_name == token) ||
            (person.last_name && *person.last_name == token))
          matched.insert(id);
      if (matched.size() == 1) {
        result.relations.insert(MentionRelation{text.id, *matched.begin()});
      } else if (matched.size() >= 2) {
        AmbiguityEntry entry{text.id, token, std::move(matched)};
        if (std::find(result.ambiguities.begin(), result.ambiguities.end(), entry) ==
            result.ambiguities.end())
          result.ambiguities.push_back(std::move(entry));
      }
    }
  }
  return result;
}

AlgorithmOutput extract(const std::vector<ShortText>& texts, const ExtractorConfig& config) {
  HeuristicDetector detector;
  return extract(texts, config, detector);
}

AlgorithmOutput extract(const std::vector<ShortText>& texts, const ExtractorConfig& config,
                        NameDetector& detector) {
  std::vector<Person> candidates;
  for (const ShortText& text : texts) {
    if (config.reset_state_per_text) detector.reset();
    std::vector<std::string> tokens = tokenize(text.content);
    std::vector<DetectionSpan> spans = detector.detect(text.id, tokens, config);
    if (config.confidence_threshold)
      std::erase_if(spans, [](const DetectionSpan& s) { return s.confidence < 0.5; });

    for (const DetectionSpan& span : spans) {
      Person person = assign_name_roles(span);
      bool proper = present_field_count(person) > 0;
      for (const auto* field : {&person.first_name, &person.middle_name, &person.last_name})
        if (*field && !is_proper_name(**field)) proper = false;
      if (!proper) continue;
      if (config.gazetteer) person = gazetteer_swap(person, *config.gazetteer);
      candidates.push_back(std::move(person));
    }
  }

  AlgorithmOutput out;
  out.index = consolidate_index(candidates);
  LinkResult links = link_mentions(texts, out.index);
  out.relations = std::move(links.relations);
  out.ambiguities = std::move(links.ambiguities);
  return out;
}

}  // namespace pindex
