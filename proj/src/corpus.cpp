#include "pindex/corpus.hpp"

#include <map>
#include <string>

#include "pindex/errors.hpp"

namespace pindex {

namespace {

std::map<PersonId, const Person*> index_by_id(const PersonIndex& index) {
  std::map<PersonId, const Person*> by_id;
  for (const auto& [id, person] : index) {
    if (id < 0) throw ValidationError("negative person id " + std::to_string(id));
    if (!person_valid(person))
      throw ValidationError("invalid person " + std::to_string(id) + " " +
                            person_to_string(person));
    if (!by_id.emplace(id, &person).second)
      throw ValidationError("duplicate person id " + std::to_string(id));
  }
  return by_id;
}

void check_ambiguity_refs(const AmbiguityEntry& entry,
                          const std::map<PersonId, const Person*>& persons) {
  if (entry.person_ids.size() < 2)
    throw ValidationError("ambiguity entry for text " +
                          std::to_string(entry.text_id) +
                          " names fewer than 2 persons");
  for (PersonId pid : entry.person_ids)
    if (!persons.count(pid))
      throw ValidationError("ambiguity entry for text " +
                            std::to_string(entry.text_id) +
                            " references unknown person " + std::to_string(pid));
}

}  // namespace

void validate_ground_truth(const GroundTruth& gt) {
  std::map<TextId, const ShortText*> texts;
  for (const ShortText& text : gt.texts) {
    if (text.id < 0) throw ValidationError("negative text id " + std::to_string(text.id));
    if (text.content.empty())
      throw ValidationError("empty content in text " + std::to_string(text.id));
    if (!texts.emplace(text.id, &text).second)
      throw ValidationError("duplicate text id " + std::to_string(text.id));
  }

  auto persons = index_by_id(gt.index);

  std::set<std::pair<TextId, PersonId>> related;
  for (const MentionRelation& rel : gt.relations) {
    if (!texts.count(rel.text_id))
      throw ValidationError("relation references unknown text " +
                            std::to_string(rel.text_id));
    if (!persons.count(rel.person_id))
      throw ValidationError("relation references unknown person " +
                            std::to_string(rel.person_id));
    related.emplace(rel.text_id, rel.person_id);
  }

  std::set<PersonId> mentioned;
  for (const auto& rel : gt.relations) mentioned.insert(rel.person_id);

  for (const AmbiguityEntry& entry : gt.ambiguities) {
    auto text = texts.find(entry.text_id);
    if (text == texts.end())
      throw ValidationError("ambiguity entry references unknown text " +
                            std::to_string(entry.text_id));
    check_ambiguity_refs(entry, persons);
    if (text->second->content.find(entry.reason) == std::string::npos)
      throw ValidationError("ambiguity reason \"" + entry.reason +
                            "\" is not a substring of text " +
                            std::to_string(entry.text_id));
    for (PersonId pid : entry.person_ids) {
      if (related.count({entry.text_id, pid}))
        throw ValidationError("pair (text " + std::to_string(entry.text_id) +
                              ", person " + std::to_string(pid) +
                              ") occurs in both relations and ambiguities");
      mentioned.insert(pid);
    }
  }

  for (const auto& [id, person] : gt.index)
    if (!mentioned.count(id))
      throw ValidationError("person " + std::to_string(id) + " " +
                            person_to_string(person) +
                            " is mentioned by no relation or ambiguity entry");
}

void validate_output(const AlgorithmOutput& out) {
  auto persons = index_by_id(out.index);
  for (const MentionRelation& rel : out.relations)
    if (!persons.count(rel.person_id))
      throw ValidationError("relation references unknown person " +
                            std::to_string(rel.person_id));
  for (const AmbiguityEntry& entry : out.ambiguities) check_ambiguity_refs(entry, persons);
}

}  // namespace pindex
