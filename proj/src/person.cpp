#include "pindex/person.hpp"

#include <cctype>

namespace pindex {

namespace {

bool component_valid(const std::optional<std::string>& c) {
  if (!c) return true;
  if (c->empty()) return false;
  return !std::isspace(static_cast<unsigned char>(c->front())) &&
         !std::isspace(static_cast<unsigned char>(c->back()));
}

}  // namespace

bool person_valid(const Person& p) {
  if (!p.first_name && !p.middle_name && !p.last_name) return false;
  return component_valid(p.first_name) && component_valid(p.middle_name) &&
         component_valid(p.last_name);
}

int present_field_count(const Person& p) {
  return static_cast<int>(p.first_name.has_value()) +
         static_cast<int>(p.middle_name.has_value()) +
         static_cast<int>(p.last_name.has_value());
}

bool persons_equal(const Person& a, const Person& b) {
  return a.first_name == b.first_name && a.middle_name == b.middle_name &&
         a.last_name == b.last_name;
}

bool person_subsumes(const Person& fuller, const Person& partial) {
  auto covers = [](const std::optional<std::string>& full,
                   const std::optional<std::string>& part) {
    return !part || (full && *full == *part);
  };
  if (!covers(fuller.first_name, partial.first_name)) return false;
  if (!covers(fuller.middle_name, partial.middle_name)) return false;
  if (!covers(fuller.last_name, partial.last_name)) return false;
  return present_field_count(fuller) > present_field_count(partial);
}

std::string person_to_string(const Person& p) {
  auto show = [](const std::optional<std::string>& c) {
    return c ? *c : std::string("-");
  };
  return "(" + show(p.first_name) + ", " + show(p.middle_name) + ", " +
         show(p.last_name) + ")";
}

}  // namespace pindex
