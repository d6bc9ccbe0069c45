#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace pindex {

using PersonId = std::int64_t;

// A person as a (first, middle, last) name triple. Absent components are
// empty optionals, never empty strings; comparison is case-sensitive.
struct Person {
  std::optional<std::string> first_name;
  std::optional<std::string> middle_name;
  std::optional<std::string> last_name;

  bool operator==(const Person&) const = default;
};

// Invariant check: at least one component present, every present component
// non-empty and free of leading/trailing whitespace.
bool person_valid(const Person& p);

int present_field_count(const Person& p);

// Component-wise exact equality; absent matches only absent.
bool persons_equal(const Person& a, const Person& b);

// True iff every present component of `partial` equals the corresponding
// component of `fuller` and `fuller` has strictly more present components.
bool person_subsumes(const Person& fuller, const Person& partial);

// Human-readable form for error messages, e.g. "(John, -, Kennedy)".
std::string person_to_string(const Person& p);

}  // namespace pindex
