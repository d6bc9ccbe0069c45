#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pindex/rng.hpp"

// Helper functions the mention patterns are built from.
namespace pindex::lex {

extern const std::vector<std::string> kNotes;
extern const std::vector<std::string> kRoles;

// First character of a name: letter("Fitzgerald") == "F".
std::string letter(const std::string& name);

// ASCII lower-casing: lower("Kennedy") == "kennedy".
std::string lower(const std::string& name);

// Department-looking code: 2-5 segments of 1-2 uppercase letters joined by
// '-', e.g. "US-Z-G". Draw order: segment count, then per segment its
// length followed by its letters.
std::string department(Rng& rng);

// n uniformly drawn lowercase letters.
std::string random_lower(std::size_t n, Rng& rng);

std::string note(Rng& rng);
std::string role(Rng& rng);

}  // namespace pindex::lex
