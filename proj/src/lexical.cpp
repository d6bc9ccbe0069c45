#include "pindex/lexical.hpp"

#include <cctype>
#include <stdexcept>

namespace pindex::lex {

const std::vector<std::string> kNotes = {"old", "TODO", "remember", "new"};
const std::vector<std::string> kRoles = {"Executive", "CEO", "Chief", "Admin"};

std::string letter(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("letter() needs a non-empty name");
  return std::string(1, name.front());
}

std::string lower(const std::string& name) {
  std::string out = name;
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string department(Rng& rng) {
  std::size_t segments = 2 + rng.below(4);
  std::string out;
  for (std::size_t s = 0; s < segments; ++s) {
    if (s > 0) out += '-';
    std::size_t len = 1 + rng.below(2);
    for (std::size_t i = 0; i < len; ++i)
      out += static_cast<char>('A' + rng.below(26));
  }
  return out;
}

std::string random_lower(std::size_t n, Rng& rng) {
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out += static_cast<char>('a' + rng.below(26));
  return out;
}

std::string note(Rng& rng) { return rng.pick(kNotes); }

std::string role(Rng& rng) { return rng.pick(kRoles); }

}  // namespace pindex::lex
