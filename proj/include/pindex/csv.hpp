#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace pindex::csv {

// Quotes a field iff it contains a comma, quote, CR or LF; embedded quotes
// are doubled.
std::string escape_field(const std::string& field);

// Comma-joined record terminated by a single line feed.
void write_record(std::ostream& out, const std::vector<std::string>& fields);

struct Record {
  std::vector<std::string> fields;
  std::size_t line = 0;  // 1-based line the record starts on
};

// Reads every record of the dialect written above. Quoted fields may span
// lines; CRLF input is accepted. Throws ParseError on malformed quoting.
std::vector<Record> read_records(std::istream& in);

}  // namespace pindex::csv
