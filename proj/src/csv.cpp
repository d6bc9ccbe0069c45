#include "pindex/csv.hpp"

#include <istream>
#include <iterator>
#include <ostream>

#include "pindex/errors.hpp"

namespace pindex::csv {

std::string escape_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_record(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    out << escape_field(fields[i]);
  }
  out << '\n';
}

std::vector<Record> read_records(std::istream& in) {
  std::string data(std::istreambuf_iterator<char>(in), {});

  std::vector<Record> records;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < data.size()) {
    Record record;
    record.line = line;
    std::string field;
    bool quoted = false;
    bool at_field_start = true;
    for (;; ++i) {
      if (i == data.size()) {
        if (quoted) throw ParseError("unterminated quoted field", record.line);
        record.fields.push_back(std::move(field));
        break;
      }
      char c = data[i];
      if (quoted) {
        if (c == '"') {
          if (i + 1 < data.size() && data[i + 1] == '"') {
            field += '"';
            ++i;
          } else {
            quoted = false;
            if (i + 1 < data.size() && data[i + 1] != ',' && data[i + 1] != '\n' &&
                data[i + 1] != '\r')
              throw ParseError("closing quote not at end of field", line);
          }
        } else {
          if (c == '\n') ++line;
          field += c;
        }
        at_field_start = false;
        continue;
      }
      if (c == '"') {
        if (!at_field_start)
          throw ParseError("quote inside unquoted field", line);
        quoted = true;
        at_field_start = false;
        continue;
      }
      if (c == ',') {
        record.fields.push_back(std::move(field));
        field.clear();
        at_field_start = true;
        continue;
      }
      if (c == '\r' && i + 1 < data.size() && data[i + 1] == '\n') ++i;
      if (data[i] == '\n' || data[i] == '\r') {
        ++line;
        ++i;
        record.fields.push_back(std::move(field));
        break;
      }
      field += c;
      at_field_start = false;
    }
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace pindex::csv
