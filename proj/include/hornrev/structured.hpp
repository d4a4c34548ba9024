#ifndef HORNREV_STRUCTURED_HPP
#define HORNREV_STRUCTURED_HPP

#include <map>
#include <string>
#include <vector>

namespace hornrev {

// Line-delimited record format used by the CLI's structured output:
// one record per line, `kind|key=value|key=value`. Values are escaped with
// backslashes for '|', '=', '\' and newline. Field order is fixed per kind
// by the emitters so the output is stable for golden tests.
struct Record {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> fields;

  std::string get(const std::string& key) const;  // empty when absent
};

std::string emit_record(const Record& r);
Record parse_record(const std::string& line);
std::vector<Record> parse_records(const std::string& text);

}  // namespace hornrev

#endif
