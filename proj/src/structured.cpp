#include "hornrev/structured.hpp"

#include <sstream>

#include "hornrev/budget.hpp"
#include "hornrev/errors.hpp"

#include <cstdlib>

namespace hornrev {

Budget budget_from_env() {
  Budget b;
  if (const char* v = std::getenv("HORNREV_BUDGET")) {
    char* end = nullptr;
    unsigned long long n = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && n > 0) {
      b.subset_limit = n;
      b.relevance_limit = n;
    }
  }
  return b;
}

namespace {

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '|':
      case '=':
      case '\\':
        out += '\\';
        out += c;
        break;
      case '\n':
        out += "\\n";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::string Record::get(const std::string& key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return v;
  return "";
}

std::string emit_record(const Record& r) {
  std::ostringstream os;
  os << escape(r.kind);
  for (const auto& [k, v] : r.fields) os << '|' << escape(k) << '=' << escape(v);
  return os.str();
}

namespace {

// Splits on an unescaped separator, leaving escape sequences in place.
std::vector<std::string> split_raw(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      cur += s[i];
      cur += s[i + 1];
      ++i;
    } else if (s[i] == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += s[i];
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string unescape(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      char n = s[++i];
      out += (n == 'n') ? '\n' : n;
    } else {
      out += s[i];
    }
  }
  return out;
}

}  // namespace

Record parse_record(const std::string& line) {
  Record r;
  std::vector<std::string> parts = split_raw(line, '|');
  if (parts.empty() || parts.front().empty())
    throw Error("empty structured record");
  r.kind = unescape(parts.front());
  for (std::size_t p = 1; p < parts.size(); ++p) {
    std::vector<std::string> kv = split_raw(parts[p], '=');
    if (kv.size() != 2)
      throw Error("structured field without '=': " + parts[p]);
    r.fields.emplace_back(unescape(kv[0]), unescape(kv[1]));
  }
  return r;
}

std::vector<Record> parse_records(const std::string& text) {
  std::vector<Record> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    out.push_back(parse_record(line));
  }
  return out;
}

}  // namespace hornrev
