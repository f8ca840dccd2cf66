#include "ssd/report.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

#include "ssd/errors.hpp"

namespace ssd {

namespace {

bool is_token_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '=';
}

void check_token(std::string_view token, bool allow_empty, std::string_view what) {
  if (token.empty() && !allow_empty) throw FormatError("record " + std::string(what) + " is empty");
  for (char c : token) {
    if (!is_token_char(c)) {
      throw FormatError("record " + std::string(what) + " '" + std::string(token) +
                        "' contains whitespace or '='");
    }
  }
}

}  // namespace

Record& Record::add(std::string key, std::string value) {
  check_token(key, false, "key");
  check_token(value, true, "value");
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

Record& Record::add_fixed(std::string key, double value, int decimals) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << value;
  return add(std::move(key), os.str());
}

std::optional<std::string> Record::get(std::string_view key) const {
  for (const auto& [k, v] : fields_)
    if (k == key) return v;
  return std::nullopt;
}

std::string Record::to_line() const {
  std::string out = type_;
  for (const auto& [k, v] : fields_) {
    out.push_back(' ');
    out += k;
    out.push_back('=');
    out += v;
  }
  return out;
}

Record parse_record(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  if (tokens.empty()) throw FormatError("empty record line");
  if (tokens.front().find('=') != std::string_view::npos) {
    throw FormatError("record line must start with a type: '" + std::string(line) + "'");
  }
  Record record{std::string(tokens.front())};
  for (std::size_t t = 1; t < tokens.size(); ++t) {
    const auto eq = tokens[t].find('=');
    if (eq == std::string_view::npos) {
      throw FormatError("record field '" + std::string(tokens[t]) + "' has no '='");
    }
    record.add(std::string(tokens[t].substr(0, eq)), std::string(tokens[t].substr(eq + 1)));
  }
  return record;
}

std::vector<Record> parse_records(std::string_view text) {
  std::vector<Record> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const auto line = text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back(parse_record(line));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return out;
}

}  // namespace ssd
