#pragma once

// Line-delimited key=value records used for --format structured.
//
//   <type> key=value key=value ...
//
// Keys and values never contain whitespace or '='; an empty value is
// written as "key=". Lists inside a value are comma-separated.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ssd {

class Record {
 public:
  explicit Record(std::string type) : type_(std::move(type)) {}

  const std::string& type() const noexcept { return type_; }
  const std::vector<std::pair<std::string, std::string>>& fields() const noexcept { return fields_; }

  Record& add(std::string key, std::string value);
  Record& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }
  Record& add(std::string key, bool value) { return add(std::move(key), std::string(value ? "1" : "0")); }
  Record& add(std::string key, std::uint64_t value) { return add(std::move(key), std::to_string(value)); }
  Record& add(std::string key, std::int64_t value) { return add(std::move(key), std::to_string(value)); }
  Record& add(std::string key, int value) { return add(std::move(key), std::to_string(value)); }
  Record& add(std::string key, unsigned value) { return add(std::move(key), std::to_string(value)); }
  Record& add_fixed(std::string key, double value, int decimals);

  std::optional<std::string> get(std::string_view key) const;

  std::string to_line() const;

  friend bool operator==(const Record&, const Record&) = default;

 private:
  std::string type_;
  std::vector<std::pair<std::string, std::string>> fields_;
};

/// Inverse of Record::to_line. Throws FormatError on malformed input.
Record parse_record(std::string_view line);

/// Parses every non-empty line.
std::vector<Record> parse_records(std::string_view text);

}  // namespace ssd
