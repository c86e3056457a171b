#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace salesfc::io {

using nlohmann::json;

// Shortest decimal text that parses back to the identical double.
std::string format_double(double value);

double parse_double(std::string_view text, std::string_view context);
std::int64_t parse_int(std::string_view text, std::string_view context);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

// Hash of the canonical (key-sorted, compact) JSON text.
std::string config_hash(const json& config);

// Provenance carried by every artifact: hash of the effective config and the seed.
struct Stamp {
  std::string config_hash;
  std::uint64_t seed = 0;
};

// CSV artifacts carry the stamp as a leading `#` comment line; readers skip
// comment lines.
std::string stamp_line(const Stamp& stamp);

struct CsvTable {
  std::filesystem::path path;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // 1-based source line of each row

  std::size_t column(std::string_view name) const;  // throws DataError when absent
  std::string where(std::size_t row) const;          // "file:line" for messages
};

std::vector<std::string> split_csv_line(std::string_view line);
CsvTable read_csv(const std::filesystem::path& path);

json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& doc);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace salesfc::io
