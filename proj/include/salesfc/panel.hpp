#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "salesfc/io.hpp"

namespace salesfc {

using RetailerId = std::int64_t;

// One retailer-month observation. Sales are in monetary units (>= 0).
struct PanelRecord {
  RetailerId retailer = 0;
  int month = 0;
  double sales = 0.0;
  std::vector<double> basic;  // aligned with Panel::feature_names
};

struct Panel {
  std::vector<std::string> feature_names;
  std::vector<PanelRecord> records;

  int min_month() const;
  int max_month() const;
};

// Header: retailer_id,month,sales,<basic feature names...>
Panel read_panel_csv(const std::filesystem::path& path);
std::string panel_csv_text(const Panel& panel, const io::Stamp& stamp);

// Drops retailer-months whose sales reach the cap.
Panel filter_cap(const Panel& panel, double cap);

}  // namespace salesfc
