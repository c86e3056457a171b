#pragma once

// Supervised examples (x_{i,t}, y_{i,t+1}) assembled from a retailer-month
// panel: basic features at t, history-derived features over months <= t, and
// the group's seasonal block at t. Targets are log(1 + sales).

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "salesfc/matrix.hpp"
#include "salesfc/panel.hpp"
#include "salesfc/seasonality.hpp"

namespace salesfc::features {

double log_transform(double y);
double inverse_transform(double z);

// Level, velocity, acceleration and trailing 3-month mean of one signal.
struct SignalFeatures {
  double level = 0.0;
  double velocity = 0.0;
  double acceleration = 0.0;
  double trailing_mean = 0.0;
};

// window[0] is the value at t, window[1] at t-1, window[2] at t-2. Missing
// slots yield 0 for the quantities that need them.
SignalFeatures signal_features(const std::array<std::optional<double>, 3>& window);

// History-derived features for one retailer. `history` holds that retailer's
// records for months <= t sorted by month; its last element is month t. The
// signals are log(1 + sales) followed by each basic feature; two presence
// flags mark whether t-1 and t-2 were observed.
std::vector<double> high_level_features(std::span<const PanelRecord> history);
std::vector<std::string> high_level_feature_names(const std::vector<std::string>& basic_names);

struct Schema {
  std::vector<std::string> names;
  std::size_t basic_count = 0;
  std::size_t high_level_count = 0;
  std::size_t seasonal_count = seasonality::kSeasonalFeatureCount;

  std::size_t size() const { return names.size(); }
  std::size_t seasonal_begin() const { return basic_count + high_level_count; }
  std::uint64_t hash() const;
  nlohmann::json to_json() const;
  static Schema from_json(const nlohmann::json& doc);
};

struct FeatureRow {
  RetailerId retailer = 0;
  int month = 0;
  std::vector<double> x;
  double y_next = 0.0;
  double z_next = 0.0;
};

struct FeatureSet {
  Schema schema;
  std::vector<FeatureRow> rows;  // sorted by (retailer, month)
};

// Profiles keyed by group id. Throws DataError when a retailer has no group
// or a group has no profile.
FeatureSet assemble(const Panel& panel, const std::map<int, seasonality::SeasonalProfile>& profiles,
                    const seasonality::GroupAssignment& groups);

struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> valid;
  std::vector<std::size_t> test;
};

// train: t <= train_end; valid: train_end < t <= valid_end; test: t > valid_end.
Split time_split(const std::vector<FeatureRow>& rows, int train_end, int valid_end);

Matrix to_matrix(const FeatureSet& set, std::span<const std::size_t> rows,
                 std::span<const std::size_t> columns);
std::vector<double> targets(const FeatureSet& set, std::span<const std::size_t> rows);
std::vector<double> sales_targets(const FeatureSet& set, std::span<const std::size_t> rows);

std::string feature_csv_text(const FeatureSet& set, const io::Stamp& stamp);
FeatureSet read_features(const std::filesystem::path& csv, const std::filesystem::path& schema_json);

}  // namespace salesfc::features
