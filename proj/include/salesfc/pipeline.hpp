#pragma once

// Stage helpers shared by the CLI and the acceptance suite.

#include <cstdint>
#include <map>
#include <vector>

#include "salesfc/features.hpp"
#include "salesfc/seasonality.hpp"

namespace salesfc::pipeline {

// Per retailer, the mean over its records with month <= last_month of the
// basic features followed by the high-level features.
std::map<RetailerId, std::vector<double>> cluster_vectors(const Panel& panel, int last_month);

struct Seasonality {
  seasonality::GroupAssignment groups;
  seasonality::GroupSeries series;  // mean log(1 + sales) per group and month
  std::map<int, seasonality::SeasonalProfile> profiles;
};

// Clusters on months <= fit_last_month and fits each group's profile on the
// same window.
Seasonality build_seasonality(const Panel& panel, int k, int order, int fit_last_month, std::uint64_t seed,
                              int period = 12);

// group_id,month,actual,fitted,in_fit_window over every panel month.
std::string profile_vs_actual_csv(const Seasonality& season, const io::Stamp& stamp);

nlohmann::json profiles_json(const std::map<int, seasonality::SeasonalProfile>& profiles);
std::map<int, seasonality::SeasonalProfile> profiles_from_json(const nlohmann::json& doc);

}  // namespace salesfc::pipeline
