#pragma once

// Group seasonality: retailers are clustered on their averaged features, each
// group's monthly series is summarized by a truncated Fourier series, and the
// fitted profile is turned into eight seasonal features per (group, month).

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "salesfc/panel.hpp"

namespace salesfc::seasonality {

struct GroupAssignment {
  int k = 0;
  std::map<RetailerId, int> assignment;
  // Centroids live in the standardized space of the kept dimensions.
  std::vector<std::vector<double>> centroids;
  std::vector<std::size_t> kept_dims;
  std::vector<double> objective_history;  // within-cluster SSE after each assignment pass
  int iterations = 0;

  int group_of(RetailerId retailer) const;  // throws DataError when unassigned
};

// k-means with k-means++ seeding on per-dimension standardized vectors.
// Zero-variance dimensions are dropped. Runs to an assignment fixpoint or 300
// iterations; ties go to the lowest centroid index.
GroupAssignment cluster_retailers(const std::map<RetailerId, std::vector<double>>& features, int k,
                                  std::uint64_t seed);

struct GroupSeries {
  int first_month = 0;
  int last_month = 0;
  std::map<int, std::vector<double>> totals;       // group -> per-month sum of member sales
  std::map<int, std::vector<std::size_t>> counts;  // group -> per-month member record count
};

// Per group and month, the sum of member sales over [min month, max month].
GroupSeries aggregate_group_series(const Panel& panel, const GroupAssignment& groups);

// Per group and month, the mean of log(1 + sales) over member records
// (months with no members get 0).
GroupSeries group_log_mean_series(const Panel& panel, const GroupAssignment& groups);

struct SeasonalProfile {
  int group = 0;
  int period = 12;
  int order = 0;
  double a0 = 0.0;
  std::vector<double> a;
  std::vector<double> b;
  int fit_first_month = 0;
  int fit_last_month = 0;
};

// Least-squares fit of a0 + sum_n a_n cos(2 pi n t / period) + b_n sin(2 pi n t / period)
// where element i of `series` is month first_month + i.
SeasonalProfile fit_fourier(std::span<const double> series, int order, int period, int first_month,
                            int group = 0);

double eval_profile(const SeasonalProfile& profile, double t);

inline constexpr std::size_t kSeasonalFeatureCount = 8;
extern const std::array<std::string_view, kSeasonalFeatureCount> kSeasonalFeatureNames;

// Levels at t+1, t+2, t-1 and the mean over [t-5, t+6]; then the step
// v(t+1)-v(t), year-over-year v(t+1)-v(t-11), window range, and window trend
// v(t+6)-v(t-5). Every value comes from the profile, never from observations.
std::array<double, kSeasonalFeatureCount> seasonal_features(const SeasonalProfile& profile, int t);

nlohmann::json to_json(const SeasonalProfile& profile);
SeasonalProfile profile_from_json(const nlohmann::json& doc);

std::string assignment_csv_text(const GroupAssignment& groups, const io::Stamp& stamp);
GroupAssignment read_assignment_csv(const std::filesystem::path& path);

}  // namespace salesfc::seasonality
