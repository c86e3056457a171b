#pragma once

// Desk-scale retailer panel with planted group seasonality. Log-sales
// z = log(1 + sales) are Tweedie draws with mean
//   mu_{i,t} = exp(baseline_i + s_{g(i)}(t) + ad_effect * ad_spend_{i,t}).

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "salesfc/panel.hpp"
#include "salesfc/seasonality.hpp"

namespace salesfc::synthetic {

struct SynthConfig {
  int n_retailers = 5000;
  int n_months = 24;
  int n_groups = 5;
  double rho_true = 1.3;
  double phi_true = 0.5;
  std::array<double, 2> amplitude_range{0.3, 0.6};   // first-harmonic amplitude
  std::array<double, 2> baseline_range{-2.0, 2.0};
  double feature_noise = 1.0;  // scale of noise on the basic features
  double ad_effect = 0.25;
  double ad_persistence = 0.7;  // AR(1) coefficient of ad_spend
  // When false, each retailer leaves the panel after a geometric number of
  // months (monthly hazard churn_rate) and stops producing records.
  bool churn_free = true;
  double churn_rate = 0.02;
  std::uint64_t seed = 0;

  void validate() const;  // throws ConfigError
  nlohmann::json to_json() const;
  static SynthConfig from_json(const nlohmann::json& doc);  // missing keys keep defaults
};

struct GroundTruth {
  std::vector<int> group;          // per retailer (retailer id = index + 1)
  std::vector<double> baseline;    // per retailer
  std::vector<seasonality::SeasonalProfile> profiles;  // planted, order 2, per group
  // mu[i][t - 1] in log-sales space; 0 after a retailer churns.
  std::vector<std::vector<double>> mu;
  int n_months = 0;

  nlohmann::json to_json(const std::string& mu_path) const;
  std::string mu_csv_text(const io::Stamp& stamp) const;  // retailer_id,month,mu
};

struct Synthetic {
  Panel panel;
  GroundTruth truth;
};

const std::vector<std::string>& basic_feature_names();

Synthetic generate(const SynthConfig& config);

}  // namespace salesfc::synthetic
