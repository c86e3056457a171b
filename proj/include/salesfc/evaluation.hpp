#pragma once

// Relative precision RP@p = #{i : |y_i - yhat_i| / y_i < p} / N on the
// original sales scale. Rows with y_i = 0 are excluded from N and counted
// separately.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "salesfc/features.hpp"
#include "salesfc/models.hpp"

namespace salesfc::evaluation {

inline const std::vector<double> kDefaultLevels{0.1, 0.2, 0.3};

// Throws ArgumentError on length mismatch, EvaluationError when every y is zero.
double rp_at_p(std::span<const double> y, std::span<const double> yhat, double p);

struct RPReport {
  std::string model;
  std::string split;
  std::size_t n = 0;              // rows in the denominator
  std::size_t excluded_zero = 0;  // rows dropped for y = 0
  std::map<double, double> rp;

  double at(double p) const;
};

RPReport make_report(std::string model, std::string split, std::span<const double> y,
                     std::span<const double> yhat,
                     const std::vector<double>& levels = kDefaultLevels);

// (a - b) / b
double relative_improvement(double a, double b);

// Long format: model,split,p,value
std::string reports_csv(std::span<const RPReport> reports);

struct Improvement {
  std::string model;
  std::string baseline;
  double p = 0.0;
  double value = 0.0;
};

struct ComparisonConfig {
  std::vector<models::Backend> backends{models::Backend::gbdt, models::Backend::mlp};
  double rho = 1.3;
  gbdt::TrainConfig gbdt;
  mlp::MLPConfig mlp;
  int threads = 1;
};

struct ComparisonTable {
  std::vector<RPReport> reports;  // test split, one per (backend, variant)
  std::vector<Improvement> improvements;

  const RPReport& report(const std::string& model) const;
  std::string text() const;  // human-readable table
};

// Trains base/S/T/ST for each backend on the train split and evaluates on test.
ComparisonTable compare_models(const features::FeatureSet& set, const features::Split& split,
                               const ComparisonConfig& config);

struct SweepResult {
  std::map<double, RPReport> reports;  // validation split
  double best_rho = 0.0;

  std::string csv() const;  // rho,rp01,rp02,rp03
};

// One model per rho (same spec otherwise), scored on the validation split.
// Best rho maximizes RP@0.1; ties go to the smaller rho.
SweepResult rho_sweep(const features::FeatureSet& set, const features::Split& split,
                      const std::vector<double>& grid, const models::ModelSpec& spec);

std::vector<double> default_rho_grid();

}  // namespace salesfc::evaluation
