#pragma once

// Second-order gradient-boosted regression trees with a pluggable loss.
// Splits are found by exact greedy search over midpoints between consecutive
// distinct feature values; gains and leaf values carry an L2 penalty.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "salesfc/loss.hpp"
#include "salesfc/matrix.hpp"

namespace salesfc::gbdt {

struct TrainConfig {
  int n_trees = 120;
  double learning_rate = 0.3;
  double l2 = 0.5;
  int max_depth = 5;
  double min_child_weight = 1.0;
  LossSpec loss = LossSpec::squared();
  std::uint64_t seed = 0;
  int threads = 1;  // split-search workers; never changes the result

  nlohmann::json to_json() const;  // excludes `threads`
  static TrainConfig from_json(const nlohmann::json& doc);
};

struct Node {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double value = 0.0;  // leaf value (before learning-rate scaling)
  double gain = 0.0;   // split gain

  bool is_leaf() const { return feature < 0; }
};

struct Tree {
  std::vector<Node> nodes;  // nodes[0] is the root

  // x[feature] < threshold goes left.
  double leaf_value(std::span<const double> x) const;
};

struct Ensemble {
  double base_score = 0.0;
  double learning_rate = 0.3;
  LossSpec loss = LossSpec::squared();
  std::vector<Tree> trees;
  std::size_t n_features = 0;
  std::uint64_t schema_hash = 0;
  std::vector<std::string> feature_names;
  TrainConfig config;

  nlohmann::json to_json() const;
  static Ensemble from_json(const nlohmann::json& doc);
};

struct Prediction {
  double raw;
  double mean;  // exp(raw) under the Tweedie loss, raw under squared loss
};

// Throws ArgumentError for empty or mismatched inputs, DataError for
// non-finite values. `round_losses`, when given, receives the mean training
// loss before the first tree and after each tree.
Ensemble train(const Matrix& x, std::span<const double> targets, const TrainConfig& config,
               std::vector<double>* round_losses = nullptr);

Prediction predict(const Ensemble& ensemble, std::span<const double> x);
std::vector<Prediction> predict(const Ensemble& ensemble, const Matrix& x);

// Total split gain per feature; features never split on are absent.
std::map<std::string, double> feature_gain_report(const Ensemble& ensemble);

}  // namespace salesfc::gbdt
