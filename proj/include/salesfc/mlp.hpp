#pragma once

// Feed-forward regressor: affine -> ReLU -> affine -> ReLU -> affine, trained
// with minibatch Adam on a squared or Tweedie loss. Inputs are standardized
// with statistics frozen at training time.

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "json.hpp"
#include "salesfc/loss.hpp"
#include "salesfc/matrix.hpp"

namespace salesfc::mlp {

struct MLPConfig {
  std::array<int, 2> hidden_sizes{64, 32};
  double learning_rate = 0.1;
  int batch_size = 256;
  int epochs = 30;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  LossSpec loss = LossSpec::squared();
  std::uint64_t seed = 0;
  // Keep the epoch with the lowest validation loss (needs validation data).
  bool snapshot_best = false;

  nlohmann::json to_json() const;
  static MLPConfig from_json(const nlohmann::json& doc);
};

inline constexpr std::size_t kLayers = 3;

struct Network {
  std::array<Eigen::MatrixXd, kLayers> weights;  // weights[l] is (out x in)
  std::array<Eigen::VectorXd, kLayers> biases;
  Eigen::VectorXd input_shift;
  Eigen::VectorXd input_scale;
  LossSpec loss = LossSpec::squared();
  std::uint64_t schema_hash = 0;
  MLPConfig config;

  std::size_t n_inputs() const { return static_cast<std::size_t>(weights[0].cols()); }

  nlohmann::json to_json() const;
  static Network from_json(const nlohmann::json& doc);
};

// All-zero network with identity input scaling.
Network zero_network(std::size_t n_inputs, const MLPConfig& config);

// Seeded uniform(-1/sqrt(fan_in), 1/sqrt(fan_in)) weights, zero hidden biases.
Network init_network(std::size_t n_inputs, const MLPConfig& config, double output_bias);

// Raw score (eta).
double forward(const Network& net, std::span<const double> x);
std::vector<double> forward(const Network& net, const Matrix& x);

// Mean in log-sales space: exp(eta) under the Tweedie loss, eta under squared.
double predict(const Network& net, std::span<const double> x);
std::vector<double> predict(const Network& net, const Matrix& x);

struct Gradients {
  std::array<Eigen::MatrixXd, kLayers> weights;
  std::array<Eigen::VectorXd, kLayers> biases;
};

// Mean loss over the rows and, when `grads` is non-null, its gradient with
// respect to every weight and bias.
double loss_and_gradients(const Network& net, const Matrix& x, std::span<const double> targets,
                          Gradients* grads);

struct ValidationData {
  const Matrix& x;
  std::span<const double> targets;
};

// Throws TrainingError naming epoch and batch when the loss turns non-finite.
// `epoch_losses`, when given, receives the mean training loss after each epoch.
Network train(const Matrix& x, std::span<const double> targets, const MLPConfig& config,
              const ValidationData* validation = nullptr, std::vector<double>* epoch_losses = nullptr);

}  // namespace salesfc::mlp
