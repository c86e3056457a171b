#pragma once

#include <span>
#include <string>

#include "json.hpp"
#include "salesfc/tweedie.hpp"

namespace salesfc {

enum class LossKind { squared, tweedie };

// Training loss on targets in log-transformed space. Squared loss fits the
// raw score directly; the Tweedie loss uses a log link so the mean is
// exp(raw score).
struct LossSpec {
  LossKind kind = LossKind::squared;
  double rho = 1.5;

  static LossSpec squared() { return {LossKind::squared, 1.5}; }
  static LossSpec tweedie(double rho);

  std::string tag() const;  // "squared" or "tweedie(1.3)"

  double value(double target, double raw) const;
  tweedie::GradHess grad_hess(double target, double raw) const;
  // Raw score of the best constant predictor.
  double base_score(std::span<const double> targets) const;
  // Mean in target space implied by a raw score.
  double mean(double raw) const;

  friend bool operator==(const LossSpec&, const LossSpec&) = default;
};

nlohmann::json to_json(const LossSpec& loss);
LossSpec loss_from_json(const nlohmann::json& doc);

}  // namespace salesfc
