#pragma once

// Backend/variant glue shared by the CLI and the comparison harness.
// Variants: base (no seasonal block, squared loss), s (+seasonal block),
// t (Tweedie loss), st (both). All variants train on log(1 + sales).

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "salesfc/features.hpp"
#include "salesfc/gbdt.hpp"
#include "salesfc/mlp.hpp"

namespace salesfc::models {

enum class Backend { gbdt, mlp };
enum class Variant { base, s, t, st };

Backend parse_backend(std::string_view text);
Variant parse_variant(std::string_view text);
std::string backend_name(Backend backend);
std::string variant_name(Variant variant);
// Display tag such as "GBDT-ST" or "NN".
std::string model_tag(Backend backend, Variant variant);

bool uses_seasonal(Variant variant);
bool uses_tweedie(Variant variant);

// Feature columns seen by a variant; throws ConfigError when the schema lacks
// the seasonal block a variant needs.
std::vector<std::size_t> feature_columns(const features::Schema& schema, Variant variant);

struct ModelSpec {
  Backend backend = Backend::gbdt;
  Variant variant = Variant::base;
  double rho = 1.3;
  gbdt::TrainConfig gbdt;
  mlp::MLPConfig mlp;
  int threads = 1;
};

struct Model {
  Backend backend = Backend::gbdt;
  Variant variant = Variant::base;
  std::vector<std::size_t> columns;
  std::uint64_t schema_hash = 0;
  std::variant<gbdt::Ensemble, mlp::Network> impl;

  nlohmann::json to_json() const;
  static Model from_json(const nlohmann::json& doc);
};

Model train_model(const ModelSpec& spec, const features::FeatureSet& set,
                  std::span<const std::size_t> train_rows,
                  std::span<const std::size_t> valid_rows = {});

// Mean forecast in log-sales space for the given rows.
std::vector<double> predict_log_mean(const Model& model, const features::FeatureSet& set,
                                     std::span<const std::size_t> rows);
// Sales forecasts on the original scale (inverse transform applied).
std::vector<double> predict_sales(const Model& model, const features::FeatureSet& set,
                                  std::span<const std::size_t> rows);

}  // namespace salesfc::models
