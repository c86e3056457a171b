#pragma once

// Tweedie compound Poisson-Gamma distribution for power 1 < rho < 2.
//
// Two parameterizations are supported: the exponential-dispersion form
// Tw(mu, phi, rho) with variance phi * mu^rho, and the compound form in which
// N ~ Poisson(lambda) and the value is the sum of N Gamma(alpha, gamma) draws
// (zero when N = 0). Densities are evaluated via Wright's generalized Bessel
// series; the training loss is the negated log-likelihood under a log link
// with the mu-independent normalizer dropped.

#include <cstddef>
#include <span>

#include "salesfc/random.hpp"

namespace salesfc::tweedie {

// Range of rho accepted by fitting operations. The open interval (1, 2) is
// valid for density evaluation, but the endpoints are singular.
inline constexpr double kMinFitRho = 1.05;
inline constexpr double kMaxFitRho = 1.95;

void check_fit_rho(double rho);

class TweedieParams {
 public:
  TweedieParams(double mu, double phi, double rho);

  double mu() const { return mu_; }
  double phi() const { return phi_; }
  double rho() const { return rho_; }
  double variance() const;

 private:
  double mu_;
  double phi_;
  double rho_;
};

class CompoundParams {
 public:
  CompoundParams(double lambda, double alpha, double gamma);

  double lambda() const { return lambda_; }
  double alpha() const { return alpha_; }
  double gamma() const { return gamma_; }
  double mean() const { return lambda_ * alpha_ * gamma_; }
  double variance() const { return lambda_ * alpha_ * gamma_ * gamma_ * (1.0 + alpha_); }

 private:
  double lambda_;
  double alpha_;
  double gamma_;
};

CompoundParams reparameterize(const TweedieParams& p);

// Pr(Y = 0) = exp(-lambda).
double prob_zero(const TweedieParams& p);
double prob_zero(const CompoundParams& p);

// Log of the normalizer a(y, phi, rho) = (1/y) * sum_j W_j for y > 0.
// Throws NumericError if the series needs more than one million terms.
double log_a(double y, double phi, double rho);

// Log of the density at y > 0, or log Pr(Y = 0) at y = 0.
double log_density(double y, const TweedieParams& p);

// Negative log-likelihood in the raw score eta (mu = exp(eta)), phi = 1,
// normalizer dropped.
double loss(double y, double eta, double rho);

struct GradHess {
  double grad;
  double hess;
};

// First and second derivatives of `loss` with respect to eta.
GradHess loss_grad_hess(double y, double eta, double rho);

double sample(const CompoundParams& p, Rng& rng);
double sample(const TweedieParams& p, Rng& rng);

struct DispersionFit {
  double phi;
  double log_likelihood;
  bool at_boundary;  // estimate sits on the search boundary; treat as degenerate
};

// Maximum-likelihood dispersion for known means, by golden-section search on
// log(phi) over [1e-4, 1e4]. Throws EstimationError when every y is zero.
DispersionFit fit_dispersion(std::span<const double> ys, std::span<const double> mus, double rho);

// Sum of log densities; exposed for likelihood-profile checks.
double total_log_likelihood(std::span<const double> ys, std::span<const double> mus, double phi,
                            double rho);

}  // namespace salesfc::tweedie
