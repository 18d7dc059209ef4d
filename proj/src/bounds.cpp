#include "umtlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "umtlab/error.hpp"

namespace umtlab {

namespace {

void check_common(const BoundParams& params) {
  if (params.m == 0) throw ParameterError("bound: m must be positive");
  if (params.delta <= 0.0 || params.delta >= 1.0) {
    throw ParameterError("bound: delta must be in (0,1)");
  }
  if (params.alpha <= 0.0 || params.alpha > 1.0) {
    throw ParameterError("bound: alpha must be in (0,1]");
  }
}

double ln_theta(const BoundParams& params) {
  if (params.log_theta) return *params.log_theta;
  if (params.theta_count < 1.0) {
    throw ParameterError("bound: theta_count must be at least 1");
  }
  return std::log(params.theta_count);
}

}  // namespace

double kg_bound(const BoundParams& params) {
  check_common(params);
  if (params.p <= 0.0 || params.p >= 1.0) {
    throw ParameterError("kg_bound: p must be in (0,1)");
  }
  if (params.r == 0 || params.n == 0) {
    throw ParameterError("kg_bound: node counts must be positive");
  }
  const double q = 1.0 - params.p;
  const double r = static_cast<double>(params.r);
  const double m = static_cast<double>(params.m);
  // ln(6 n^r / delta) without forming n^r.
  const double ln_tail = std::log(6.0) + r * std::log(static_cast<double>(params.n)) -
                         std::log(params.delta);
  const double bias_term =
      64.0 / (params.alpha * params.alpha * params.p * q * q * r * r) * ln_tail;
  const double sample_term =
      2.0 / (params.alpha * q) * std::sqrt(2.0 / m * ln_tail);
  return std::max(bias_term, sample_term);
}

double cn_bound(const BoundParams& params, bool proof_form) {
  check_common(params);
  if (params.t_size == 0) throw ParameterError("cn_bound: |T| must be positive");
  const double m = static_cast<double>(params.m);
  const double t = static_cast<double>(params.t_size);
  const double inner =
      proof_form ? std::max(1.0 / m, 8.0 / ((1.0 - params.alpha) * t))
                 : std::max(1.0 / m, 16.0 / t);
  const double ln_tail = std::log(6.0) + ln_theta(params) - std::log(params.delta);
  return 6.0 / params.alpha * inner * ln_tail;
}

double cn_lower_bound(const BoundParams& params) {
  check_common(params);
  if (params.t_size == 0) {
    throw ParameterError("cn_lower_bound: |T| must be positive");
  }
  if (params.alpha > 0.5) {
    throw AdmissibilityError("cn_lower_bound: alpha <= 1/2 required");
  }
  const double log2_theta = ln_theta(params) / std::log(2.0);
  const double floor_count =
      static_cast<double>(std::min(params.m, params.t_size));
  if (log2_theta > params.alpha * floor_count) {
    throw AdmissibilityError(
        "cn_lower_bound: admissibility violated: log2|Theta| = " +
        std::to_string(log2_theta) + " > alpha * min(m, |T|) = " +
        std::to_string(params.alpha * floor_count));
  }
  return log2_theta / (params.c2 * params.alpha * floor_count);
}

double rt_bound(const BoundParams& params) {
  check_common(params);
  if (params.a == 0) throw ParameterError("rt_bound: arity must be positive");
  const double m = static_cast<double>(params.m);
  const double a_pow = std::pow(static_cast<double>(params.a),
                                static_cast<double>(params.depth));
  const double ln_tail = std::log(6.0) + ln_theta(params) - std::log(params.delta);
  return 16.0 * std::max(1.0 / m, 4.0 / a_pow) * ln_tail;
}

double gamma_threshold(std::uint64_t m, double theta_count, double delta) {
  if (m == 0) throw ParameterError("gamma_threshold: m must be positive");
  if (theta_count < 1.0) {
    throw ParameterError("gamma_threshold: theta_count must be at least 1");
  }
  if (delta <= 0.0 || delta > 1.0) {
    throw ParameterError("gamma_threshold: delta must be in (0,1]");
  }
  return std::log(theta_count / delta) / static_cast<double>(m);
}

double occam_bound(std::uint64_t m, double theta_count, double delta,
                   bool realizable, double loss_star) {
  if (m == 0) throw ParameterError("occam_bound: m must be positive");
  if (theta_count < 1.0) {
    throw ParameterError("occam_bound: theta_count must be at least 1");
  }
  if (delta <= 0.0 || delta >= 1.0) {
    throw ParameterError("occam_bound: delta must be in (0,1)");
  }
  const double rate = std::log(theta_count / delta) / static_cast<double>(m);
  if (realizable) return rate;
  return loss_star + std::sqrt(rate);
}

double log_factorial(std::uint64_t k) {
  double total = 0.0;
  for (std::uint64_t i = 2; i <= k; ++i) {
    total += std::log(static_cast<double>(i));
  }
  return total;
}

}  // namespace umtlab
