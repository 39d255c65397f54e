// Copyright 2026 The evtlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EVTLAB_DISTRIBUTION_HPP_
#define EVTLAB_DISTRIBUTION_HPP_

#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evtlab/random.hpp"

namespace evt {

enum class DistKind { kContinuous, kDiscrete };

struct Support {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
};

using ScalarFn = std::function<double(double)>;

/// A univariate law F with its generalized inverse
///
///     F^<-(u) = inf{ x : F(x) > u },
///
/// i.e. the strict-inequality convention. At an atom this returns the right
/// edge of any flat stretch of F at level u, which differs from the more
/// common inf{ x : F(x) >= u }.
///
/// Besides `quantile(u)` the model carries a tail form `tail_quantile(s)`
/// evaluating F^<-(1 - s) directly from the tail mass s. Every extreme-value
/// computation in this library works through tail masses, since forming
/// 1 - s in floating point throws away the digits that matter.
///
/// Values are immutable and cheap to copy (the function table is shared).
class Distribution {
 public:
  struct Model {
    std::string family;
    std::vector<std::pair<std::string, double>> params;
    DistKind kind = DistKind::kContinuous;
    Support support;
    ScalarFn cdf;
    ScalarFn survival;       // 1 - F(x); optional
    ScalarFn quantile;       // F^<-(u); optional, numeric inversion otherwise
    ScalarFn tail_quantile;  // F^<-(1 - s); optional
    ScalarFn upper_gap;      // support.upper - F^<-(1 - s); optional
    std::function<double(double, double)> spread;  // see quantile_spread
  };

  explicit Distribution(Model model);

  const std::string& family() const { return model_->family; }
  const std::vector<std::pair<std::string, double>>& params() const {
    return model_->params;
  }
  /// Canonical `family:param=value,...` form; parses back to the same law.
  std::string spec() const;
  DistKind kind() const { return model_->kind; }
  Support support() const { return model_->support; }

  double cdf(double x) const;
  double survival(double x) const;

  /// F^<-(u) for u in (0, 1). Throws kDomain outside that range or on NaN.
  double quantile(double u) const;
  /// F^<-(1 - s) for tail mass s in (0, 1).
  double tail_quantile(double s) const;
  /// F^<-(1 - s_a) - F^<-(1 - s_b), computed without cancellation near the
  /// upper endpoint when the family allows it.
  double quantile_spread(double s_a, double s_b) const;
  /// F^<-(e^{-y}) for y > 0.
  double quantile_at_exp(double y) const;

  bool has_upper_gap() const { return static_cast<bool>(model_->upper_gap); }
  /// support.upper - F^<-(1 - s); only for families with a finite upper
  /// endpoint and an exact tail representation.
  double upper_gap(double s) const;

 private:
  double raw_quantile(double u) const;
  double raw_tail_quantile(double s) const;

  std::shared_ptr<const Model> model_;
};

// Built-in families.
Distribution uniform(double a = 0.0, double b = 1.0);
Distribution exponential(double rate = 1.0);
/// Pareto law F(x) = 1 - (x / scale)^{-alpha} on [scale, inf).
Distribution pareto(double alpha, double scale = 1.0);
Distribution normal(double mu = 0.0, double sigma = 1.0);
Distribution degenerate(double c);
/// Geometric law on {0, 1, 2, ...}: F(t) = 1 - p^{floor(t + 1)}.
Distribution geometric(double p);
/// A user-supplied nondecreasing, right-continuous cdf; quantiles come from
/// `numeric_quantile`.
Distribution custom(std::string name, DistKind kind, Support support,
                    ScalarFn cdf);

/// Parses `family:param=value[,param=value]`, e.g. `pareto:alpha=2` or
/// `uniform:`. Missing parameters take the factory defaults.
Distribution parse_distribution(std::string_view text);

/// Bracket growth for `numeric_quantile`. The bracket starts at
/// [lower, upper] and each side is pushed outward by a step that grows by
/// `growth` until F(lower) <= u < F(upper).
struct BracketPolicy {
  double lower = -1.0;
  double upper = 1.0;
  double growth = 2.0;
  int max_expansions = 1100;
  double x_rel_tol = 1e-12;
  double x_abs_tol = 1e-15;

  static BracketPolicy for_support(Support support);
};

/// inf{ x : cdf(x) > u } by bisection. Returns the right end of the final
/// bracket, so cdf(result) > u always holds.
///
/// Throws kBracketing when the bracket cannot be made to straddle u, and
/// kContract when cdf is observed to decrease.
double numeric_quantile(const ScalarFn& cdf, double u,
                        const BracketPolicy& policy = {});

/// Draws F^<-(U_i) for `count` independent uniforms from `rng`.
std::vector<double> sample_quantile_transform(const Distribution& dist,
                                              RandomStream& rng,
                                              std::size_t count);

}  // namespace evt

#endif  // EVTLAB_DISTRIBUTION_HPP_
