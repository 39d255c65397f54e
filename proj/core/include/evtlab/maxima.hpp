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

#ifndef EVTLAB_MAXIMA_HPP_
#define EVTLAB_MAXIMA_HPP_

#include <cstdint>
#include <functional>
#include <string_view>

#include "evtlab/distribution.hpp"
#include "evtlab/random.hpp"

namespace evt {

/// Law of M_n, the maximum of n independent draws from `base`.
class MaxLaw {
 public:
  MaxLaw(Distribution base, std::int64_t n);

  const Distribution& base() const noexcept { return base_; }
  std::int64_t n() const noexcept { return n_; }

 private:
  Distribution base_;
  std::int64_t n_;
};

/// F(x)^n. For large n with a small survival function it is evaluated as
/// exp(n log1p(-(1 - F))), which keeps full relative accuracy.
double max_cdf(const MaxLaw& law, double x);

/// max of n quantile-transform draws.
double sample_max_direct(const MaxLaw& law, RandomStream& rng);

/// F^<-(e^{-omega/n}) for omega > 0.
double max_from_exponential(const Distribution& base, std::int64_t n,
                            double omega);

/// Draws omega = -log(1 - U) and returns F^<-(e^{-omega/n}), which has the
/// law of M_n. A draw with e^{-omega/n} == 1 is discarded and redrawn.
double sample_max_exponential_rep(const MaxLaw& law, RandomStream& rng);

enum class Monotonicity { kNondecreasing, kNonincreasing, kUndeclared };

/// A monotone real map g used as a normalizer.
///
/// Normalizers built for a base with upper endpoint 1 can also supply
/// `at_one_minus(d) == g(1 - d)` so that evaluation near the endpoint never
/// has to round 1 - d. Without it, `at_one_minus(d)` evaluates g(1 - d).
class MonotoneFn {
 public:
  MonotoneFn(ScalarFn fn, Monotonicity direction,
             ScalarFn at_one_minus = nullptr)
      : fn_(std::move(fn)),
        at_one_minus_(std::move(at_one_minus)),
        direction_(direction) {}

  double operator()(double x) const { return fn_(x); }
  Monotonicity direction() const noexcept { return direction_; }
  bool has_one_minus_form() const noexcept {
    return static_cast<bool>(at_one_minus_);
  }
  double at_one_minus(double d) const;

 private:
  ScalarFn fn_;
  ScalarFn at_one_minus_;
  Monotonicity direction_;
};

using NormalizerBuilder = std::function<MonotoneFn(std::int64_t)>;

/// Spot-checks `g` on 100 random pairs in [lo, hi] against its declared
/// direction (nondecreasing when undeclared). Throws kContract on a
/// violation. Deterministic for a given seed.
void check_monotone(const MonotoneFn& g, double lo, double hi,
                    std::uint64_t seed = 0x6d6f6e6fULL);

enum class HnForm {
  kExp,      // g_n(F^<-(e^{-x/n}))
  kLinear,   // g_n(F^<-(1 - x/n))
  kEpsilon,  // g_{floor(1/eps)}(F^<-(1 - eps x)) with eps = 1/n
};

std::string_view to_string(HnForm form);
HnForm parse_hn_form(std::string_view text);

/// floor(1/eps) for eps in (0, 1]. The reciprocal is nudged one ulp upward
/// before flooring so that eps = fl(1/n) maps back to n; the result then
/// satisfies 1/(m+1) < eps <= 1/m up to the rounding already in eps.
std::int64_t floor_reciprocal(double eps);

/// The normalized quantile function h_n(x) in one of its three forms.
/// Throws kDomain (naming the form) when the quantile argument leaves (0, 1).
double h_n_eval(const MonotoneFn& g_n, const Distribution& base,
                std::int64_t n, double x, HnForm form);

/// g_{floor(1/eps)}(F^<-(1 - eps x)) for a free eps in (0, 1).
double h_epsilon_eval(const NormalizerBuilder& builder,
                      const Distribution& base, double eps, double x);

}  // namespace evt

#endif  // EVTLAB_MAXIMA_HPP_
