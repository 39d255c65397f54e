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

#ifndef EVTLAB_NONLINEAR_EVT_HPP_
#define EVTLAB_NONLINEAR_EVT_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "evtlab/distribution.hpp"
#include "evtlab/linear_evt.hpp"
#include "evtlab/maxima.hpp"
#include "evtlab/report.hpp"

namespace evt {

/// x -> G^<-(e^{-n(1 - x)}) for x < 1: normalizes the maximum of n uniforms
/// to the target law G.
MonotoneFn build_g_n(const Distribution& target, std::int64_t n);

/// x -> G^<-(e^{-n(1 - F(x))}) for a continuous base F. Discrete bases are
/// refused with kUnsupportedBase.
MonotoneFn build_g_n_general(const Distribution& target,
                             const Distribution& base, std::int64_t n);

/// t -> (t - b_n)/a_n. Nonincreasing, since a_n < 0.
MonotoneFn affine_normalizer(const NormingConstants& constants);

/// A sequence n -> g_n paired with the base law of the maxima it normalizes.
class NormalizerSequence {
 public:
  NormalizerSequence(std::optional<Distribution> target, Distribution base,
                     NormalizerBuilder builder);

  /// g_n = build_g_n_general(target, base, n).
  static NormalizerSequence construction(Distribution target,
                                         Distribution base);
  /// g_n = affine_normalizer(norming_constants(base, n)).
  static NormalizerSequence affine(Distribution base);

  const std::optional<Distribution>& target() const noexcept {
    return target_;
  }
  const Distribution& base() const noexcept { return base_; }
  const NormalizerBuilder& builder() const noexcept { return builder_; }
  MonotoneFn operator()(std::int64_t n) const { return builder_(n); }

 private:
  std::optional<Distribution> target_;
  Distribution base_;
  NormalizerBuilder builder_;
};

/// max h - min h > tol over the grid. Needs two or more distinct x.
bool nondegeneracy_check(std::span<const std::pair<double, double>> values,
                         double tol);

/// 32-point geometric grid on [1/16, 16].
std::vector<double> default_x_grid();

/// Tabulates h_n(x) over x_grid and n_grid, applies the Cauchy criterion per
/// x, and checks that the limit profile (values at the largest n) is
/// nonconstant. Needs at least two n values.
ConvergenceReport convergence_diagnostic(
    const NormalizerSequence& normalizer, std::span<const double> x_grid,
    std::span<const std::int64_t> n_grid, HnForm form, double tol = 1e-3);

}  // namespace evt

#endif  // EVTLAB_NONLINEAR_EVT_HPP_
