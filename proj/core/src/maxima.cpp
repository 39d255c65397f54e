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

#include "evtlab/maxima.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <sstream>
#include <string>

#include "evtlab/error.hpp"

namespace evt {
namespace {

// Below this n, pow(F, n) is at least as accurate as the log1p route.
constexpr std::int64_t kLogRouteMinN = 64;

void check_n(std::int64_t n) {
  if (n < 1) fail(ErrorKind::kDomain, "sample size n must be >= 1");
}

double evaluate_at_tail(const MonotoneFn& g, const Distribution& base,
                        double s) {
  if (g.has_one_minus_form() && base.has_upper_gap() &&
      base.support().upper == 1.0) {
    return g.at_one_minus(base.upper_gap(s));
  }
  return g(base.tail_quantile(s));
}

[[noreturn]] void bad_argument(HnForm form, const std::string& what,
                               double value) {
  std::ostringstream os;
  os << to_string(form) << ": quantile argument " << what << " = " << value
     << " leaves (0, 1)";
  fail(ErrorKind::kDomain, os.str());
}

}  // namespace

MaxLaw::MaxLaw(Distribution base, std::int64_t n)
    : base_(std::move(base)), n_(n) {
  check_n(n);
}

double max_cdf(const MaxLaw& law, double x) {
  if (std::isnan(x)) fail(ErrorKind::kDomain, "max_cdf: NaN argument");
  const Distribution& base = law.base();
  if (law.n() == 1) return base.cdf(x);
  const double n = static_cast<double>(law.n());
  if (law.n() >= kLogRouteMinN) {
    const double tail = base.survival(x);
    if (tail < 0.5) return tail <= 0.0 ? 1.0 : std::exp(n * std::log1p(-tail));
  }
  return std::pow(base.cdf(x), n);
}

double sample_max_direct(const MaxLaw& law, RandomStream& rng) {
  double best = law.base().quantile(rng.uniform());
  for (std::int64_t i = 1; i < law.n(); ++i) {
    best = std::max(best, law.base().quantile(rng.uniform()));
  }
  return best;
}

double max_from_exponential(const Distribution& base, std::int64_t n,
                            double omega) {
  check_n(n);
  if (std::isnan(omega) || !(omega > 0.0)) {
    fail(ErrorKind::kDomain, "omega must be positive");
  }
  return base.quantile_at_exp(omega / static_cast<double>(n));
}

double sample_max_exponential_rep(const MaxLaw& law, RandomStream& rng) {
  const double n = static_cast<double>(law.n());
  for (;;) {
    const double y = rng.exponential() / n;
    // e^{-y} == 1 has probability zero; redraw if rounding produces it.
    if (!(-std::expm1(-y) > 0.0)) continue;
    return law.base().quantile_at_exp(y);
  }
}

double MonotoneFn::at_one_minus(double d) const {
  // Without a dedicated form, 1 - d is rounded like any other argument.
  return at_one_minus_ ? at_one_minus_(d) : fn_(1.0 - d);
}

void check_monotone(const MonotoneFn& g, double lo, double hi,
                    std::uint64_t seed) {
  if (std::isnan(lo) || std::isnan(hi)) {
    fail(ErrorKind::kDomain, "check_monotone: NaN range");
  }
  if (!(lo < hi)) return;
  RandomStream rng(seed);
  const bool increasing = g.direction() != Monotonicity::kNonincreasing;
  for (int i = 0; i < 100; ++i) {
    double a = lo + (hi - lo) * rng.uniform();
    double b = lo + (hi - lo) * rng.uniform();
    if (a > b) std::swap(a, b);
    const double ga = g(a);
    const double gb = g(b);
    const bool ok = increasing ? ga <= gb : ga >= gb;
    if (!ok || std::isnan(ga) || std::isnan(gb)) {
      std::ostringstream os;
      os << "normalizer is not "
         << (increasing ? "nondecreasing" : "nonincreasing") << ": g(" << a
         << ") = " << ga << ", g(" << b << ") = " << gb;
      fail(ErrorKind::kContract, os.str());
    }
  }
}

std::string_view to_string(HnForm form) {
  switch (form) {
    case HnForm::kExp:
      return "exp_form";
    case HnForm::kLinear:
      return "linear_form";
    case HnForm::kEpsilon:
      return "epsilon_form";
  }
  return "unknown_form";
}

HnForm parse_hn_form(std::string_view text) {
  if (text == "exp" || text == "exp_form") return HnForm::kExp;
  if (text == "linear" || text == "linear_form") return HnForm::kLinear;
  if (text == "epsilon" || text == "epsilon_form") return HnForm::kEpsilon;
  fail(ErrorKind::kDomain, "unknown h_n form '" + std::string(text) + "'");
}

std::int64_t floor_reciprocal(double eps) {
  if (std::isnan(eps) || !(eps > 0.0) || !(eps <= 1.0)) {
    fail(ErrorKind::kDomain, "floor_reciprocal needs eps in (0, 1]");
  }
  const double reciprocal = 1.0 / eps;
  if (!(reciprocal < 9.0e15)) {
    fail(ErrorKind::kDomain, "eps too small for an exact floor(1/eps)");
  }
  double m = std::floor(std::nextafter(reciprocal, HUGE_VAL));
  // Undo the nudge when it crossed an integer that eps clearly excludes.
  constexpr double kSlack = 4.0 * DBL_EPSILON;
  if (std::fma(m, eps, -1.0) > kSlack) m -= 1.0;
  if (std::fma(m + 1.0, eps, -1.0) <= -kSlack) m += 1.0;
  return static_cast<std::int64_t>(std::max(m, 1.0));
}

double h_n_eval(const MonotoneFn& g_n, const Distribution& base,
                std::int64_t n, double x, HnForm form) {
  check_n(n);
  if (std::isnan(x) || !(x > 0.0) || !std::isfinite(x)) {
    fail(ErrorKind::kDomain, std::string(to_string(form)) + ": needs x > 0");
  }
  const double nd = static_cast<double>(n);
  double s = 0.0;
  switch (form) {
    case HnForm::kExp:
      s = -std::expm1(-x / nd);
      if (!(s > 0.0) || !(s < 1.0)) bad_argument(form, "e^{-x/n}", 1.0 - s);
      break;
    case HnForm::kLinear:
      s = x / nd;
      if (!(s < 1.0)) bad_argument(form, "1 - x/n", 1.0 - s);
      break;
    case HnForm::kEpsilon:
      // eps = 1/n is carried as the exact rational, so floor(1/eps) == n
      // and eps x == x/n.
      s = x / nd;
      if (!(s < 1.0)) bad_argument(form, "1 - eps x", 1.0 - s);
      break;
  }
  return evaluate_at_tail(g_n, base, s);
}

double h_epsilon_eval(const NormalizerBuilder& builder,
                      const Distribution& base, double eps, double x) {
  const std::int64_t m = floor_reciprocal(eps);
  if (std::isnan(x) || !(x > 0.0) || !std::isfinite(x)) {
    fail(ErrorKind::kDomain, "epsilon_form: needs x > 0");
  }
  const double s = eps * x;
  if (!(s < 1.0)) bad_argument(HnForm::kEpsilon, "1 - eps x", 1.0 - s);
  return evaluate_at_tail(builder(m), base, s);
}

}  // namespace evt
