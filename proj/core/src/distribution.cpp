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

#include "evtlab/distribution.hpp"

#include <algorithm>
#include <boost/math/special_functions/erf.hpp>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <system_error>

#include "evtlab/error.hpp"
#include "evtlab/geometric.hpp"

namespace evt {
namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

void check_probability(double u, const char* what) {
  if (std::isnan(u) || !(u > 0.0) || !(u < 1.0)) {
    std::ostringstream os;
    os << what << " must lie in the open interval (0, 1), got " << u;
    fail(ErrorKind::kDomain, os.str());
  }
}

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

}  // namespace

Distribution::Distribution(Model model)
    : model_(std::make_shared<const Model>(std::move(model))) {
  if (!model_->cdf) fail(ErrorKind::kDomain, "distribution needs a cdf");
}

std::string Distribution::spec() const {
  std::string out = model_->family + ":";
  for (std::size_t i = 0; i < model_->params.size(); ++i) {
    if (i > 0) out += ",";
    out += model_->params[i].first + "=" +
           format_double(model_->params[i].second);
  }
  return out;
}

double Distribution::cdf(double x) const {
  if (std::isnan(x)) fail(ErrorKind::kDomain, "cdf: NaN argument");
  return model_->cdf(x);
}

double Distribution::survival(double x) const {
  if (std::isnan(x)) fail(ErrorKind::kDomain, "survival: NaN argument");
  if (model_->survival) return model_->survival(x);
  return 1.0 - model_->cdf(x);
}

double Distribution::raw_quantile(double u) const {
  if (model_->quantile) return model_->quantile(u);
  return numeric_quantile(model_->cdf, u,
                          BracketPolicy::for_support(model_->support));
}

double Distribution::raw_tail_quantile(double s) const {
  if (model_->tail_quantile) return model_->tail_quantile(s);
  const double u = 1.0 - s;
  if (!(u < 1.0)) {
    fail(ErrorKind::kDomain, "tail mass below double resolution for " +
                                 model_->family);
  }
  return raw_quantile(u);
}

double Distribution::quantile(double u) const {
  check_probability(u, "quantile level u");
  return raw_quantile(u);
}

double Distribution::tail_quantile(double s) const {
  check_probability(s, "tail mass s");
  return raw_tail_quantile(s);
}

double Distribution::quantile_spread(double s_a, double s_b) const {
  check_probability(s_a, "tail mass s_a");
  check_probability(s_b, "tail mass s_b");
  if (model_->spread) return model_->spread(s_a, s_b);
  if (model_->upper_gap) return model_->upper_gap(s_b) - model_->upper_gap(s_a);
  return raw_tail_quantile(s_a) - raw_tail_quantile(s_b);
}

double Distribution::quantile_at_exp(double y) const {
  if (std::isnan(y) || !(y > 0.0)) {
    fail(ErrorKind::kDomain, "quantile_at_exp needs y > 0");
  }
  constexpr double kLn2 = 0.69314718055994530942;
  if (y < kLn2) return tail_quantile(-std::expm1(-y));
  const double u = std::exp(-y);
  if (!(u > 0.0)) fail(ErrorKind::kDomain, "e^{-y} underflows to 0");
  return raw_quantile(u);
}

double Distribution::upper_gap(double s) const {
  check_probability(s, "tail mass s");
  if (!model_->upper_gap) {
    fail(ErrorKind::kDomain, model_->family + " has no upper-gap form");
  }
  return model_->upper_gap(s);
}

Distribution uniform(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    fail(ErrorKind::kDomain, "uniform needs finite a < b");
  }
  const double width = b - a;
  Distribution::Model m;
  m.family = "uniform";
  m.params = {{"a", a}, {"b", b}};
  m.support = {a, b};
  m.cdf = [=](double x) {
    if (x <= a) return 0.0;
    if (x >= b) return 1.0;
    return (x - a) / width;
  };
  m.survival = [=](double x) {
    if (x <= a) return 1.0;
    if (x >= b) return 0.0;
    return (b - x) / width;
  };
  m.quantile = [=](double u) { return a + width * u; };
  m.tail_quantile = [=](double s) { return b - width * s; };
  m.upper_gap = [=](double s) { return width * s; };
  return Distribution(std::move(m));
}

Distribution exponential(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    fail(ErrorKind::kDomain, "exponential needs rate > 0");
  }
  Distribution::Model m;
  m.family = "exponential";
  m.params = {{"rate", rate}};
  m.support = {0.0, std::numeric_limits<double>::infinity()};
  m.cdf = [=](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-rate * x); };
  m.survival = [=](double x) { return x <= 0.0 ? 1.0 : std::exp(-rate * x); };
  m.quantile = [=](double u) { return -std::log1p(-u) / rate; };
  m.tail_quantile = [=](double s) { return -std::log(s) / rate; };
  m.spread = [=](double s_a, double s_b) { return std::log(s_b / s_a) / rate; };
  return Distribution(std::move(m));
}

Distribution pareto(double alpha, double scale) {
  if (!(alpha > 0.0) || !std::isfinite(alpha) || !(scale > 0.0) ||
      !std::isfinite(scale)) {
    fail(ErrorKind::kDomain, "pareto needs alpha > 0 and scale > 0");
  }
  const double inv_alpha = 1.0 / alpha;
  Distribution::Model m;
  m.family = "pareto";
  m.params = {{"alpha", alpha}, {"scale", scale}};
  m.support = {scale, std::numeric_limits<double>::infinity()};
  m.cdf = [=](double x) {
    if (x <= scale) return 0.0;
    return -std::expm1(-alpha * std::log(x / scale));
  };
  m.survival = [=](double x) {
    if (x <= scale) return 1.0;
    return std::pow(x / scale, -alpha);
  };
  m.quantile = [=](double u) { return scale * std::pow(1.0 - u, -inv_alpha); };
  m.tail_quantile = [=](double s) { return scale * std::pow(s, -inv_alpha); };
  return Distribution(std::move(m));
}

Distribution normal(double mu, double sigma) {
  if (!std::isfinite(mu) || !(sigma > 0.0) || !std::isfinite(sigma)) {
    fail(ErrorKind::kDomain, "normal needs finite mu and sigma > 0");
  }
  const double spread = sigma * kSqrt2;
  Distribution::Model m;
  m.family = "normal";
  m.params = {{"mu", mu}, {"sigma", sigma}};
  m.cdf = [=](double x) { return 0.5 * std::erfc(-(x - mu) / spread); };
  m.survival = [=](double x) { return 0.5 * std::erfc((x - mu) / spread); };
  m.quantile = [=](double u) {
    return mu - spread * boost::math::erfc_inv(2.0 * u);
  };
  m.tail_quantile = [=](double s) {
    return mu + spread * boost::math::erfc_inv(2.0 * s);
  };
  return Distribution(std::move(m));
}

Distribution degenerate(double c) {
  if (!std::isfinite(c)) fail(ErrorKind::kDomain, "degenerate needs finite c");
  Distribution::Model m;
  m.family = "degenerate";
  m.params = {{"c", c}};
  m.kind = DistKind::kDiscrete;
  m.support = {c, c};
  m.cdf = [=](double x) { return x < c ? 0.0 : 1.0; };
  m.survival = [=](double x) { return x < c ? 1.0 : 0.0; };
  m.quantile = [=](double) { return c; };
  m.tail_quantile = [=](double) { return c; };
  return Distribution(std::move(m));
}

Distribution geometric(double p) {
  const GeometricParams params(p);
  Distribution::Model m;
  m.family = "geometric";
  m.params = {{"p", p}};
  m.kind = DistKind::kDiscrete;
  m.support = {0.0, std::numeric_limits<double>::infinity()};
  m.cdf = [=](double t) { return geom_cdf(params, t); };
  m.survival = [=](double t) { return geom_survival(params, t); };
  m.quantile = [=](double u) {
    const double tail = 1.0 - u;
    if (!(tail < 1.0)) return 0.0;
    return static_cast<double>(geom_quantile(params, tail));
  };
  m.tail_quantile = [=](double s) {
    return static_cast<double>(geom_quantile(params, s));
  };
  return Distribution(std::move(m));
}

Distribution custom(std::string name, DistKind kind, Support support,
                    ScalarFn cdf) {
  Distribution::Model m;
  m.family = std::move(name);
  m.kind = kind;
  m.support = support;
  m.cdf = std::move(cdf);
  return Distribution(std::move(m));
}

namespace {

struct FamilySpec {
  std::string_view name;
  std::vector<std::pair<std::string_view, double>> defaults;
};

const std::vector<FamilySpec>& family_table() {
  static const std::vector<FamilySpec> table = {
      {"uniform", {{"a", 0.0}, {"b", 1.0}}},
      {"exponential", {{"rate", 1.0}}},
      {"pareto", {{"alpha", std::nan("")}, {"scale", 1.0}}},
      {"normal", {{"mu", 0.0}, {"sigma", 1.0}}},
      {"degenerate", {{"c", 0.0}}},
      {"geometric", {{"p", std::nan("")}}},
  };
  return table;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view text, std::string_view context) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto result = std::from_chars(first, last, value);
  if (result.ec != std::errc() || result.ptr != last) {
    fail(ErrorKind::kDomain, "cannot parse number '" + std::string(text) +
                                 "' for " + std::string(context));
  }
  return value;
}

}  // namespace

Distribution parse_distribution(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    fail(ErrorKind::kDomain, "distribution spec '" + std::string(text) +
                                 "' needs the form family:param=value,...");
  }
  const std::string_view family = trim(text.substr(0, colon));
  const std::string_view rest = text.substr(colon + 1);

  const auto& table = family_table();
  const auto it = std::find_if(table.begin(), table.end(),
                               [&](const auto& f) { return f.name == family; });
  if (it == table.end()) {
    fail(ErrorKind::kDomain,
         "unknown distribution family '" + std::string(family) + "'");
  }

  std::vector<std::pair<std::string_view, double>> values = it->defaults;
  std::vector<bool> seen(values.size(), false);
  std::string_view remaining = trim(rest);
  while (!remaining.empty()) {
    const auto comma = remaining.find(',');
    const std::string_view item = trim(remaining.substr(0, comma));
    remaining = comma == std::string_view::npos ? std::string_view{}
                                                : remaining.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      fail(ErrorKind::kDomain,
           "expected param=value, got '" + std::string(item) + "'");
    }
    const std::string_view key = trim(item.substr(0, eq));
    const auto slot = std::find_if(values.begin(), values.end(),
                                   [&](const auto& v) { return v.first == key; });
    if (slot == values.end()) {
      fail(ErrorKind::kDomain, "unknown parameter '" + std::string(key) +
                                   "' for " + std::string(family));
    }
    const auto index = static_cast<std::size_t>(slot - values.begin());
    if (seen[index]) {
      fail(ErrorKind::kDomain, "duplicate parameter '" + std::string(key) + "'");
    }
    seen[index] = true;
    slot->second = parse_number(trim(item.substr(eq + 1)), key);
  }
  for (const auto& [key, value] : values) {
    if (std::isnan(value)) {
      fail(ErrorKind::kDomain, std::string(family) + " requires parameter '" +
                                   std::string(key) + "'");
    }
  }

  const auto arg = [&](std::size_t i) { return values[i].second; };
  if (family == "uniform") return uniform(arg(0), arg(1));
  if (family == "exponential") return exponential(arg(0));
  if (family == "pareto") return pareto(arg(0), arg(1));
  if (family == "normal") return normal(arg(0), arg(1));
  if (family == "degenerate") return degenerate(arg(0));
  return geometric(arg(0));
}

BracketPolicy BracketPolicy::for_support(Support support) {
  BracketPolicy policy;
  const bool finite_lower = std::isfinite(support.lower);
  const bool finite_upper = std::isfinite(support.upper);
  policy.lower = finite_lower   ? support.lower - 1.0
                 : finite_upper ? support.upper - 2.0
                                : -1.0;
  policy.upper = finite_upper   ? support.upper
                 : finite_lower ? support.lower + 1.0
                                : 1.0;
  return policy;
}

namespace {

double checked_cdf(const ScalarFn& cdf, double x) {
  const double value = cdf(x);
  if (std::isnan(value) || value < 0.0 || value > 1.0) {
    std::ostringstream os;
    os << "cdf(" << x << ") = " << value << " is not a probability";
    fail(ErrorKind::kContract, os.str());
  }
  return value;
}

[[noreturn]] void non_monotone(double x0, double x1) {
  std::ostringstream os;
  os << "cdf decreases between " << x0 << " and " << x1;
  fail(ErrorKind::kContract, os.str());
}

}  // namespace

double numeric_quantile(const ScalarFn& cdf, double u,
                        const BracketPolicy& policy) {
  check_probability(u, "quantile level u");
  double lo = policy.lower;
  double hi = policy.upper;
  if (!(lo < hi) || !(policy.growth > 1.0)) {
    fail(ErrorKind::kDomain, "bracket policy needs lower < upper, growth > 1");
  }
  double f_lo = checked_cdf(cdf, lo);
  double f_hi = checked_cdf(cdf, hi);
  if (f_lo > f_hi) non_monotone(lo, hi);

  double step = std::max(1.0, hi - lo);
  for (int i = 0; f_lo > u; ++i) {
    const double next = lo - step;
    if (i >= policy.max_expansions || !std::isfinite(next)) {
      fail(ErrorKind::kBracketing, "cannot push the lower bracket below u");
    }
    const double f_next = checked_cdf(cdf, next);
    if (f_next > f_lo) non_monotone(next, lo);
    lo = next;
    f_lo = f_next;
    step *= policy.growth;
  }
  step = std::max(1.0, hi - lo);
  for (int i = 0; f_hi <= u; ++i) {
    const double next = hi + step;
    if (i >= policy.max_expansions || !std::isfinite(next)) {
      fail(ErrorKind::kBracketing, "cannot push the upper bracket above u");
    }
    const double f_next = checked_cdf(cdf, next);
    if (f_next < f_hi) non_monotone(hi, next);
    hi = next;
    f_hi = f_next;
    step *= policy.growth;
  }

  // Invariant: f_lo <= u < f_hi.
  for (;;) {
    const double scale = std::max(std::fabs(lo), std::fabs(hi));
    if (hi - lo <= std::max(policy.x_abs_tol, policy.x_rel_tol * scale)) break;
    const double mid = lo + 0.5 * (hi - lo);
    if (!(mid > lo) || !(mid < hi)) break;
    const double f_mid = checked_cdf(cdf, mid);
    if (f_mid < f_lo) non_monotone(lo, mid);
    if (f_mid > f_hi) non_monotone(mid, hi);
    if (f_mid > u) {
      hi = mid;
      f_hi = f_mid;
    } else {
      lo = mid;
      f_lo = f_mid;
    }
  }
  return hi;
}

std::vector<double> sample_quantile_transform(const Distribution& dist,
                                              RandomStream& rng,
                                              std::size_t count) {
  if (count == 0) fail(ErrorKind::kDomain, "sample count must be positive");
  std::vector<double> out(count);
  for (double& value : out) value = dist.quantile(rng.uniform());
  return out;
}

}  // namespace evt
