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

#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <memory>
#include <optional>
#include <system_error>
#include <utility>

#include "CLI11.hpp"
#include "emit.hpp"
#include "evtlab/distribution.hpp"
#include "evtlab/error.hpp"
#include "evtlab/geometric.hpp"
#include "evtlab/linear_evt.hpp"
#include "evtlab/maxima.hpp"
#include "evtlab/nonlinear_evt.hpp"
#include "evtlab/random.hpp"
#include "evtlab/report.hpp"
#include "evtlab/stats.hpp"
#include "ranges.hpp"

namespace evt::cli {
namespace {

// Significance level for the informational goodness-of-fit checks.
constexpr double kKsAlpha = 0.01;

struct Common {
  std::string seed;
  std::string out = "-";
  std::string format = "csv";
  std::string spacing;
};

struct Context {
  std::uint64_t seed = kDefaultSeed;
  Format format = Format::kCsv;
  Spacing spacing = Spacing::kGeometric;
  std::ostream* err = nullptr;
};

struct Outcome {
  Report report;
  bool positive = true;  // false maps to kExitVerdict
};

struct Command {
  std::string name;
  CLI::App* app = nullptr;
  Common common;
  Spacing default_spacing = Spacing::kGeometric;
  std::function<Outcome(const Context&)> body;
};

std::uint64_t parse_seed(std::string_view text, std::string_view source) {
  std::uint64_t seed = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), seed);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorKind::kDomain, std::string(source) +
                                 " must be an unsigned 64-bit integer, got '" +
                                 std::string(text) + "'");
  }
  return seed;
}

std::uint64_t resolve_seed(const std::string& flag) {
  if (!flag.empty()) return parse_seed(flag, "--seed");
  if (const char* env = std::getenv(kSeedEnvVar); env != nullptr && *env) {
    return parse_seed(env, kSeedEnvVar);
  }
  return kDefaultSeed;
}

Json base_config(const std::string& name, const Context& ctx) {
  Json config = Json::object();
  config["subcommand"] = name;
  config["seed"] = ctx.seed;
  config["format"] = to_string(ctx.format);
  config["spacing"] = to_string(ctx.spacing);
  return config;
}

Json ks_json(const KsResult& ks) {
  Json j = Json::object();
  j["statistic"] = ks.statistic;
  j["n_effective"] = ks.n_effective;
  j["threshold"] = ks.threshold;
  j["alpha"] = kKsAlpha;
  j["pass"] = ks.pass;
  return j;
}

void add_values_table(const std::vector<double>& values, Report& report) {
  report.table.columns = {"index", "value"};
  for (std::size_t i = 0; i < values.size(); ++i) {
    report.table.rows.push_back({static_cast<std::int64_t>(i), values[i]});
  }
  report.body["values"] = values;
}

std::int64_t positive_integer(const std::string& text, std::string_view what) {
  const std::int64_t v = parse_integer(text, what);
  if (v < 1) {
    fail(ErrorKind::kDomain, std::string(what) + " must be >= 1, got " +
                                 std::to_string(v));
  }
  return v;
}

// ConvergenceReport as {grid, values, verdict, limit_table}; CSV rows carry
// scale, key columns and value.
void fill_convergence(const ConvergenceReport& rep, Report& report) {
  auto keyed = [&](const ConvergenceSeries& s) {
    Json j = Json::object();
    for (std::size_t k = 0; k < rep.key_names.size(); ++k) {
      j[rep.key_names[k]] = s.key[k];
    }
    return j;
  };
  Json verdict = Json::object();
  verdict["converged"] = rep.converged;
  if (rep.nondegenerate) verdict["nondegenerate"] = *rep.nondegenerate;
  verdict["tol"] = rep.tol;
  verdict["window"] = rep.window;
  verdict["verdict"] = rep.verdict();

  Json values = Json::array();
  Json limits = Json::array();
  for (const auto& s : rep.series) {
    Json v = keyed(s);
    v[rep.value_name] = s.values;
    v["converged"] = s.converged;
    values.push_back(std::move(v));
    Json l = keyed(s);
    l["limit"] = s.limit;
    limits.push_back(std::move(l));
  }
  Json grid = Json::object();
  grid["name"] = rep.scale_name;
  grid["points"] = rep.scales;
  report.body["grid"] = std::move(grid);
  report.body["values"] = std::move(values);
  report.body["verdict"] = verdict;
  report.body["limit_table"] = std::move(limits);
  report.notes["verdict"] = verdict;

  report.table.columns = {rep.scale_name};
  for (const auto& k : rep.key_names) report.table.columns.push_back(k);
  report.table.columns.push_back(rep.value_name);
  for (const auto& s : rep.series) {
    for (std::size_t i = 0; i < rep.scales.size(); ++i) {
      std::vector<Cell> row;
      if (rep.scale_name == "n") {
        row.emplace_back(static_cast<std::int64_t>(rep.scales[i]));
      } else {
        row.emplace_back(rep.scales[i]);
      }
      for (double k : s.key) row.emplace_back(k);
      row.emplace_back(s.values[i]);
      report.table.rows.push_back(std::move(row));
    }
  }
}

UvPair parse_uv(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    fail(ErrorKind::kDomain, "--uv expects 'u,v', got '" + text + "'");
  }
  return {parse_real(std::string_view(text).substr(0, comma), "--uv"),
          parse_real(std::string_view(text).substr(comma + 1), "--uv")};
}

// --- subcommands ----------------------------------------------------------

struct SampleArgs {
  std::string dist;
  std::string count = "1000";
};

Outcome run_sample(const SampleArgs& a, const Context& ctx) {
  const Distribution dist = parse_distribution(a.dist);
  const std::int64_t count = positive_integer(a.count, "--count");
  Outcome o;
  o.report.config = base_config("sample", ctx);
  o.report.config["dist"] = dist.spec();
  o.report.config["count"] = count;

  RandomStream rng(ctx.seed);
  const auto values =
      sample_quantile_transform(dist, rng, static_cast<std::size_t>(count));
  add_values_table(values, o.report);
  if (dist.kind() == DistKind::kContinuous && count >= 20) {
    const KsResult ks = ks_one_sample(
        values, [&](double x) { return dist.cdf(x); }, kKsAlpha);
    o.report.body["ks"] = ks_json(ks);
    o.report.notes["ks"] = ks_json(ks);
  }
  return o;
}

struct MaxArgs {
  std::string dist;
  std::string n = "10";
  std::string count = "1000";
  std::string method = "exponential";
};

Outcome run_max(const MaxArgs& a, const Context& ctx) {
  const Distribution dist = parse_distribution(a.dist);
  const std::int64_t n = positive_integer(a.n, "--n");
  const std::int64_t count = positive_integer(a.count, "--count");
  if (a.method != "exponential" && a.method != "direct") {
    fail(ErrorKind::kDomain,
         "--method must be 'exponential' or 'direct', got '" + a.method + "'");
  }
  Outcome o;
  o.report.config = base_config("max", ctx);
  o.report.config["dist"] = dist.spec();
  o.report.config["n"] = n;
  o.report.config["count"] = count;
  o.report.config["method"] = a.method;

  const MaxLaw law(dist, n);
  RandomStream rng(ctx.seed);
  std::vector<double> values(static_cast<std::size_t>(count));
  for (auto& v : values) {
    v = a.method == "direct" ? sample_max_direct(law, rng)
                             : sample_max_exponential_rep(law, rng);
  }
  add_values_table(values, o.report);
  if (dist.kind() == DistKind::kContinuous && count >= 20) {
    const KsResult ks = ks_one_sample(
        values, [&](double x) { return max_cdf(law, x); }, kKsAlpha);
    o.report.body["ks"] = ks_json(ks);
    o.report.notes["ks"] = ks_json(ks);
  }
  return o;
}

struct DehaanArgs {
  std::string dist;
  std::string eps = "1e-2:1e-6";
  std::vector<std::string> uv;
  double tol = 1e-3;
};

Outcome run_dehaan(const DehaanArgs& a, const Context& ctx) {
  const Distribution dist = parse_distribution(a.dist);
  const auto eps = parse_real_range(a.eps, ctx.spacing, "--eps");
  std::vector<UvPair> uv;
  for (const auto& text : a.uv) uv.push_back(parse_uv(text));
  if (uv.empty()) uv = default_uv_grid();

  Outcome o;
  o.report.config = base_config("dehaan", ctx);
  o.report.config["dist"] = dist.spec();
  o.report.config["eps"] = a.eps;
  Json pairs = Json::array();
  for (const auto& p : uv) pairs.push_back(Json::array({p.u, p.v}));
  o.report.config["uv"] = std::move(pairs);
  o.report.config["tol"] = a.tol;

  const ConvergenceReport rep = dehaan_test(dist, eps, uv, a.tol);
  fill_convergence(rep, o.report);
  o.positive = rep.verdict();
  return o;
}

struct RhoArgs {
  std::string dist;
  std::string eps = "1e-2:1e-6";
  double w = 2.0;
  double tol = 1e-3;
  double type_tol = 1e-2;
};

Outcome run_rho(const RhoArgs& a, const Context& ctx) {
  const Distribution dist = parse_distribution(a.dist);
  const auto eps = parse_real_range(a.eps, ctx.spacing, "--eps");
  Outcome o;
  o.report.config = base_config("rho", ctx);
  o.report.config["dist"] = dist.spec();
  o.report.config["eps"] = a.eps;
  o.report.config["w"] = a.w;
  o.report.config["tol"] = a.tol;
  o.report.config["type_tol"] = a.type_tol;

  const RhoEstimate est = estimate_rho(dist, eps, a.w);
  const TypeClass type = classify_type(est.rho, a.type_tol);
  const bool converged = est.spread <= a.tol;

  Json values = Json::array();
  std::vector<double> grid;
  o.report.table.columns = {"eps", "rho_hat"};
  for (const auto& [e, r] : est.per_scale) {
    grid.push_back(e);
    Json v = Json::object();
    v["eps"] = e;
    v["rho_hat"] = r;
    values.push_back(std::move(v));
    o.report.table.rows.push_back({e, r});
  }
  Json verdict = Json::object();
  verdict["converged"] = converged;
  verdict["spread"] = est.spread;
  verdict["tol"] = a.tol;
  verdict["window"] = kCauchyWindow;
  verdict["verdict"] = converged;
  Json limit = Json::object();
  limit["rho"] = est.rho;
  limit["type"] = to_string(type.type);

  Json g = Json::object();
  g["name"] = "eps";
  g["points"] = grid;
  o.report.body["grid"] = std::move(g);
  o.report.body["values"] = std::move(values);
  o.report.body["verdict"] = verdict;
  o.report.body["limit_table"] = Json::array({limit});
  o.report.notes["verdict"] = verdict;
  o.report.notes["limit"] = limit;
  o.positive = converged;
  return o;
}

struct NormingArgs {
  std::string dist;
  std::string n;
};

Outcome run_norming(const NormingArgs& a, const Context& ctx) {
  const Distribution dist = parse_distribution(a.dist);
  const auto ns = parse_integer_range(a.n, ctx.spacing, "--n");
  Outcome o;
  o.report.config = base_config("norming", ctx);
  o.report.config["dist"] = dist.spec();
  o.report.config["n"] = a.n;
  o.report.table.columns = {"n", "a_n", "b_n"};
  for (const std::int64_t n : ns) {
    const NormingConstants c = norming_constants(dist, n);
    o.report.table.rows.push_back({c.n, c.a_n, c.b_n});
  }
  o.report.body["constants"] = table_records(o.report.table);
  return o;
}

struct LimitLawArgs {
  std::string rho;
  std::string dist;
  std::string x = "-3:3:61";
  std::string n = "10000";
  std::string reps = "0";
  std::string eps = "1e-2:1e-6";
  double ks_tol = 0.02;
};

Outcome run_limit_law(const LimitLawArgs& a, const Context& ctx) {
  if (a.rho.empty() && a.dist.empty()) {
    fail(ErrorKind::kDomain, "limit-law needs --rho or --dist");
  }
  std::optional<Distribution> dist;
  if (!a.dist.empty()) dist = parse_distribution(a.dist);
  const auto xs = parse_real_range(a.x, ctx.spacing, "--x");
  const std::int64_t reps = parse_integer(a.reps, "--reps");
  if (reps < 0) fail(ErrorKind::kDomain, "--reps must be >= 0");
  if (reps > 0 && !dist) {
    fail(ErrorKind::kDomain, "limit-law --reps needs --dist");
  }

  Outcome o;
  o.report.config = base_config("limit-law", ctx);
  double rho = 0.0;
  if (!a.rho.empty()) {
    rho = parse_real(a.rho, "--rho");
    o.report.config["rho"] = rho;
  } else {
    const auto eps = parse_real_range(a.eps, Spacing::kGeometric, "--eps");
    rho = estimate_rho(*dist, eps).rho;
    o.report.config["eps"] = a.eps;
  }
  if (dist) o.report.config["dist"] = dist->spec();
  o.report.config["x"] = a.x;

  o.report.body["rho"] = rho;
  o.report.table.columns = {"x", "cdf"};
  for (const double x : xs) o.report.table.rows.push_back({x, limit_cdf(rho, x)});
  o.report.body["table"] = table_records(o.report.table);
  o.report.notes["rho"] = rho;

  if (reps > 0) {
    const std::int64_t n = positive_integer(a.n, "--n");
    o.report.config["n"] = n;
    o.report.config["reps"] = reps;
    o.report.config["ks_tol"] = a.ks_tol;
    const NormingConstants c = norming_constants(*dist, n);
    const MaxLaw law(*dist, n);
    RandomStream rng(ctx.seed);
    std::vector<double> z(static_cast<std::size_t>(reps));
    for (auto& v : z) v = (sample_max_exponential_rep(law, rng) - c.b_n) / c.a_n;
    const KsResult ks =
        ks_one_sample(z, [rho](double x) { return limit_cdf(rho, x); },
                      kKsAlpha);
    Json mc = Json::object();
    mc["n"] = n;
    mc["reps"] = reps;
    mc["a_n"] = c.a_n;
    mc["b_n"] = c.b_n;
    mc["ks_distance"] = ks.statistic;
    mc["ks_tol"] = a.ks_tol;
    mc["pass"] = ks.statistic <= a.ks_tol;
    o.report.body["monte_carlo"] = mc;
    o.report.notes["monte_carlo"] = mc;
    o.positive = ks.statistic <= a.ks_tol;
  }
  return o;
}

struct NonlinearArgs {
  std::string base = "uniform:";
  std::string target;
  std::string n = "1e2:1e6";
  std::string x;
  std::string form = "linear";
  double tol = 1e-3;
  std::string reps = "0";
};

Outcome run_nonlinear(const NonlinearArgs& a, const Context& ctx) {
  const Distribution base = parse_distribution(a.base);
  std::optional<Distribution> target;
  if (!a.target.empty()) target = parse_distribution(a.target);
  const auto ns = parse_integer_range(a.n, ctx.spacing, "--n");
  const auto xs =
      a.x.empty() ? default_x_grid() : parse_real_range(a.x, ctx.spacing, "--x");
  const HnForm form = parse_hn_form(a.form);
  const std::int64_t reps = parse_integer(a.reps, "--reps");
  if (reps < 0) fail(ErrorKind::kDomain, "--reps must be >= 0");
  if (reps > 0 && !target) {
    fail(ErrorKind::kDomain, "nonlinear --reps needs --target");
  }

  Outcome o;
  o.report.config = base_config("nonlinear", ctx);
  o.report.config["base"] = base.spec();
  o.report.config["normalizer"] = target ? "construction" : "affine";
  if (target) o.report.config["target"] = target->spec();
  o.report.config["n"] = a.n;
  o.report.config["x"] = a.x.empty() ? Json(xs) : Json(a.x);
  o.report.config["form"] = to_string(form);
  o.report.config["tol"] = a.tol;

  const NormalizerSequence seq =
      target ? NormalizerSequence::construction(*target, base)
             : NormalizerSequence::affine(base);
  const ConvergenceReport rep =
      convergence_diagnostic(seq, xs, ns, form, a.tol);
  fill_convergence(rep, o.report);
  o.positive = rep.verdict();

  if (reps > 0) {
    const std::int64_t n = ns.back();
    o.report.config["reps"] = reps;
    const MonotoneFn g = seq(n);
    const MaxLaw law(base, n);
    RandomStream rng(ctx.seed);
    std::vector<double> z(static_cast<std::size_t>(reps));
    for (auto& v : z) v = g(sample_max_exponential_rep(law, rng));
    const KsResult ks = ks_one_sample(
        z, [&](double x) { return target->cdf(x); }, kKsAlpha);
    Json mc = ks_json(ks);
    mc["n"] = n;
    mc["reps"] = reps;
    o.report.body["monte_carlo"] = mc;
    o.report.notes["monte_carlo"] = mc;
  }
  return o;
}

struct GeomOscillateArgs {
  double p = 0.5;
  std::int64_t q = 0;
  std::string n = "1e3:1e6";
  std::string c = "0,0.25,0.5,0.75";
  std::string subsequence;
  std::string k = "10:40";
  double tol = 1e-3;
};

// `a:b` lists every integer; other forms follow parse_integer_range.
std::vector<std::int64_t> parse_k_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon != std::string::npos && text.find(':', colon + 1) == std::string::npos) {
    const std::int64_t lo =
        parse_integer(std::string_view(text).substr(0, colon), "--k");
    const std::int64_t hi =
        parse_integer(std::string_view(text).substr(colon + 1), "--k");
    if (hi < lo || hi - lo > 100000) {
      fail(ErrorKind::kDomain, "--k range '" + text + "' is empty or too long");
    }
    std::vector<std::int64_t> ks;
    for (std::int64_t k = lo; k <= hi; ++k) ks.push_back(k);
    return ks;
  }
  return parse_integer_range(text, Spacing::kLinear, "--k");
}

Outcome run_geom_oscillate(const GeomOscillateArgs& a, const Context& ctx) {
  const GeometricParams params(a.p);
  const auto cs = parse_real_range(a.c, Spacing::kLinear, "--c");
  Outcome o;
  o.report.config = base_config("geom-oscillate", ctx);
  o.report.config["p"] = a.p;
  o.report.config["q"] = a.q;
  o.report.config["c"] = cs;
  o.report.config["tol"] = a.tol;

  std::vector<std::int64_t> ns;
  std::optional<std::size_t> collisions;
  if (!a.subsequence.empty()) {
    const double c = parse_real(a.subsequence, "--subsequence");
    const auto ks = parse_k_range(a.k);
    Subsequence sub = subsequence_generator(params, c, ks);
    ns = std::move(sub.n);
    collisions = sub.collisions;
    o.report.config["subsequence"] = c;
    o.report.config["k"] = a.k;
  } else {
    ns = parse_integer_range(a.n, ctx.spacing, "--n");
    o.report.config["n"] = a.n;
  }

  const OscillationReport rep = oscillation_scan(params, a.q, ns, cs);
  const double spread = rep.lim_sup_est - rep.lim_inf_est;
  const bool converged = spread <= a.tol;

  Json summary = Json::object();
  summary["p"] = rep.p;
  summary["q"] = rep.q;
  summary["theta"] = params.theta();
  summary["lim_inf_est"] = rep.lim_inf_est;
  summary["lim_sup_est"] = rep.lim_sup_est;
  summary["spread"] = spread;
  summary["converged"] = converged;
  if (collisions) summary["collisions"] = *collisions;
  Json clusters = Json::array();
  for (const auto& cp : rep.cluster_points) {
    Json j = Json::object();
    j["c"] = cp.c;
    j["limit"] = cp.limit;
    clusters.push_back(std::move(j));
  }
  summary["cluster_points"] = std::move(clusters);

  o.report.table.columns = {"n", "m", "probability"};
  for (const auto& pr : rep.probe) {
    o.report.table.rows.push_back({pr.n, pr.m, pr.probability});
  }
  o.report.body["summary"] = summary;
  o.report.body["probe"] = table_records(o.report.table);
  o.report.notes = summary;
  o.positive = converged;
  return o;
}

struct GeomDensityArgs {
  std::string theta;
  std::string p;
  double x = 0.0;
  double y = 0.0;
  std::string n_max;
};

Outcome run_geom_density(const GeomDensityArgs& a, const Context& ctx) {
  if (a.theta.empty() == a.p.empty()) {
    fail(ErrorKind::kDomain, "geom-density needs exactly one of --theta, --p");
  }
  const double theta = a.theta.empty()
                           ? GeometricParams(parse_real(a.p, "--p")).theta()
                           : parse_real(a.theta, "--theta");
  const std::int64_t n_max =
      a.n_max.empty() ? sufficient_search_horizon(theta, a.x, a.y)
                      : positive_integer(a.n_max, "--n-max");

  Outcome o;
  o.report.config = base_config("geom-density", ctx);
  o.report.config["theta"] = theta;
  o.report.config["x"] = a.x;
  o.report.config["y"] = a.y;
  o.report.config["n_max"] = n_max;

  const FracLogWitness w = frac_log_search(theta, a.x, a.y, n_max);
  if (w.horizon_short) {
    *ctx.err << "warning: --n-max " << n_max
             << " is below the sufficient horizon " << w.sufficient_horizon
             << "\n";
  }
  o.report.table.columns = {"n", "fraction", "sufficient_horizon"};
  o.report.table.rows.push_back({w.n, w.fraction, w.sufficient_horizon});
  Json witness = Json::object();
  witness["n"] = w.n;
  witness["fraction"] = w.fraction;
  witness["sufficient_horizon"] = w.sufficient_horizon;
  witness["horizon_short"] = w.horizon_short;
  o.report.body["witness"] = witness;
  o.report.notes = witness;
  return o;
}

void add_common(Command& cmd) {
  CLI::App* app = cmd.app;
  app->add_option("--seed", cmd.common.seed,
                  std::string("64-bit seed (default: $") + kSeedEnvVar +
                      " or " + std::to_string(kDefaultSeed) + ")");
  app->add_option("--out", cmd.common.out, "output path, '-' for stdout")
      ->capture_default_str();
  app->add_option("--format", cmd.common.format, "csv or json")
      ->capture_default_str();
  app->add_option("--spacing", cmd.common.spacing,
                  std::string("range spacing, geometric or linear (default ") +
                      std::string(to_string(cmd.default_spacing)) + ")");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Extreme-value experiments: samplers, limit diagnostics and "
               "the geometric oscillation study.",
               "evtlab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand all help");

  std::vector<std::unique_ptr<Command>> commands;
  auto make = [&](const std::string& name, const std::string& description,
                  Spacing spacing = Spacing::kGeometric) -> Command& {
    auto cmd = std::make_unique<Command>();
    cmd->name = name;
    cmd->app = app.add_subcommand(name, description);
    cmd->default_spacing = spacing;
    add_common(*cmd);
    commands.push_back(std::move(cmd));
    return *commands.back();
  };

  SampleArgs sample;
  {
    Command& c = make("sample", "quantile-transform draws from a law");
    c.app->add_option("--dist", sample.dist, "law, e.g. pareto:alpha=2")
        ->required();
    c.app->add_option("--count", sample.count, "number of draws")
        ->capture_default_str();
    c.body = [&](const Context& ctx) { return run_sample(sample, ctx); };
  }
  MaxArgs max;
  {
    Command& c = make("max", "draws of the maximum of n variables");
    c.app->add_option("--dist", max.dist, "base law")->required();
    c.app->add_option("--n", max.n, "block size")->capture_default_str();
    c.app->add_option("--count", max.count, "number of maxima")
        ->capture_default_str();
    c.app->add_option("--method", max.method, "exponential or direct")
        ->capture_default_str();
    c.body = [&](const Context& ctx) { return run_max(max, ctx); };
  }
  DehaanArgs dehaan;
  {
    Command& c = make("dehaan", "de Haan quantile-ratio convergence test");
    c.app->add_option("--dist", dehaan.dist, "law")->required();
    c.app->add_option("--eps", dehaan.eps, "eps range start:stop[:count]")
        ->capture_default_str();
    c.app->add_option("--uv", dehaan.uv,
                      "pair 'u,v'; repeatable (default: built-in grid)");
    c.app->add_option("--tol", dehaan.tol, "Cauchy tolerance")
        ->capture_default_str();
    c.body = [&](const Context& ctx) { return run_dehaan(dehaan, ctx); };
  }
  RhoArgs rho;
  {
    Command& c = make("rho", "estimate the tail index rho");
    c.app->add_option("--dist", rho.dist, "law")->required();
    c.app->add_option("--eps", rho.eps, "eps range")->capture_default_str();
    c.app->add_option("--w", rho.w, "scale ratio w > 1")
        ->capture_default_str();
    c.app->add_option("--tol", rho.tol, "spread tolerance")
        ->capture_default_str();
    c.app->add_option("--type-tol", rho.type_tol,
                      "Gumbel band for classification")
        ->capture_default_str();
    c.body = [&](const Context& ctx) { return run_rho(rho, ctx); };
  }
  NormingArgs norming;
  {
    Command& c = make("norming", "norming constants a_n, b_n");
    c.app->add_option("--dist", norming.dist, "law")->required();
    c.app->add_option("--n", norming.n, "n value, list or range")
        ->required();
    c.body = [&](const Context& ctx) { return run_norming(norming, ctx); };
  }
  LimitLawArgs limit;
  {
    Command& c = make("limit-law", "limit distribution of normalized maxima",
                      Spacing::kLinear);
    c.app->add_option("--rho", limit.rho, "tail index");
    c.app->add_option("--dist", limit.dist,
                      "law (estimates rho when --rho is absent)");
    c.app->add_option("--x", limit.x, "x range")->capture_default_str();
    c.app->add_option("--n", limit.n, "block size for --reps")
        ->capture_default_str();
    c.app->add_option("--reps", limit.reps, "Monte Carlo repetitions")
        ->capture_default_str();
    c.app->add_option("--eps", limit.eps, "eps range for estimating rho")
        ->capture_default_str();
    c.app->add_option("--ks-tol", limit.ks_tol, "maximum KS distance")
        ->capture_default_str();
    c.body = [&](const Context& ctx) { return run_limit_law(limit, ctx); };
  }
  NonlinearArgs nonlinear;
  {
    Command& c = make("nonlinear", "convergence of h_n under a normalizer");
    c.app->add_option("--base", nonlinear.base, "base law")
        ->capture_default_str();
    c.app->add_option("--target", nonlinear.target,
                      "target law (construction normalizer); affine if absent");
    c.app->add_option("--n", nonlinear.n, "n range")->capture_default_str();
    c.app->add_option("--x", nonlinear.x,
                      "x range (default: 32 points on [1/16, 16])");
    c.app->add_option("--form", nonlinear.form, "exp, linear or epsilon")
        ->capture_default_str();
    c.app->add_option("--tol", nonlinear.tol, "Cauchy tolerance")
        ->capture_default_str();
    c.app->add_option("--reps", nonlinear.reps,
                      "Monte Carlo repetitions at the largest n")
        ->capture_default_str();
    c.body = [&](const Context& ctx) { return run_nonlinear(nonlinear, ctx); };
  }
  GeomOscillateArgs osc;
  {
    Command& c = make("geom-oscillate",
                      "P{M_n <= floor(theta log n) + q} for geometric maxima");
    c.app->add_option("--p", osc.p, "geometric parameter")->required();
    c.app->add_option("--q", osc.q, "integer offset")->capture_default_str();
    c.app->add_option("--n", osc.n, "n range")->capture_default_str();
    c.app->add_option("--c", osc.c, "cluster points to tabulate")
        ->capture_default_str();
    c.app->add_option("--subsequence", osc.subsequence,
                      "scan n_k = round(p^-(k+c)) for this c instead of --n");
    c.app->add_option("--k", osc.k, "k range for --subsequence")
        ->capture_default_str();
    c.app->add_option("--tol", osc.tol, "lim sup - lim inf tolerance")
        ->capture_default_str();
    c.body = [&](const Context& ctx) { return run_geom_oscillate(osc, ctx); };
  }
  GeomDensityArgs density;
  {
    Command& c = make("geom-density",
                      "smallest n with frac(theta log n) in [x, y]");
    c.app->add_option("--theta", density.theta, "theta > 0");
    c.app->add_option("--p", density.p, "geometric parameter (theta = -1/log p)");
    c.app->add_option("--x", density.x, "interval start")->required();
    c.app->add_option("--y", density.y, "interval end")->required();
    c.app->add_option("--n-max", density.n_max,
                      "search bound (default: sufficient horizon)");
    c.body = [&](const Context& ctx) { return run_geom_density(density, ctx); };
  }

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("evtlab");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  Command* chosen = nullptr;
  for (auto& cmd : commands) {
    if (cmd->app->parsed()) chosen = cmd.get();
  }
  if (chosen == nullptr) {
    err << app.help();
    return kExitUsage;
  }

  try {
    Context ctx;
    ctx.err = &err;
    ctx.seed = resolve_seed(chosen->common.seed);
    ctx.format = parse_format(chosen->common.format);
    ctx.spacing = chosen->common.spacing.empty()
                      ? chosen->default_spacing
                      : parse_spacing(chosen->common.spacing);
    Outcome outcome = chosen->body(ctx);
    emit(outcome.report, ctx.format, chosen->common.out, out);
    return outcome.positive ? kExitOk : kExitVerdict;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitOutput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace evt::cli
