// Copyright 2026 The coexline Authors
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

// coexline: sample and check stationary measures of the open TASEP.
//
//   coexline verify   --n 6 --a 3 --b 3 [--exact-rational]
//   coexline sample   --n 10 --a 3 --replicas 2 --seed 1 [--out file] [--format csv|json]
//   coexline fluct    --n 2000 --a 3 --replicas 100000 --seed 42 [--out records.csv]
//   coexline dynamics --n 6 --alpha 0.25 --beta 0.25 --horizon 1e6 [--out means.csv]
//
// Exit status: 0 all checks pass, 1 a check failed, 2 usage error, 3 I/O error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coexline/coexline.hpp"
#include "coexline/output.hpp"
#ifdef COEXLINE_HAVE_RATIONAL
#include "coexline/verify_rational.hpp"
#endif

namespace {

using namespace coexline;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::size_t n = 0;
  std::optional<std::string> a, b, alpha, beta;
  std::optional<std::size_t> replicas;
  std::uint64_t seed = 0;
  std::vector<double> times = default_time_grid();
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::size_t> workers;
  bool exact_rational = false;

  // fluct
  std::vector<std::size_t> ladder;
  std::size_t ladder_replicas = 10000;
  // dynamics
  double horizon = 1e6;
  std::optional<double> burn_in;
  std::size_t batches = 32;
  std::optional<std::string> trace;
};

double parse_number(const std::string& text, const char* flag) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid value for ") + flag + ": '" + text + "'");
  }
}

/// (a, b) from --a/--b or --alpha/--beta; --b falls back to --a.
std::pair<double, double> resolve_ab(const RunConfig& c) {
  if (c.a && c.alpha) throw UsageError("give either --a or --alpha, not both");
  if (c.b && c.beta) throw UsageError("give either --b or --beta, not both");
  std::optional<double> a, b;
  if (c.a) a = parse_number(*c.a, "--a");
  if (c.alpha) {
    const double al = parse_number(*c.alpha, "--alpha");
    if (!(al > 0.0 && al < 1.0)) throw UsageError("--alpha must lie in (0, 1)");
    a = (1.0 - al) / al;
  }
  if (c.b) b = parse_number(*c.b, "--b");
  if (c.beta) {
    const double be = parse_number(*c.beta, "--beta");
    if (!(be > 0.0 && be < 1.0)) throw UsageError("--beta must lie in (0, 1)");
    b = (1.0 - be) / be;
  }
  if (!a) throw UsageError("one of --a or --alpha is required");
  if (!b) b = a;
  if (!(*a > 0.0 && *b > 0.0)) throw UsageError("a and b must be positive");
  return {*a, *b};
}

void validate_common(const RunConfig& c) {
  if (c.n < 1) throw UsageError("--n must be at least 1");
  if (c.replicas && *c.replicas < 1) throw UsageError("--replicas must be at least 1");
  if (c.format && *c.format != "csv" && *c.format != "json") {
    throw UsageError("--format must be csv or json");
  }
  for (double t : c.times) {
    if (!(t >= 0.0 && t <= 1.0)) throw UsageError("--times must lie in [0, 1]");
  }
  if (!std::is_sorted(c.times.begin(), c.times.end())) throw UsageError("--times must be sorted");
}

/// Writes to --out when given, otherwise to stdout.
class Sink {
 public:
  explicit Sink(const std::optional<std::string>& path) {
    if (path) {
      file_ = std::make_unique<std::ofstream>(*path, std::ios::binary);
      if (!*file_) throw IoError("cannot open '" + *path + "' for writing");
      path_ = *path;
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void close() {
    if (file_) {
      file_->close();
      if (!*file_) throw IoError("failed writing '" + path_ + "'");
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::string path_;
};

void emit_checks(std::ostream& os, const std::vector<Check>& checks, const std::string& format) {
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& c : checks) arr.push_back(to_json(c));
    os << arr.dump(2) << '\n';
  } else {
    os << "check,n,a,b,metric,value,tolerance,pass\n" << std::setprecision(12);
    for (const auto& c : checks) {
      os << c.check << ',' << c.n << ',' << c.a << ',' << c.b << ',' << c.metric << ','
         << c.value << ',' << c.tolerance << ',' << (c.pass ? "true" : "false") << '\n';
    }
  }
}

int run_verify(const RunConfig& c) {
  validate_common(c);
  if (c.n > oracle::kMaxBayesN) throw UsageError("verify: --n must be at most 8");
  std::vector<Check> checks;
  if (c.exact_rational) {
#ifdef COEXLINE_HAVE_RATIONAL
    using oracle::Rational;
    auto rational = [](const std::optional<std::string>& direct,
                       const std::optional<std::string>& rate) -> std::optional<Rational> {
      if (direct) return oracle::parse_rational(*direct);
      if (rate) {
        const Rational r = oracle::parse_rational(*rate);
        return Rational((1 - r) / r);
      }
      return std::nullopt;
    };
    resolve_ab(c);  // flag validation
    const auto a = rational(c.a, c.alpha);
    const auto b = rational(c.b, c.beta).value_or(*a);
    checks = verify_identities_exact(*a, b, c.n);
#else
    throw UsageError("--exact-rational is not available in this build (GMP not found)");
#endif
  } else {
    const auto [a, b] = resolve_ab(c);
    checks = verify_identities(a, b, c.n);
  }
  Sink sink(c.out);
  emit_checks(sink.stream(), checks, c.format.value_or("json"));
  sink.close();
  return all_pass(checks) ? kExitPass : kExitFail;
}

int run_sample(const RunConfig& c) {
  validate_common(c);
  const auto [a, b] = resolve_ab(c);
  const std::size_t workers = resolve_workers(c.workers);
  Sink sink(c.out);
  if (c.format.value_or("csv") == "json") {
    write_samples_json(sink.stream(), a, b, c.n, c.replicas.value_or(1), c.seed, workers);
  } else {
    write_samples_csv(sink.stream(), a, b, c.n, c.replicas.value_or(1), c.seed, workers);
  }
  sink.close();
  return kExitPass;
}

int run_fluct(const RunConfig& c) {
  validate_common(c);
  const auto [a, b] = resolve_ab(c);
  if (a != b || a <= 1.0) throw UsageError("fluct: requires a = b > 1 (the coexistence line)");
  const std::size_t replicas = c.replicas.value_or(100000);
  if (replicas < 2) throw UsageError("fluct: needs at least 2 replicas");
  if (c.format.value_or("csv") != "csv") throw UsageError("fluct: records are written as csv");
  CoexistenceConfig cfg;
  cfg.a = a;
  cfg.n = c.n;
  cfg.replicas = replicas;
  cfg.times = c.times;
  cfg.seed = c.seed;
  cfg.workers = resolve_workers(c.workers);
  cfg.ladder = c.ladder;
  cfg.ladder_replicas = c.ladder_replicas;
  const auto rep = coexistence_report(cfg);
  if (c.out) {
    Sink sink(c.out);
    write_fluct_csv(sink.stream(), rep);
    sink.close();
  }
  std::cout << fluct_summary(rep).dump(2) << '\n';
  return all_pass(fluct_checks(rep)) ? kExitPass : kExitFail;
}

int run_dynamics(const RunConfig& c) {
  validate_common(c);
  double alpha = 0.0, beta = 0.0;
  if (c.alpha && !c.a && !c.b && !c.beta) throw UsageError("dynamics: --beta is required with --alpha");
  if (c.alpha || c.beta) {
    if (c.a || c.b) throw UsageError("dynamics: give rates either as --alpha/--beta or as --a/--b");
    if (!c.alpha || !c.beta) throw UsageError("dynamics: both --alpha and --beta are required");
    alpha = parse_number(*c.alpha, "--alpha");
    beta = parse_number(*c.beta, "--beta");
  } else {
    const auto [a, b] = resolve_ab(c);
    alpha = 1.0 / (1.0 + a);
    beta = 1.0 / (1.0 + b);
  }
  if (c.format.value_or("csv") != "csv") throw UsageError("dynamics: output is written as csv");
  SimConfig cfg;
  cfg.n = c.n;
  cfg.alpha = alpha;
  cfg.beta = beta;
  cfg.horizon = c.horizon;
  cfg.burn_in = c.burn_in;
  cfg.batches = c.batches;
  cfg.seed = c.seed;
  try {
    detail::validate(cfg);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  std::unique_ptr<std::ofstream> trace_file;
  EventTrace trace;
  if (c.trace) {
    trace_file = std::make_unique<std::ofstream>(*c.trace);
    if (!*trace_file) throw IoError("cannot open '" + *c.trace + "' for writing");
    *trace_file << "time,event,site\n" << std::setprecision(12);
    trace = [&](double t, EventType type, std::size_t site) {
      static constexpr const char* names[] = {"entry", "exit", "hop"};
      *trace_file << t << ',' << names[static_cast<int>(type)] << ',' << site << '\n';
    };
  }
  Stream rng(mix64(c.seed, 0));
  const auto rep = simulate(cfg, rng, trace);
  if (trace_file) {
    trace_file->close();
    if (!*trace_file) throw IoError("failed writing '" + *c.trace + "'");
  }
  if (c.out) {
    Sink sink(c.out);
    write_dynamics_csv(sink.stream(), rep);
    sink.close();
  }

  std::vector<Check> checks;
  if (c.n <= oracle::kMaxCtmcN && alpha > 0.0 && beta > 0.0) {
    const auto pi = oracle::ctmc_stationary(alpha, beta, c.n);
    for (std::size_t k = 0; k < c.n; ++k) {
      double exact = 0.0;
      for (std::size_t x = 0; x < pi.prob.size(); ++x) {
        if ((x >> k) & 1U) exact += pi.prob[x];
      }
      const double se = rep.standard_errors[k];
      checks.push_back(make_check("site_" + std::to_string(k + 1) + "_mean_vs_ctmc", c.n,
                                  1.0 / alpha - 1.0, 1.0 / beta - 1.0, "abs_error_over_3se",
                                  std::abs(rep.mean_occupation[k] - exact), 3.0 * se));
    }
  }
  Json summary;
  summary["n"] = c.n;
  summary["alpha"] = alpha;
  summary["beta"] = beta;
  summary["events"] = rep.event_count;
  summary["measured_time"] = rep.measured_time;
  Json tests = Json::array();
  for (const auto& ch : checks) tests.push_back(summary_json(ch));
  summary["tests"] = tests;
  std::cout << summary.dump(2) << '\n';
  return all_pass(checks) ? kExitPass : kExitFail;
}

void add_common(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--n", c.n, "System size")->required();
  cmd->add_option("--a", c.a, "Left boundary parameter a = (1 - alpha)/alpha");
  cmd->add_option("--b", c.b, "Right boundary parameter b (defaults to a)");
  cmd->add_option("--alpha", c.alpha, "Entry rate alpha (alternative to --a)");
  cmd->add_option("--beta", c.beta, "Exit rate beta (alternative to --b)");
  cmd->add_option("--seed", c.seed, "64-bit master seed");
  cmd->add_option("--out", c.out, "Output file (default: stdout)");
  cmd->add_option("--workers", c.workers, "Worker threads (fallback: $COEXLINE_WORKERS)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sampling and checks for open TASEP stationary measures"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* verify = app.add_subcommand("verify", "Small-n identity checks (JSON report)");
  add_common(verify, cfg);
  verify->add_option("--format", cfg.format, "json (default) or csv");
  verify->add_flag("--exact-rational", cfg.exact_rational, "Run the checks in exact rational arithmetic");

  auto* sample = app.add_subcommand("sample", "Draw stationary configurations");
  add_common(sample, cfg);
  sample->add_option("--replicas", cfg.replicas, "Number of draws (default 1)");
  sample->add_option("--format", cfg.format, "csv (default) or json");

  auto* fluct = app.add_subcommand("fluct", "Coexistence-line fluctuation statistics");
  add_common(fluct, cfg);
  fluct->add_option("--replicas", cfg.replicas, "Number of draws (default 100000)");
  fluct->add_option("--times", cfg.times, "Observation times in [0, 1]")->delimiter(',');
  fluct->add_option("--ladder", cfg.ladder, "Sizes for the |T_n' - T_n| ladder")->delimiter(',');
  fluct->add_option("--ladder-replicas", cfg.ladder_replicas, "Draws per ladder size");
  fluct->add_option("--format", cfg.format, "Record format (csv only)");

  auto* dynamics = app.add_subcommand("dynamics", "Continuous-time simulation, time-averaged occupations");
  add_common(dynamics, cfg);
  dynamics->add_option("--horizon", cfg.horizon, "Simulated time");
  dynamics->add_option("--burn-in", cfg.burn_in, "Discarded initial time (default horizon/10)");
  dynamics->add_option("--batches", cfg.batches, "Batches for standard errors");
  dynamics->add_option("--trace", cfg.trace, "Write every event (time,event,site) to this file");
  dynamics->add_option("--format", cfg.format, "Output format (csv only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) return run_verify(cfg);
    if (*sample) return run_sample(cfg);
    if (*fluct) return run_fluct(cfg);
    if (*dynamics) return run_dynamics(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
