// Copyright 2026 The Authors.
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


// msp: simulations, estimates, sweeps, replays, property suites and the
// size-1 impossibility certificate.
//
// Exit codes: 0 success, 1 assertion or bound failure, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "msp/msp.hpp"

namespace {

using msp::ElementId;
using msp::InstanceBundle;
namespace an = msp::analysis;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Raised for bad flag combinations found after parsing.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("MSP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("MSP_SEED is not an unsigned integer: ") + env);
    }
  }
  return 42;
}

struct Options {
  std::string instance = "hat";
  std::size_t n = 10;
  std::size_t k = 1;
  std::size_t vertices = 0;  // random-graphic; 0 means max(2, n / 2)
  std::string file;
  std::string policy;
  std::string reference = "sample-contracted";
  double p = 0.5;
  std::size_t trials = 10000;
  std::uint64_t seed = 42;
  std::string out;
  std::string format = "json";
  unsigned threads = 1;
  std::size_t cases = 200;
  std::uint64_t trial = 0;
  std::string schedule;
  std::vector<std::size_t> ns;
  std::vector<double> ps;
  std::string element = "auto";
  bool check_bound = false;
  std::string name;  // fixture or suite
  std::string dump_instance;
};

void add_instance_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--instance", o.instance, "Instance family")
      ->check(CLI::IsMember({"hat", "modified-hat", "triangle", "double-triangle", "uniform",
                             "random-graphic", "file"}));
  cmd->add_option("--n", o.n, "Family size parameter (claws, elements or edges)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--k", o.k, "Rank of the uniform matroid; size for k-policies");
  cmd->add_option("--vertices", o.vertices, "Vertex count for random-graphic");
  cmd->add_option("--file", o.file, "Instance file for --instance file");
  cmd->add_option("--dump-instance", o.dump_instance, "Also write the instance to this file");
}

void add_policy_options(CLI::App* cmd, Options& o, bool required) {
  auto* opt = cmd->add_option("--policy", o.policy, "Online policy")
                  ->check(CLI::IsMember({"dynkin", "optimistic", "virtual-uniform", "sample",
                                         "sample-contracted", "greedy", "virtual-msp"}));
  if (required) opt->required();
  cmd->add_option("--reference", o.reference, "Reference rule for the greedy framework");
  cmd->add_option("--p", o.p, "Sampling threshold")->check(CLI::Range(0.0, 1.0));
}

void add_output_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out, "Output path (default stdout)");
}

InstanceBundle make_instance(const Options& o) {
  if (o.instance == "hat") return msp::hat_graph(o.n);
  if (o.instance == "modified-hat") return msp::modified_hat_graph(o.n);
  if (o.instance == "triangle") return msp::triangle();
  if (o.instance == "double-triangle") return msp::double_triangle();
  if (o.instance == "uniform") {
    if (o.k > o.n) throw UsageError("--k must not exceed --n");
    return msp::uniform_instance(o.n, o.k);
  }
  if (o.instance == "random-graphic") {
    msp::RandomStream rng(o.seed);
    const std::size_t v = o.vertices != 0 ? o.vertices : std::max<std::size_t>(2, o.n / 2);
    return msp::random_graphic(v, o.n, rng);
  }
  if (o.file.empty()) throw UsageError("--instance file needs --file");
  std::ifstream in(o.file);
  if (!in) throw UsageError("cannot open " + o.file);
  return msp::read_instance(in);
}

InstanceBundle build_instance(const Options& o) {
  InstanceBundle b = make_instance(o);
  if (!o.dump_instance.empty()) {
    std::ofstream out(o.dump_instance);
    if (!out) throw UsageError("cannot write " + o.dump_instance);
    msp::write_instance(out, b);
  }
  return b;
}

msp::PolicySpec build_policy(const Options& o) {
  if (o.policy.empty()) throw UsageError("--policy is required");
  return msp::parse_policy(o.policy, o.k, o.reference);
}

// Writes to --out when given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw UsageError("cannot write " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int cmd_simulate(const Options& o) {
  const InstanceBundle b = build_instance(o);
  const msp::PolicySpec spec = build_policy(o);
  msp::ArrivalSchedule schedule;
  if (!o.schedule.empty()) {
    std::ifstream in(o.schedule);
    if (!in) throw UsageError("cannot open " + o.schedule);
    schedule = msp::read_schedule(in);
  } else {
    msp::RandomStream rng = msp::RandomStream::for_trial(o.seed, o.trial);
    schedule = msp::draw_schedule(b.weights, rng);
  }
  const msp::DecisionTrace trace = msp::run_trial(spec, b.view, b.weights, schedule, o.p);
  Sink sink(o.out);
  msp::write_trace_jsonl(sink.stream(), trace);
  return kOk;
}

bool bound_holds(double freq, double radius, const an::KnownBound& b) {
  return b.direction == an::BoundDirection::kLower ? freq >= b.value - radius
                                                   : freq <= b.value + radius;
}

int cmd_estimate(const Options& o) {
  const InstanceBundle b = build_instance(o);
  const msp::PolicySpec spec = build_policy(o);
  an::EstimateReport r = an::estimate(spec, b, o.p, o.trials, o.seed, o.threads);
  an::attach_known_bound(r, b, spec, o.p);
  Sink sink(o.out);
  bool ok = true;
  if (o.format == "json") {
    sink.stream() << an::to_json(r, b).dump(2) << '\n';
  } else {
    sink.stream() << an::kSweepCsvHeader << '\n';
    for (ElementId id : b.weights.sorted_desc(b.mwb)) {
      an::SweepRow row{b.family, b.n, spec.name(), o.p, r.trials, b.weights.label(id),
                       r.per_element_accept_freq.at(id), r.per_element_ci.at(id), std::nullopt};
      if (auto kb = an::element_bound(b, spec, o.p, id)) row.bound = kb->value;
      an::write_csv_row(sink.stream(), row);
    }
  }
  if (o.check_bound && r.analytic_bound) {
    an::KnownBound kb{*r.analytic_bound, *r.bound_direction};
    ok = bound_holds(r.min_over_mwb, r.ci_radius_3sigma, kb);
    if (!ok) std::cerr << "minOverMwb " << r.min_over_mwb << " violates the analytic bound\n";
  }
  return ok ? kOk : kFailed;
}

// One row per (n, p) cell for a single tracked element: --element names it
// by label, "min" tracks the MWB argmin, and "auto" picks e_inf when the
// family has one, else the argmin.
int cmd_sweep(const Options& o) {
  const msp::PolicySpec spec = build_policy(o);
  const std::vector<std::size_t> ns = o.ns.empty() ? std::vector<std::size_t>{o.n} : o.ns;
  const std::vector<double> ps = o.ps.empty() ? std::vector<double>{o.p} : o.ps;
  Sink sink(o.out);
  sink.stream() << an::kSweepCsvHeader << '\n';
  bool ok = true;
  for (std::size_t n : ns) {
    Options cell = o;
    cell.n = n;
    const InstanceBundle b = build_instance(cell);
    for (double p : ps) {
      if (!(p >= 0.0 && p <= 1.0)) throw UsageError("--ps values must lie in [0, 1]");
      const an::EstimateReport r = an::estimate(spec, b, p, o.trials, o.seed, o.threads);
      ElementId tracked = *r.argmin;
      if (o.element == "auto") {
        if (b.named.count("e_inf") != 0) tracked = b.at("e_inf");
      } else if (o.element != "min") {
        tracked = b.at(o.element);
        if (!b.mwb.contains(tracked)) throw UsageError(o.element + " is not in the MWB");
      }
      an::SweepRow row{b.family, n, spec.name(), p, r.trials, b.weights.label(tracked),
                       r.per_element_accept_freq.at(tracked), r.per_element_ci.at(tracked),
                       std::nullopt};
      if (auto kb = an::element_bound(b, spec, p, tracked)) {
        row.bound = kb->value;
        if (o.check_bound && !bound_holds(row.freq, row.ci, *kb)) ok = false;
      }
      an::write_csv_row(sink.stream(), row);
    }
  }
  return ok ? kOk : kFailed;
}

int cmd_replay(const Options& o) {
  const auto& names = msp::fixture_names();
  if (std::find(names.begin(), names.end(), o.name) == names.end()) {
    throw UsageError("unknown fixture " + o.name);
  }
  const msp::ReplayFixture f = msp::make_fixture(o.name);
  const msp::ReplayOutcome out = msp::replay(f);
  Sink sink(o.out);
  msp::write_trace_jsonl(sink.stream(), out.trace);
  for (const std::string& m : out.mismatches) std::cerr << o.name << ": " << m << '\n';
  return out.matches() ? kOk : kFailed;
}

int cmd_verify(const Options& o, const an::SuiteParams& params) {
  const auto& names = an::suite_names();
  if (std::find(names.begin(), names.end(), o.name) == names.end()) {
    throw UsageError("unknown suite " + o.name);
  }
  const an::SuiteResult r = an::run_suite(o.name, params);
  std::cout << r.name << ": " << r.cases << " cases, " << r.failures << " failing\n";
  for (const auto& [check, count] : r.failures_by_check) {
    std::cout << "  " << check << ": " << count << '\n';
  }
  for (const std::string& m : r.messages) std::cout << "  " << m << '\n';
  return r.ok() ? kOk : kFailed;
}

int cmd_certify(const Options& o) {
  const an::ImpossibilityCertificate cert = an::certify_no_size1_strong_fs();
  Sink sink(o.out);
  sink.stream() << an::to_json(cert, msp::double_triangle()).dump(2) << '\n';
  const bool all_refuted =
      cert.checked_assignments > 0 && cert.violations.size() == cert.checked_assignments;
  return all_refuted ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid secretary experiments"};
  app.require_subcommand(1);
  Options o;
  an::SuiteParams suite;
  std::optional<std::uint64_t> seed_flag;

  auto seed_option = [&](CLI::App* cmd) { cmd->add_option("--seed", seed_flag, "Base seed"); };

  auto* simulate = app.add_subcommand("simulate", "Run one trial and write its trace");
  add_instance_options(simulate, o);
  add_policy_options(simulate, o, true);
  add_output_options(simulate, o);
  seed_option(simulate);
  simulate->add_option("--trial", o.trial, "Trial index within the seed");
  simulate->add_option("--schedule", o.schedule, "Forced schedule file");

  auto* estimate = app.add_subcommand("estimate", "Monte Carlo acceptance frequencies");
  add_instance_options(estimate, o);
  add_policy_options(estimate, o, true);
  add_output_options(estimate, o);
  seed_option(estimate);
  estimate->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  estimate->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  estimate->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  estimate->add_flag("--check-bound", o.check_bound, "Exit 1 if the analytic bound fails");

  auto* sweep = app.add_subcommand("sweep", "CSV grid over n and p");
  add_instance_options(sweep, o);
  add_policy_options(sweep, o, true);
  add_output_options(sweep, o);
  seed_option(sweep);
  sweep->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  sweep->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  sweep->add_option("--ns", o.ns, "Values of n")->delimiter(',');
  sweep->add_option("--ps", o.ps, "Values of p")->delimiter(',');
  sweep->add_option("--element", o.element, "Tracked element: label, min or auto");
  sweep->add_option("--format", o.format)->check(CLI::IsMember({"csv"}));
  sweep->add_flag("--check-bound", o.check_bound, "Exit 1 if an analytic bound fails");

  auto* replay = app.add_subcommand("replay", "Replay a forced-schedule fixture");
  replay->add_option("fixture", o.name)->required();
  add_output_options(replay, o);

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", o.name)->required();
  verify->add_option("--cases", suite.cases)->check(CLI::PositiveNumber);
  verify->add_option("--n", suite.n)->check(CLI::PositiveNumber);
  verify->add_option("--trials", suite.trials)->check(CLI::PositiveNumber);
  verify->add_option("--p", suite.p)->check(CLI::Range(0.0, 1.0));
  seed_option(verify);

  auto* certify = app.add_subcommand("certify", "Size-1 strong forbidden-set certificate");
  add_output_options(certify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    o.seed = seed_flag ? *seed_flag : default_seed();
    suite.seed = o.seed;
    if (*simulate) return cmd_simulate(o);
    if (*estimate) return cmd_estimate(o);
    if (*sweep) return cmd_sweep(o);
    if (*replay) return cmd_replay(o);
    if (*verify) return cmd_verify(o, suite);
    return cmd_certify(o);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const msp::InstanceFormatError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    // Harness or policy violations and anything else unexpected.
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
}
