// Copyright 2026 The fermitomo Authors
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

// fermitomo: command-line driver for the Majorana process-tomography pipeline.
//
//   fermitomo validate <file>
//   fermitomo gen-gates --m 1 --out dir
//   fermitomo simulate --m 1 --map T --shots 0 --seed 1 --out dir
//   fermitomo reconstruct dir/record.json --truth T --out dir
//   fermitomo selftest
//
// Exit codes: 0 success, 1 validity or completeness failure, 2 usage or
// parse error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fermitomo/linalg.h"
#include "fermitomo/operations.h"
#include "fermitomo/process.h"
#include "fermitomo/protocol.h"
#include "fermitomo/random_maps.h"
#include "fermitomo/serialization.h"
#include "fermitomo/state.h"
#include "fermitomo/tomography.h"

namespace fs = std::filesystem;
using namespace fermitomo;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct RunConfig {
  int m = 1;
  std::string map = "identity";
  std::uint64_t shots = 0;
  std::uint64_t seed = 1;
  double tol = kDefaultTolerance;
  std::string out;
};

Json checks_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    out.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"violation", c.violation}});
  }
  return out;
}

bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

void emit(const Json& j, const std::string& out_dir, const std::string& file) {
  if (out_dir.empty()) {
    std::cout << dump_canonical(j);
  } else {
    write_json_file(fs::path(out_dir) / file, j);
    std::cerr << "wrote " << (fs::path(out_dir) / file).string() << "\n";
  }
}

// A built-in name, or a path to a process JSON file.
ProcessRep load_map(const std::string& source, int m) {
  if (fs::exists(source)) return process_from_json(read_json_file(source));
  return builtin_map(source, m);
}

int cmd_validate(const std::string& path, const RunConfig& cfg) {
  const Json doc = read_json_file(path);
  std::vector<Check> checks;
  std::string kind;
  switch (document_kind(doc)) {
    case DocumentKind::kState:
      kind = "state";
      checks = validate_state(state_from_json(doc).rho, cfg.tol).checks();
      break;
    case DocumentKind::kPovm:
      kind = "povm";
      checks = validate_povm(povm_from_json(doc), cfg.tol).checks();
      break;
    case DocumentKind::kProcess:
      kind = "process";
      checks = validate_map(process_from_json(doc), cfg.tol).checks();
      break;
    case DocumentKind::kRecord:
      kind = "experiment_record";
      record_from_json(doc);
      checks.push_back(Check{"record_invariants", true, 0.0});
      break;
    case DocumentKind::kReconstruction: {
      kind = "reconstruction";
      const auto r = reconstruction_from_json(doc);
      checks.push_back(Check{"informationally_complete", r.informationally_complete(),
                             static_cast<double>(r.unknowns - r.design_rank)});
      break;
    }
  }
  const bool ok = all_passed(checks);
  emit(Json{{"file", path}, {"kind", kind}, {"valid", ok}, {"checks", checks_json(checks)}}, cfg.out,
       "validate.json");
  return ok ? kOk : kFailed;
}

int cmd_gen_gates(const RunConfig& cfg) {
  const Json j = gatesets_to_json(cfg.m);
  emit(j, cfg.out, "gatesets.json");
  std::cerr << "G_" << cfg.m + 1 << ": " << j["G"]["size"] << " circuits, U_" << cfg.m + 1 << ": "
            << j["U"]["size"] << " circuits\n";
  return kOk;
}

int cmd_simulate(const RunConfig& cfg) {
  const ProcessRep map = load_map(cfg.map, cfg.m);
  if (map.modes() != cfg.m) {
    throw std::invalid_argument("map acts on " + std::to_string(map.modes()) + " modes, --m is " +
                                std::to_string(cfg.m));
  }
  ExperimentRecord record = simulate_experiment(map);
  if (cfg.shots > 0) record = sample_record(record, cfg.shots, cfg.seed);
  emit(to_json(record), cfg.out, "record.json");
  std::cerr << "simulated " << record.setting_count() << " settings, map " << cfg.map << ", "
            << (cfg.shots > 0 ? std::to_string(cfg.shots) + " shots each" : std::string("exact"))
            << "\n";
  return kOk;
}

int cmd_reconstruct(const std::string& path, const std::optional<std::string>& truth,
                    const RunConfig& cfg) {
  const ExperimentRecord record = record_from_json(read_json_file(path));
  ReconstructionResult r;
  try {
    r = reconstruct_full(record);
  } catch (const RankDeficientError& e) {
    std::cerr << "informationally incomplete: design rank " << e.rank() << " of " << e.required()
              << " unknowns\n";
    return kFailed;
  }
  Json j = to_json(r);
  std::fprintf(stderr, "m=%d  design rank %d/%d  condition %.3g  residual %.3g\n", r.m, r.design_rank,
              r.unknowns, r.condition_number, r.residual_norm);
  if (truth) {
    const BlockErrors e = error_metrics(r, load_map(*truth, record.m));
    j["metrics"] = to_json(e);
    j["truth"] = *truth;
    std::fprintf(stderr, "error vs %s: even %.3e  odd %.3e  (Frobenius)\n", truth->c_str(), e.even.frobenius,
                e.odd.frobenius);
  }
  emit(j, cfg.out, "reconstruction.json");
  return kOk;
}

struct SelfTestRow {
  std::string name;
  bool passed;
  double value;
};

int cmd_selftest(const RunConfig& cfg) {
  std::vector<SelfTestRow> rows;
  auto add = [&](std::string name, bool passed, double value) {
    rows.push_back({std::move(name), passed, value});
  };
  for (int m = 1; m <= 2; ++m) {
    const std::string tag = "m=" + std::to_string(m) + " ";
    const auto g = generate_G(m + 1);
    const auto u = generate_U(m + 1);
    add(tag + "|G| = 4^m", g.size() == (std::size_t{1} << (2 * m)), static_cast<double>(g.size()));
    add(tag + "|U| = 3^m", u.size() == static_cast<std::size_t>(std::pow(3, m)), static_cast<double>(u.size()));
    const int prep = numeric_rank(transfer_columns(prepared_states(m)));
    add(tag + "prepared-state rank", prep == (1 << (2 * m)), prep);
    const int meas = numeric_rank(transfer_columns(measurement_operators(m)));
    add(tag + "measurement rank", meas == (1 << (2 * m + 1)), meas);
    const auto na = no_ancilla_rank(m);
    add(tag + "no-ancilla rank <= 4^(m-1)", na.closed && na.rank <= na.bound, na.rank);
    const auto ghij = verify_GHIJ(m);
    add(tag + "G/H/I/J decomposition", ghij.ok(), ghij.max_error());

    const ProtocolFrame frame(m);
    const DesignMatrix design = build_design(frame);
    double worst = 0.0;
    bool complete = true;
    std::vector<std::string> names = {"identity", "R", "T", "phase:pi/3", "parity-flip", "random:3"};
    if (m == 2) names.push_back("Lambda");
    for (const auto& name : names) {
      const ProcessRep map = builtin_map(name, m);
      const auto r = reconstruct_full(simulate_experiment(map, frame), design);
      complete = complete && r.informationally_complete();
      worst = std::max(worst, error_metrics(r, map).overall.frobenius);
    }
    add(tag + "exact reconstruction", complete && worst < (m == 1 ? 1e-9 : 1e-8), worst);

    double off = 0.0, twisted = 0.0, second = 0.0;
    for (std::uint64_t s = 0; s < 10; ++s) {
      const ProcessRep map = random_valid_map(m, s, RandomMapKind::kCptp);
      const auto c = composite_block_analysis(map);
      off = std::max(off, c.off_block);
      twisted = std::max({twisted, c.even_error, c.twisted_odd_error});
      second = std::max(second, second_term_contribution(map));
    }
    add(tag + "composite block structure", off < 1e-10 && twisted < 1e-10, std::max(off, twisted));
    add(tag + "second terms contribute zero", second < 1e-12, second);
  }

  bool ok = true;
  Json table = Json::array();
  std::printf("%-36s %-6s %s\n", "check", "result", "value");
  for (const auto& r : rows) {
    ok = ok && r.passed;
    std::printf("%-36s %-6s %.3g\n", r.name.c_str(), r.passed ? "PASS" : "FAIL", r.value);
    table.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"value", r.value}});
  }
  if (!cfg.out.empty()) write_json_file(fs::path(cfg.out) / "selftest.json", Json{{"checks", table}, {"passed", ok}});
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fermionic process tomography with Majorana operations"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "Number of fermion modes (Majorana pairs) of the map")
        ->check(CLI::Range(1, 4));
    sub->add_option("--tol", cfg.tol, "Numerical tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "Output directory (default: print JSON to stdout)");
  };

  std::string path;
  std::optional<std::string> truth;

  auto* validate = app.add_subcommand("validate", "Check a state, POVM, process or record file");
  validate->add_option("path", path, "JSON file")->required();
  add_common(validate);

  auto* gen = app.add_subcommand("gen-gates", "Write the gate sets G_{m+1} and U_{m+1}");
  add_common(gen);

  auto* sim = app.add_subcommand("simulate", "Simulate every tomography setting");
  add_common(sim);
  sim->add_option("--map", cfg.map, "identity, R, T, Lambda, parity-flip, phase:<angle>, random:<seed>, or a file");
  sim->add_option("--shots", cfg.shots, "Shots per setting (0 = exact probabilities)");
  sim->add_option("--seed", cfg.seed, "Sampling seed");

  auto* rec = app.add_subcommand("reconstruct", "Reconstruct even and odd blocks from a record");
  rec->add_option("record", path, "Experiment record JSON")->required();
  rec->add_option("--truth", truth, "Map to compare against (built-in name or file)");
  add_common(rec);

  auto* self = app.add_subcommand("selftest", "Run the invariant suite");
  add_common(self);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(path, cfg);
    if (*gen) return cmd_gen_gates(cfg);
    if (*sim) return cmd_simulate(cfg);
    if (*rec) return cmd_reconstruct(path, truth, cfg);
    if (*self) return cmd_selftest(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
