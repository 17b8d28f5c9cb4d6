// Copyright 2026 gbit-toolbox authors
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

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "gbit/algebra.hpp"
#include "gbit/json_io.hpp"
#include "gbit/lattice.hpp"
#include "gbit/sim.hpp"
#include "gbit/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gbit::Error("cannot open output file '" + path + "'");
  out << content;
}

gbit::SystemKind make_system(const std::string& kind, int n) {
  if (n < 1) throw gbit::Error("n must be >= 1");
  return {gbit::kind_from_string(kind), n};
}

int cmd_enumerate(const std::string& kind, int n, const std::string& out,
                  const std::string& format) {
  const gbit::SystemKind sys = make_system(kind, n);
  if (n > 10) throw gbit::Error("enumeration output supports n <= 10");
  const gbit::QuestionSet set = gbit::enumerate_complete_set(sys);
  std::ostringstream os;
  if (format == "json") {
    os << gbit::question_set_to_json(set).dump(2) << "\n";
  } else {
    os << "# kind=" << gbit::to_string(sys.kind) << " n=" << sys.n << " D=" << set.size()
       << "\n";
    for (const auto& q : set.members) os << q.str() << "\n";
  }
  write_output(out, os.str());
  return kExitOk;
}

int cmd_lattice(const std::string& kind, int n, const std::string& out,
                const std::string& format) {
  const gbit::SystemKind sys = make_system(kind, n);
  if (n > 4) throw gbit::Error("lattice rendering supports n <= 4");
  const gbit::QuestionGraph graph = gbit::build_lattice(sys);
  std::ostringstream os;
  if (format == "json") {
    os << gbit::graph_to_json(graph).dump(2) << "\n";
  } else {
    os << gbit::to_dot(graph);
  }
  write_output(out, os.str());
  return kExitOk;
}

int cmd_verify(const std::string& kind, int n, std::uint64_t seed, const std::string& out) {
  std::optional<gbit::GbitKind> which;
  if (!kind.empty() && kind != "both") which = gbit::kind_from_string(kind);
  if (n < 1) throw gbit::Error("n must be >= 1");
  const auto results = gbit::run_verification(which, n, seed);
  std::ostringstream os;
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    os << "[" << (r.passed ? " ok " : "FAIL") << "] " << r.name;
    if (!r.detail.empty()) os << ": " << r.detail;
    os << "\n";
  }
  os << (all ? "verification passed" : "verification FAILED") << " (" << results.size()
     << " checks)\n";
  write_output(out, os.str());
  return all ? kExitOk : kExitVerificationFailed;
}

int cmd_simulate(const std::string& scenario_path, std::uint64_t seed, std::int64_t shots,
                 const std::string& out, const std::string& format) {
  std::ifstream in(scenario_path);
  if (!in) throw gbit::Error("cannot open scenario file '" + scenario_path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  gbit::Scenario scenario = gbit::parse_scenario(buffer.str());
  if (shots > 0) scenario.shots = shots;

  std::ostringstream os;
  std::ostringstream table;
  table << std::fixed << std::setprecision(6);
  if (scenario.mode == "single-shot") {
    table << std::left << std::setw(6) << "shot" << std::setw(10) << "question"
          << std::setw(8) << "answer" << std::setw(12) << "pre-prob" << "\n";
    for (std::int64_t shot = 0; shot < scenario.shots; ++shot) {
      const gbit::Transcript transcript = gbit::run_single_shot(
          {scenario.sys, scenario.preparation, scenario.script, seed},
          static_cast<std::uint64_t>(shot));
      for (std::size_t step = 0; step < transcript.entries.size(); ++step) {
        os << gbit::transcript_entry_to_json(transcript, step).dump() << "\n";
        const auto& e = transcript.entries[step];
        table << std::left << std::setw(6) << shot << std::setw(10) << e.question.str()
              << std::setw(8) << (e.yes ? "yes" : "no") << std::setw(12)
              << e.pre_probability << "\n";
      }
    }
  } else {
    const gbit::TomographyResult result = gbit::run_tomography(
        scenario.sys, scenario.preparation, scenario.shots, scenario.questions, seed);
    table << std::left << std::setw(10) << "question" << std::setw(12) << "y-hat"
          << std::setw(12) << "std-error" << std::setw(10) << "shots" << "\n";
    for (std::size_t i = 0; i < result.questions.size(); ++i) {
      os << gbit::tomography_record_to_json(result, i).dump() << "\n";
      table << std::left << std::setw(10) << result.questions[i].str() << std::setw(12)
            << result.y_hat[static_cast<Eigen::Index>(i)] << std::setw(12)
            << result.std_error[static_cast<Eigen::Index>(i)] << std::setw(10)
            << result.shots_per_question << "\n";
    }
  }

  if (format == "table") {
    write_output(out, table.str());
  } else {
    write_output(out, os.str());
    if (!out.empty() && out != "-") std::cout << table.str();
  }
  return kExitOk;
}

int cmd_axioms(const std::string& kind, int n, std::int64_t trials, std::uint64_t seed,
               const std::string& out) {
  const gbit::SystemKind sys = make_system(kind, n);
  const gbit::AxiomReport report = gbit::validate_axioms(sys, trials, seed);
  write_output(out, report.to_string());
  return report.all_passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"question-algebra toolbox for n-qubit/rebit systems"};
  app.require_subcommand(1);

  struct {
    std::string kind = "qubit";
    int n = 2;
    std::string out;
    std::string format = "table";
  } enum_opts;
  auto* enumerate = app.add_subcommand("enumerate", "list the complete question set");
  enumerate->add_option("--kind", enum_opts.kind, "qubit or rebit");
  enumerate->add_option("--n", enum_opts.n, "number of gbits");
  enumerate->add_option("--out", enum_opts.out, "output file (default stdout)");
  enumerate->add_option("--format", enum_opts.format, "table or json");

  struct {
    std::string kind = "qubit";
    int n = 2;
    std::string out;
    std::string format = "dot";
  } lattice_opts;
  auto* lattice = app.add_subcommand("lattice", "export the compatibility/triangle lattice");
  lattice->add_option("--kind", lattice_opts.kind, "qubit or rebit");
  lattice->add_option("--n", lattice_opts.n, "number of gbits");
  lattice->add_option("--out", lattice_opts.out, "output file (default stdout)");
  lattice->add_option("--format", lattice_opts.format, "dot or json");

  struct {
    std::string kind = "both";
    int n = 3;
    std::uint64_t seed = 0;
    std::string out;
  } verify_opts;
  auto* verify = app.add_subcommand("verify", "run the oracle cross-validation suites");
  verify->add_option("--kind", verify_opts.kind, "qubit, rebit or both");
  verify->add_option("--n", verify_opts.n, "largest exhaustively checked size");
  verify->add_option("--seed", verify_opts.seed, "random seed");
  verify->add_option("--out", verify_opts.out, "output file (default stdout)");

  struct {
    std::string scenario;
    std::uint64_t seed = 0;
    std::int64_t shots = 0;
    std::string out;
    std::string format = "json";
  } sim_opts;
  auto* simulate = app.add_subcommand("simulate", "run an interrogation scenario");
  simulate->add_option("--scenario", sim_opts.scenario, "scenario JSON file")->required();
  simulate->add_option("--seed", sim_opts.seed, "random seed");
  simulate->add_option("--shots", sim_opts.shots, "override the scenario shot count");
  simulate->add_option("--out", sim_opts.out, "output file (default stdout)");
  simulate->add_option("--format", sim_opts.format, "json or table");

  struct {
    std::string kind = "qubit";
    int n = 2;
    std::int64_t trials = 10000;
    std::uint64_t seed = 0;
    std::string out;
  } axiom_opts;
  auto* axioms = app.add_subcommand("axioms", "statistical self-tests of the update rules");
  axioms->add_option("--kind", axiom_opts.kind, "qubit or rebit");
  axioms->add_option("--n", axiom_opts.n, "number of gbits");
  axioms->add_option("--trials", axiom_opts.trials, "trials per statistical test");
  axioms->add_option("--seed", axiom_opts.seed, "random seed");
  axioms->add_option("--out", axiom_opts.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return kExitOk;  // --help
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(enumerate)) {
      return cmd_enumerate(enum_opts.kind, enum_opts.n, enum_opts.out, enum_opts.format);
    }
    if (app.got_subcommand(lattice)) {
      return cmd_lattice(lattice_opts.kind, lattice_opts.n, lattice_opts.out,
                         lattice_opts.format);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(verify_opts.kind, verify_opts.n, verify_opts.seed, verify_opts.out);
    }
    if (app.got_subcommand(simulate)) {
      return cmd_simulate(sim_opts.scenario, sim_opts.seed, sim_opts.shots, sim_opts.out,
                          sim_opts.format);
    }
    if (app.got_subcommand(axioms)) {
      return cmd_axioms(axiom_opts.kind, axiom_opts.n, axiom_opts.trials, axiom_opts.seed,
                        axiom_opts.out);
    }
  } catch (const gbit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
