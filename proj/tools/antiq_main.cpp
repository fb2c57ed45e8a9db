// Command-line front end; all computation goes through the C API.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "antiq/antiq.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  double tol = 0.0;  // 0 means library default
  bool human = false;
  std::string output;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw CLI::ValidationError("--input", "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Print the report and map its "pass" flag to the exit code.
int finish(char* report, const Options& opt) {
  std::string text(report);
  antiq_string_free(report);
  bool pass = true;
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.contains("pass")) pass = j.at("pass").get<bool>();
    if (opt.human) text = j.dump(2);
  } catch (const nlohmann::json::exception&) {
    // report is emitted verbatim below
  }
  if (opt.output.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(opt.output);
    f << text << "\n";
  }
  return pass ? kExitPass : kExitCheckFailed;
}

int fail(antiq_status st) {
  std::cerr << "error: " << antiq_last_error() << "\n";
  (void)st;
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bloch-space and antilinear-superoperator toolkit"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("ANTIQ_TOL")) opt.tol = std::atof(env);
  app.add_option("--tol", opt.tol, "override the default tolerance");
  app.add_flag("--human", opt.human, "pretty-print JSON output");
  app.add_option("--output", opt.output, "write the report to a file");

  int d = 2, n = 2, samples = 100, dim = 2, dim_in = 2, dim_out = 2, rank = 1;
  std::uint64_t seed = 0;
  std::string input, kind;

  auto* c_basis = app.add_subcommand("basis", "dump and verify a basis");
  c_basis->add_option("--d", d, "local dimension")
      ->required()
      ->check(CLI::Range(2, 1 << 12));

  auto* c_state = app.add_subcommand("check-state", "state membership report");
  c_state->add_option("--input", input, "matrix or Bloch-vector JSON, - for stdin")
      ->required();

  auto* c_channel =
      app.add_subcommand("check-channel", "CP/TP/unital/antiunitary report");
  c_channel->add_option("--input", input, "superoperator JSON, - for stdin")
      ->required();

  auto* c_theta =
      app.add_subcommand("theta", "conjugation fidelity/concurrence/norms");
  c_theta->add_option("--input", input, "request JSON, - for stdin")->required();

  auto* c_eqr =
      app.add_subcommand("verify-eqR", "pure-state space-time norm identity");
  c_eqr->add_option("--n", n, "parties")->required()->check(CLI::Range(1, 16));
  c_eqr->add_option("--d", d, "local dimension")
      ->required()
      ->check(CLI::Range(2, 1 << 12));
  c_eqr->add_option("--samples", samples)->check(CLI::PositiveNumber);
  c_eqr->add_option("--seed", seed);

  auto* c_dis = app.add_subcommand("verify-distribution",
                                   "entanglement-distribution equality");
  c_dis->add_option("--n", n, "parties")->required()->check(CLI::Range(2, 16));
  c_dis->add_option("--d", d, "local dimension")
      ->required()
      ->check(CLI::Range(2, 1 << 12));
  c_dis->add_option("--samples", samples)->check(CLI::PositiveNumber);
  c_dis->add_option("--seed", seed);

  auto* c_sample = app.add_subcommand("sample", "random state or channel");
  c_sample->add_option("--kind", kind, "state or channel")
      ->required()
      ->check(CLI::IsMember({"state", "channel"}));
  c_sample->add_option("--dim", dim, "state dimension");
  c_sample->add_option("--dim-in", dim_in, "channel input dimension");
  c_sample->add_option("--dim-out", dim_out, "channel output dimension");
  c_sample->add_option("--rank", rank, "Choi rank")->check(CLI::PositiveNumber);
  c_sample->add_option("--seed", seed);

  auto* c_transform =
      app.add_subcommand("transform", "apply an orthogonal/Lorentz transform");
  c_transform->add_option("--input", input, "request JSON, - for stdin")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  char* report = nullptr;
  antiq_status st = ANTIQ_OK;
  try {
    if (c_basis->parsed()) {
      antiq_basis* b = nullptr;
      st = antiq_basis_create(d, &b);
      if (st == ANTIQ_OK) {
        st = antiq_basis_report(b, &report);
        antiq_basis_destroy(b);
      }
    } else if (c_state->parsed()) {
      st = antiq_check_state(read_input(input).c_str(), opt.tol, &report);
    } else if (c_channel->parsed()) {
      antiq_superop* m = nullptr;
      st = antiq_superop_from_json(read_input(input).c_str(), &m);
      if (st == ANTIQ_OK) {
        st = antiq_superop_report(m, opt.tol, &report);
        antiq_superop_destroy(m);
      }
    } else if (c_theta->parsed()) {
      st = antiq_theta_report(read_input(input).c_str(), opt.tol, &report);
    } else if (c_eqr->parsed()) {
      st = antiq_verify_eqr(n, d, samples, seed, opt.tol, &report);
    } else if (c_dis->parsed()) {
      st = antiq_verify_distribution(n, d, samples, seed, opt.tol, &report);
    } else if (c_sample->parsed()) {
      st = kind == "state"
               ? antiq_sample_state(dim, seed, &report)
               : antiq_sample_channel(dim_in, dim_out, rank, seed, &report);
    } else if (c_transform->parsed()) {
      st = antiq_transform(read_input(input).c_str(), opt.tol, &report);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (st != ANTIQ_OK) return fail(st);
  return finish(report, opt);
}
