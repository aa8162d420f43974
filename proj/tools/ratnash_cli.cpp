// Copyright 2026 The ratnash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library only through ratnash.h.
//
// Exit status: 0 success or pass, 2 not rationalizable or verification
// failure, 1 usage, I/O or numerical error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ratnash/ratnash.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

struct CliError {
  int exit_code;
  std::string message;
};

struct Deleter {
  void operator()(ratnash_dataset* p) const { ratnash_dataset_free(p); }
  void operator()(ratnash_game* p) const { ratnash_game_free(p); }
  void operator()(ratnash_synthesis* p) const { ratnash_synthesis_free(p); }
  void operator()(ratnash_report* p) const { ratnash_report_free(p); }
  void operator()(char* p) const { ratnash_string_free(p); }
};
template <typename T>
using Owned = std::unique_ptr<T, Deleter>;

void Check(ratnash_status status) {
  if (status == RATNASH_OK) return;
  const int code =
      status == RATNASH_NOT_RATIONALIZABLE ? kExitNegative : kExitError;
  throw CliError{code, std::string(ratnash_status_name(status)) + ": " +
                           ratnash_last_error()};
}

std::string ReadInput(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitError, "cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{kExitError, "cannot write '" + path + "'"};
  out << text;
  if (!out) throw CliError{kExitError, "write failed for '" + path + "'"};
}

std::string Take(char* s) {
  Owned<char> owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

// Prefixes a load error with the file it came from.
template <typename Fn>
void Load(const std::string& path, Fn&& fn) {
  try {
    fn();
  } catch (CliError& e) {
    e.message = (path.empty() || path == "-" ? "<stdin>" : path) + ": " +
                e.message;
    if (e.exit_code == kExitNegative) e.exit_code = kExitError;
    throw;
  }
}

Owned<ratnash_dataset> LoadDataSet(const std::string& path,
                                   const ratnash_tolerances& tol) {
  ratnash_dataset* data = nullptr;
  Load(path, [&] {
    Check(ratnash_dataset_from_json(ReadInput(path).c_str(), &tol, &data));
  });
  return Owned<ratnash_dataset>(data);
}

Owned<ratnash_game> LoadGame(const std::string& path) {
  ratnash_game* game = nullptr;
  Load(path,
       [&] { Check(ratnash_game_from_json(ReadInput(path).c_str(), &game)); });
  return Owned<ratnash_game>(game);
}

struct Options {
  ratnash_tolerances tol = ratnash_default_tolerances();
  std::uint64_t seed = 1;
  std::string out;
  std::string method = "auto";
  std::string dataset;
  std::string game;
  std::string dump_lp;
  std::string lb_case;
  int n = 0;
  std::string witness;
  ratnash_sweep_config sweep = ratnash_default_sweep_config();
  std::string sweep_methods;
  bool no_timing = false;
};

int RunRationalize(const Options& o) {
  auto data = LoadDataSet(o.dataset, o.tol);
  if (!o.dump_lp.empty()) {
    char* text = nullptr;
    Check(ratnash_lp_dump(data.get(), &o.tol, &text));
    WriteOutput(o.dump_lp, Take(text));
  }
  int ok = 0;
  double delta = 0.0;
  char* json = nullptr;
  Check(ratnash_rationalize(data.get(), &o.tol, &ok, &delta, &json));
  WriteOutput(o.out, Take(json));
  return ok ? kExitOk : kExitNegative;
}

int RunSynthesize(const Options& o) {
  auto data = LoadDataSet(o.dataset, o.tol);
  ratnash_synthesis* raw = nullptr;
  Check(ratnash_synthesize(data.get(), o.method.c_str(), &o.tol, &raw));
  Owned<ratnash_synthesis> synthesis(raw);
  char* json = nullptr;
  Check(ratnash_synthesis_to_json(synthesis.get(), &json));
  WriteOutput(o.out, Take(json));
  return kExitOk;
}

int RunVerify(const Options& o) {
  if ((o.game.empty() || o.game == "-") &&
      (o.dataset.empty() || o.dataset == "-")) {
    throw CliError{kExitError, "at most one of game and data set may be stdin"};
  }
  auto game = LoadGame(o.game);
  auto data = LoadDataSet(o.dataset, o.tol);
  ratnash_report* raw = nullptr;
  Check(ratnash_verify(game.get(), data.get(), &o.tol, &raw));
  Owned<ratnash_report> report(raw);
  ratnash_report_info info;
  Check(ratnash_report_info_get(report.get(), &info));
  char* json = nullptr;
  Check(ratnash_report_to_json(report.get(), &json));
  WriteOutput(o.out, Take(json));
  return info.all_pass ? kExitOk : kExitNegative;
}

int RunLowerBound(const Options& o) {
  ratnash_dataset* raw = nullptr;
  ratnash_game* raw_witness = nullptr;
  Check(ratnash_lowerbound(o.lb_case.c_str(), o.n, &raw,
                           o.witness.empty() ? nullptr : &raw_witness,
                           nullptr));
  Owned<ratnash_dataset> data(raw);
  Owned<ratnash_game> witness(raw_witness);
  if (!o.witness.empty()) {
    if (!witness) {
      throw CliError{kExitError, "case '" + o.lb_case + "' has no witness game"};
    }
    char* json = nullptr;
    Check(ratnash_game_to_json(witness.get(), &json));
    WriteOutput(o.witness, Take(json));
  }
  char* json = nullptr;
  Check(ratnash_dataset_to_json(data.get(), &json));
  WriteOutput(o.out, Take(json));
  return kExitOk;
}

int RunSweep(const Options& o) {
  ratnash_sweep_config config = o.sweep;
  config.seed = o.seed;
  config.tol = o.tol;
  config.timing = o.no_timing ? 0 : 1;
  config.methods = o.sweep_methods.empty() ? nullptr : o.sweep_methods.c_str();
  char* csv = nullptr;
  Check(ratnash_sweep(&config, &csv));
  WriteOutput(o.out, Take(csv));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rationalize observed mixed-strategy play with low-rank games"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", ratnash_version());

  Options o;
  app.add_option("--tol-rank", o.tol.tol_rank, "relative singular-value cutoff")
      ->capture_default_str();
  app.add_option("--tol-supp", o.tol.tol_supp, "support threshold")
      ->capture_default_str();
  app.add_option("--tol-norm", o.tol.tol_norm, "allowed sum deviation")
      ->capture_default_str();
  app.add_option("--delta-min", o.tol.delta_min, "strictness margin")
      ->capture_default_str();
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--out", o.out, "output path (default stdout)");

  auto* rationalize = app.add_subcommand(
      "rationalize", "decide rationalizability with the LP and dump a game");
  rationalize->add_option("dataset", o.dataset, "data set JSON (default stdin)");
  rationalize->add_option("--dump-lp", o.dump_lp,
                          "write the LP, one constraint per line");

  auto* synthesize = app.add_subcommand(
      "synthesize", "build a rationalizing game with a rank certificate");
  synthesize->add_option("--method", o.method, "construction")
      ->check(CLI::IsMember(
          {"lp", "lowdim", "support", "chromatic", "composite", "auto"}))
      ->capture_default_str();
  synthesize->add_option("dataset", o.dataset, "data set JSON (default stdin)");

  auto* verify = app.add_subcommand(
      "verify", "check that every observation is a strict Nash equilibrium");
  verify->add_option("game", o.game, "game JSON ('-' for stdin)")->required();
  verify->add_option("dataset", o.dataset, "data set JSON ('-' for stdin)")
      ->required();

  auto* lowerbound =
      app.add_subcommand("lowerbound", "emit a lower-bound data set");
  lowerbound->add_option("case", o.lb_case, "uniform-nested, game-rank, no-pure-ne")
      ->required()
      ->check(CLI::IsMember({"uniform-nested", "game-rank", "no-pure-ne"}));
  lowerbound->add_option("--n", o.n, "number of pure strategies");
  lowerbound->add_option("--witness", o.witness, "also write the witness game");

  auto* sweep = app.add_subcommand("sweep", "CSV of certified bound vs rank");
  sweep->add_option("--n-min", o.sweep.n_min)->capture_default_str();
  sweep->add_option("--n-max", o.sweep.n_max)->capture_default_str();
  sweep->add_option("--cases", o.sweep.cases_per_n, "data sets per n")
      ->capture_default_str();
  sweep->add_option("--max-support", o.sweep.max_support)->capture_default_str();
  sweep->add_option("--methods", o.sweep_methods,
                    "comma-separated methods (default all)");
  sweep->add_flag("--no-timing", o.no_timing, "write wall_ms as 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }
  if (lowerbound->parsed() && o.n == 0 && o.lb_case != "no-pure-ne") {
    std::cerr << "error: --n is required for " << o.lb_case << "\n";
    return kExitError;
  }

  try {
    if (rationalize->parsed()) return RunRationalize(o);
    if (synthesize->parsed()) return RunSynthesize(o);
    if (verify->parsed()) return RunVerify(o);
    if (lowerbound->parsed()) return RunLowerBound(o);
    if (sweep->parsed()) return RunSweep(o);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  }
  return kExitError;
}
