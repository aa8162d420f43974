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

#include "ratnash/ratnash.h"

#include <cstring>
#include <limits>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "ratnash/bounds.hpp"
#include "ratnash/error.hpp"
#include "ratnash/json_io.hpp"
#include "ratnash/lp.hpp"
#include "ratnash/sweep.hpp"
#include "ratnash/synth.hpp"
#include "ratnash/verify.hpp"

struct ratnash_dataset {
  ratnash::DataSet data;
};
struct ratnash_game {
  ratnash::Game game;
};
struct ratnash_synthesis {
  ratnash::SynthesisResult result;
};
struct ratnash_report {
  ratnash::VerificationReport report;
};

namespace {

thread_local std::string g_last_error;

ratnash_status Fail(ratnash_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs fn, mapping exceptions to status codes and the thread's last error.
template <typename Fn>
ratnash_status Guard(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return RATNASH_OK;
  } catch (const ratnash::Error& e) {
    return Fail(static_cast<ratnash_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(RATNASH_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return Fail(RATNASH_INTERNAL_ERROR, e.what());
  }
}

void Require(bool ok, const char* what) {
  if (!ok) throw ratnash::Error(ratnash::ErrorCode::kInvalidArgument, what);
}

ratnash::Tolerances ToCpp(const ratnash_tolerances* tol) {
  ratnash::Tolerances t;
  if (tol != nullptr) {
    t.tol_supp = tol->tol_supp;
    t.tol_norm = tol->tol_norm;
    t.tol_rank = tol->tol_rank;
    t.delta_min = tol->delta_min;
  }
  t.Validate();
  return t;
}

char* CopyString(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string Dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

ratnash::LowerBoundKind ParseCase(const char* name) {
  Require(name != nullptr, "case name is null");
  auto kind = ratnash::ParseLowerBound(name);
  if (!kind) {
    throw ratnash::Error(ratnash::ErrorCode::kInvalidArgument,
                         std::string("unknown lower-bound case '") + name +
                             "' (uniform-nested, game-rank, no-pure-ne)");
  }
  return *kind;
}

}  // namespace

extern "C" {

ratnash_tolerances ratnash_default_tolerances(void) {
  const ratnash::Tolerances t;
  return {t.tol_supp, t.tol_norm, t.tol_rank, t.delta_min};
}

ratnash_sweep_config ratnash_default_sweep_config(void) {
  const ratnash::SweepConfig c;
  return {c.n_min,  c.n_max,      c.cases_per_n,
          c.max_support, c.seed, c.timing ? 1 : 0,
          nullptr, ratnash_default_tolerances()};
}

const char* ratnash_status_name(ratnash_status status) {
  switch (status) {
    case RATNASH_OK: return "Ok";
    case RATNASH_INTERNAL_ERROR: return "InternalError";
    default:
      if (status > 0 && status < RATNASH_INTERNAL_ERROR) {
        return ratnash::ErrorCodeName(static_cast<ratnash::ErrorCode>(status));
      }
  }
  return "unknown";
}

const char* ratnash_last_error(void) { return g_last_error.c_str(); }

void ratnash_string_free(char* s) { delete[] s; }

const char* ratnash_version(void) { return "0.1.0"; }

ratnash_status ratnash_dataset_from_json(const char* json,
                                         const ratnash_tolerances* tol,
                                         ratnash_dataset** out) {
  return Guard([&] {
    Require(json != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    *out = new ratnash_dataset{ratnash::ParseDataSet(json, ToCpp(tol))};
  });
}

ratnash_status ratnash_dataset_to_json(const ratnash_dataset* data,
                                       char** out) {
  return Guard([&] {
    Require(data != nullptr && out != nullptr, "null argument");
    *out = CopyString(Dump(ratnash::DataSetToJson(data->data)));
  });
}

int ratnash_dataset_n(const ratnash_dataset* data) {
  return data == nullptr ? 0 : data->data.n();
}

int ratnash_dataset_size(const ratnash_dataset* data) {
  return data == nullptr ? 0 : data->data.size();
}

void ratnash_dataset_free(ratnash_dataset* data) { delete data; }

ratnash_status ratnash_game_from_json(const char* json, ratnash_game** out) {
  return Guard([&] {
    Require(json != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    *out = new ratnash_game{ratnash::ParseGame(json)};
  });
}

ratnash_status ratnash_game_to_json(const ratnash_game* game, char** out) {
  return Guard([&] {
    Require(game != nullptr && out != nullptr, "null argument");
    *out = CopyString(Dump(ratnash::GameToJson(game->game)));
  });
}

int ratnash_game_n(const ratnash_game* game) {
  return game == nullptr ? 0 : game->game.n();
}

void ratnash_game_free(ratnash_game* game) { delete game; }

ratnash_status ratnash_rationalize(const ratnash_dataset* data,
                                   const ratnash_tolerances* tol,
                                   int* rationalizable, double* delta_star,
                                   char** json) {
  return Guard([&] {
    Require(data != nullptr, "null data set");
    const ratnash::RationalizationResult r =
        ratnash::Rationalize(data->data, ToCpp(tol));
    if (rationalizable) *rationalizable = r.rationalizable ? 1 : 0;
    if (delta_star) *delta_star = r.delta_star;
    if (json) *json = CopyString(Dump(ratnash::RationalizationToJson(r)));
  });
}

ratnash_status ratnash_lp_dump(const ratnash_dataset* data,
                               const ratnash_tolerances* tol, char** text) {
  return Guard([&] {
    Require(data != nullptr && text != nullptr, "null argument");
    *text = CopyString(
        ratnash::BuildRationalizationLp(data->data, ToCpp(tol)).program.ToText());
  });
}

ratnash_status ratnash_synthesize(const ratnash_dataset* data,
                                  const char* method,
                                  const ratnash_tolerances* tol,
                                  ratnash_synthesis** out) {
  return Guard([&] {
    Require(data != nullptr && method != nullptr && out != nullptr,
            "null argument");
    *out = nullptr;
    auto m = ratnash::ParseMethod(method);
    if (!m) {
      throw ratnash::Error(
          ratnash::ErrorCode::kInvalidArgument,
          std::string("unknown method '") + method +
              "' (lp, lowdim, support, chromatic, composite, auto)");
    }
    *out = new ratnash_synthesis{ratnash::Synthesize(data->data, *m, ToCpp(tol))};
  });
}

ratnash_status ratnash_synthesis_info_get(const ratnash_synthesis* s,
                                          ratnash_synthesis_info* info) {
  return Guard([&] {
    Require(s != nullptr && info != nullptr, "null argument");
    const ratnash::SynthesisResult& r = s->result;
    *info = {ratnash::MethodName(r.method), r.bound, r.bound_a, r.bound_b,
             r.rank_a, r.rank_b, r.measure};
  });
}

ratnash_status ratnash_synthesis_game(const ratnash_synthesis* s,
                                      ratnash_game** out) {
  return Guard([&] {
    Require(s != nullptr && out != nullptr, "null argument");
    *out = new ratnash_game{s->result.game};
  });
}

ratnash_status ratnash_synthesis_to_json(const ratnash_synthesis* s,
                                         char** out) {
  return Guard([&] {
    Require(s != nullptr && out != nullptr, "null argument");
    *out = CopyString(Dump(ratnash::SynthesisToJson(s->result)));
  });
}

void ratnash_synthesis_free(ratnash_synthesis* s) { delete s; }

ratnash_status ratnash_verify(const ratnash_game* game,
                              const ratnash_dataset* data,
                              const ratnash_tolerances* tol,
                              ratnash_report** out) {
  return Guard([&] {
    Require(game != nullptr && data != nullptr && out != nullptr,
            "null argument");
    *out = nullptr;
    *out = new ratnash_report{
        ratnash::VerifyDataset(game->game, data->data, ToCpp(tol))};
  });
}

ratnash_status ratnash_report_info_get(const ratnash_report* r,
                                       ratnash_report_info* info) {
  return Guard([&] {
    Require(r != nullptr && info != nullptr, "null argument");
    const ratnash::VerificationReport& v = r->report;
    *info = {v.all_pass ? 1 : 0, v.rank_a,      v.rank_b,
             v.player_rank,      v.game_rank,
             static_cast<int>(v.observations.size()), v.min_margin};
  });
}

ratnash_status ratnash_report_to_json(const ratnash_report* r, char** out) {
  return Guard([&] {
    Require(r != nullptr && out != nullptr, "null argument");
    *out = CopyString(Dump(ratnash::ReportToJson(r->report)));
  });
}

void ratnash_report_free(ratnash_report* r) { delete r; }

ratnash_status ratnash_strict_pure_count(const ratnash_game* game,
                                         const ratnash_tolerances* tol,
                                         int* count) {
  return Guard([&] {
    Require(game != nullptr && count != nullptr, "null argument");
    *count = static_cast<int>(
        ratnash::StrictPureEquilibria(game->game, ToCpp(tol)).size());
  });
}

ratnash_status ratnash_lowerbound(const char* name, int n,
                                  ratnash_dataset** data,
                                  ratnash_game** witness, int* claimed_bound) {
  return Guard([&] {
    Require(data != nullptr, "null argument");
    *data = nullptr;
    if (witness) *witness = nullptr;
    ratnash::LowerBoundCase lb = ratnash::MakeLowerBoundCase(ParseCase(name), n);
    if (claimed_bound) *claimed_bound = lb.claimed_bound;
    if (witness && lb.witness) *witness = new ratnash_game{*lb.witness};
    *data = new ratnash_dataset{std::move(lb.dataset)};
  });
}

ratnash_status ratnash_lowerbound_check(const char* name, int n,
                                        const ratnash_game* game,
                                        const ratnash_tolerances* tol,
                                        int* holds, char** detail) {
  return Guard([&] {
    Require(game != nullptr && holds != nullptr, "null argument");
    const ratnash::LowerBoundCase lb =
        ratnash::MakeLowerBoundCase(ParseCase(name), n);
    const ratnash::LowerBoundCheck check =
        ratnash::CheckLowerBound(lb, game->game, ToCpp(tol));
    *holds = check.holds ? 1 : 0;
    if (detail) *detail = CopyString(check.detail);
  });
}

ratnash_status ratnash_sweep(const ratnash_sweep_config* config, char** csv) {
  return Guard([&] {
    Require(config != nullptr && csv != nullptr, "null argument");
    ratnash::SweepConfig c;
    c.n_min = config->n_min;
    c.n_max = config->n_max;
    c.cases_per_n = config->cases_per_n;
    c.max_support = config->max_support;
    c.seed = config->seed;
    c.timing = config->timing != 0;
    c.tol = ToCpp(&config->tol);
    if (config->methods != nullptr) {
      c.methods.clear();
      std::stringstream list(config->methods);
      std::string item;
      while (std::getline(list, item, ',')) {
        auto m = ratnash::ParseMethod(item);
        if (!m) {
          throw ratnash::Error(ratnash::ErrorCode::kInvalidArgument,
                               "unknown method '" + item + "'");
        }
        c.methods.push_back(*m);
      }
      Require(!c.methods.empty(), "empty method list");
    }
    *csv = CopyString(ratnash::RunSweep(c));
  });
}

}  // extern "C"
