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

#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "ratnash/ratnash.h"

namespace {

constexpr const char* kDiagonal =
    R"({"n": 3, "observations": [{"x": [1, 0, 0], "y": [1, 0, 0]},
                                 {"x": [0, 0.5, 0.5], "y": [0, 0.5, 0.5]}]})";

std::string Take(char* s) {
  std::string out = s ? s : "";
  ratnash_string_free(s);
  return out;
}

TEST(CApi, DefaultsAndNames) {
  const ratnash_tolerances tol = ratnash_default_tolerances();
  EXPECT_EQ(tol.tol_supp, 1e-9);
  EXPECT_EQ(tol.tol_norm, 1e-9);
  EXPECT_EQ(tol.tol_rank, 1e-9);
  EXPECT_EQ(tol.delta_min, 1e-7);
  EXPECT_STREQ(ratnash_status_name(RATNASH_OK), "Ok");
  EXPECT_NE(std::string(ratnash_version()), "");
  ratnash_dataset_free(nullptr);
  ratnash_game_free(nullptr);
  ratnash_synthesis_free(nullptr);
  ratnash_report_free(nullptr);
  ratnash_string_free(nullptr);
}

TEST(CApi, ParseErrorsSetMessage) {
  ratnash_dataset* d = nullptr;
  EXPECT_EQ(ratnash_dataset_from_json("{", nullptr, &d), RATNASH_PARSE_ERROR);
  EXPECT_EQ(d, nullptr);
  EXPECT_NE(std::string(ratnash_last_error()).find("line 1"), std::string::npos);
  EXPECT_EQ(ratnash_dataset_from_json(nullptr, nullptr, &d), RATNASH_INVALID_ARGUMENT);
  EXPECT_EQ(ratnash_dataset_from_json(
                R"({"n": 2, "observations": [{"x": [1, 0], "y": [1, 0]},
                                             {"x": [1, 0], "y": [1, 0]}]})",
                nullptr, &d),
            RATNASH_DUPLICATE_OBSERVATION);
}

TEST(CApi, DataSetAccessors) {
  ratnash_dataset* d = nullptr;
  ASSERT_EQ(ratnash_dataset_from_json(kDiagonal, nullptr, &d), RATNASH_OK);
  EXPECT_EQ(ratnash_dataset_n(d), 3);
  EXPECT_EQ(ratnash_dataset_size(d), 2);
  char* text = nullptr;
  ASSERT_EQ(ratnash_dataset_to_json(d, &text), RATNASH_OK);
  ratnash_dataset* back = nullptr;
  EXPECT_EQ(ratnash_dataset_from_json(Take(text).c_str(), nullptr, &back), RATNASH_OK);
  EXPECT_EQ(ratnash_dataset_size(back), 2);
  ratnash_dataset_free(back);
  ratnash_dataset_free(d);
}

TEST(CApi, RationalizeAndDump) {
  ratnash_dataset* d = nullptr;
  ASSERT_EQ(ratnash_dataset_from_json(kDiagonal, nullptr, &d), RATNASH_OK);
  int ok = 0;
  double delta = 0.0;
  char* json = nullptr;
  ASSERT_EQ(ratnash_rationalize(d, nullptr, &ok, &delta, &json), RATNASH_OK);
  EXPECT_EQ(ok, 1);
  EXPECT_GT(delta, 1e-7);
  EXPECT_NE(Take(json).find("\"A\""), std::string::npos);
  char* lp = nullptr;
  ASSERT_EQ(ratnash_lp_dump(d, nullptr, &lp), RATNASH_OK);
  EXPECT_FALSE(Take(lp).empty());
  ratnash_dataset_free(d);
}

TEST(CApi, SynthesizeThenVerify) {
  ratnash_dataset* d = nullptr;
  ASSERT_EQ(ratnash_dataset_from_json(kDiagonal, nullptr, &d), RATNASH_OK);
  for (const char* method : {"lp", "lowdim", "support", "chromatic", "composite", "auto"}) {
    ratnash_synthesis* s = nullptr;
    ASSERT_EQ(ratnash_synthesize(d, method, nullptr, &s), RATNASH_OK) << method;
    ratnash_synthesis_info info{};
    ASSERT_EQ(ratnash_synthesis_info_get(s, &info), RATNASH_OK);
    EXPECT_LE(info.rank_a, info.bound_a) << method;
    EXPECT_LE(info.rank_b, info.bound_b) << method;
    ratnash_game* g = nullptr;
    ASSERT_EQ(ratnash_synthesis_game(s, &g), RATNASH_OK);
    EXPECT_EQ(ratnash_game_n(g), 3);
    ratnash_report* r = nullptr;
    ASSERT_EQ(ratnash_verify(g, d, nullptr, &r), RATNASH_OK);
    ratnash_report_info ri{};
    ASSERT_EQ(ratnash_report_info_get(r, &ri), RATNASH_OK);
    EXPECT_EQ(ri.all_pass, 1) << method;
    EXPECT_EQ(ri.num_observations, 2);
    EXPECT_GE(ri.min_margin, 1e-7);
    char* text = nullptr;
    ASSERT_EQ(ratnash_synthesis_to_json(s, &text), RATNASH_OK);
    ratnash_game* parsed = nullptr;
    EXPECT_EQ(ratnash_game_from_json(Take(text).c_str(), &parsed), RATNASH_OK);
    ratnash_game_free(parsed);
    ratnash_report_free(r);
    ratnash_game_free(g);
    ratnash_synthesis_free(s);
  }
  ratnash_synthesis* s = nullptr;
  EXPECT_EQ(ratnash_synthesize(d, "magic", nullptr, &s), RATNASH_INVALID_ARGUMENT);
  EXPECT_EQ(s, nullptr);
  ratnash_dataset_free(d);
}

TEST(CApi, ContradictionIsNotRationalizable) {
  ratnash_dataset* d = nullptr;
  ASSERT_EQ(ratnash_dataset_from_json(
                R"({"n": 2, "observations": [{"x": [1, 0], "y": [1, 0]},
                                             {"x": [0, 1], "y": [1, 0]}]})",
                nullptr, &d),
            RATNASH_OK);
  int ok = 1;
  double delta = 1.0;
  ASSERT_EQ(ratnash_rationalize(d, nullptr, &ok, &delta, nullptr), RATNASH_OK);
  EXPECT_EQ(ok, 0);
  ratnash_synthesis* s = nullptr;
  EXPECT_EQ(ratnash_synthesize(d, "lp", nullptr, &s), RATNASH_NOT_RATIONALIZABLE);
  ratnash_dataset_free(d);
}

TEST(CApi, VerifyRejectsWrongSize) {
  ratnash_dataset* d = nullptr;
  ASSERT_EQ(ratnash_dataset_from_json(kDiagonal, nullptr, &d), RATNASH_OK);
  ratnash_game* g = nullptr;
  ASSERT_EQ(ratnash_game_from_json(R"({"A": [[1, 0], [0, 1]], "B": [[1, 0], [0, 1]]})", &g),
            RATNASH_OK);
  ratnash_report* r = nullptr;
  EXPECT_EQ(ratnash_verify(g, d, nullptr, &r), RATNASH_DIMENSION_MISMATCH);
  EXPECT_FALSE(std::string(ratnash_last_error()).empty());
  int count = -1;
  ASSERT_EQ(ratnash_strict_pure_count(g, nullptr, &count), RATNASH_OK);
  EXPECT_EQ(count, 2);
  ratnash_game_free(g);
  ratnash_dataset_free(d);
}

TEST(CApi, LowerBounds) {
  ratnash_dataset* d = nullptr;
  ratnash_game* w = nullptr;
  int claim = -1;
  ASSERT_EQ(ratnash_lowerbound("game-rank", 4, &d, &w, &claim), RATNASH_OK);
  EXPECT_EQ(claim, 2);
  ASSERT_NE(w, nullptr);
  int holds = 0;
  char* detail = nullptr;
  ASSERT_EQ(ratnash_lowerbound_check("game-rank", 4, w, nullptr, &holds, &detail),
            RATNASH_OK);
  EXPECT_EQ(holds, 1);
  EXPECT_NE(Take(detail).find("game_rank"), std::string::npos);
  ratnash_game_free(w);
  ratnash_dataset_free(d);

  w = reinterpret_cast<ratnash_game*>(1);
  ASSERT_EQ(ratnash_lowerbound("no-pure-ne", 0, &d, &w, nullptr), RATNASH_OK);
  EXPECT_EQ(w, nullptr);
  ratnash_dataset_free(d);
  EXPECT_EQ(ratnash_lowerbound("bogus", 3, &d, nullptr, nullptr), RATNASH_INVALID_ARGUMENT);
  EXPECT_EQ(ratnash_lowerbound("uniform-nested", 1, &d, nullptr, nullptr),
            RATNASH_INVALID_ARGUMENT);
}

TEST(CApi, SweepIsDeterministic) {
  ratnash_sweep_config c = ratnash_default_sweep_config();
  c.n_min = 3;
  c.n_max = 4;
  c.cases_per_n = 2;
  c.timing = 0;
  c.methods = "lowdim,chromatic";
  char* a = nullptr;
  char* b = nullptr;
  ASSERT_EQ(ratnash_sweep(&c, &a), RATNASH_OK);
  ASSERT_EQ(ratnash_sweep(&c, &b), RATNASH_OK);
  const std::string sa = Take(a);
  EXPECT_EQ(sa, Take(b));
  EXPECT_EQ(sa.rfind("n,m,method,bound,rank_A,rank_B,game_rank,pass,wall_ms\n", 0), 0u);
  c.methods = "lowdim,nope";
  char* bad = nullptr;
  EXPECT_EQ(ratnash_sweep(&c, &bad), RATNASH_INVALID_ARGUMENT);
  EXPECT_EQ(bad, nullptr);
}

}  // namespace
