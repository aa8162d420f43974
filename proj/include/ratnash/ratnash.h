/* Copyright 2026 The ratnash Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libratnash.
 *
 * Every fallible call returns a ratnash_status. On failure the message for
 * the calling thread is available from ratnash_last_error() until the next
 * call on that thread. Strings returned through char** are owned by the
 * caller and released with ratnash_string_free(). Handles are released with
 * their matching *_free function; passing NULL to any *_free is a no-op.
 */

#ifndef RATNASH_RATNASH_H_
#define RATNASH_RATNASH_H_

#include <stdint.h>

#if defined(RATNASH_BUILDING_LIBRARY)
#define RATNASH_API __attribute__((visibility("default")))
#else
#define RATNASH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ratnash_status {
  RATNASH_OK = 0,
  RATNASH_INVALID_ARGUMENT = 1,
  RATNASH_PARSE_ERROR = 2,
  RATNASH_IO_ERROR = 3,
  RATNASH_DIMENSION_MISMATCH = 4,
  RATNASH_EMPTY_SUPPORT = 5,
  RATNASH_DUPLICATE_OBSERVATION = 6,
  RATNASH_NON_GENERIC_DATA = 7,
  RATNASH_DEPENDENT_COLUMNS = 8,
  RATNASH_SUPPORT_TOO_LARGE = 9,
  RATNASH_OVERLAPPING_SUPPORTS = 10,
  RATNASH_NOT_RATIONALIZABLE = 11,
  RATNASH_NUMERICAL_FAILURE = 12,
  RATNASH_INTERNAL_ERROR = 13
} ratnash_status;

typedef struct ratnash_tolerances {
  double tol_supp;
  double tol_norm;
  double tol_rank;
  double delta_min;
} ratnash_tolerances;

typedef struct ratnash_dataset ratnash_dataset;
typedef struct ratnash_game ratnash_game;
typedef struct ratnash_synthesis ratnash_synthesis;
typedef struct ratnash_report ratnash_report;

typedef struct ratnash_synthesis_info {
  const char* method; /* static string, do not free */
  int bound;
  int bound_a;
  int bound_b;
  int rank_a;
  int rank_b;
  int measure; /* dimension, support size, colour count or sigma */
} ratnash_synthesis_info;

typedef struct ratnash_report_info {
  int all_pass;
  int rank_a;
  int rank_b;
  int player_rank;
  int game_rank;
  int num_observations;
  double min_margin; /* +inf when every support is full */
} ratnash_report_info;

typedef struct ratnash_sweep_config {
  int n_min;
  int n_max;
  int cases_per_n;
  int max_support;
  uint64_t seed;
  int timing; /* 0 writes wall_ms as 0 */
  const char* methods; /* comma separated; NULL for all concrete methods */
  ratnash_tolerances tol;
} ratnash_sweep_config;

RATNASH_API ratnash_tolerances ratnash_default_tolerances(void);
RATNASH_API ratnash_sweep_config ratnash_default_sweep_config(void);
RATNASH_API const char* ratnash_status_name(ratnash_status status);
RATNASH_API const char* ratnash_last_error(void);
RATNASH_API void ratnash_string_free(char* s);
RATNASH_API const char* ratnash_version(void);

/* Data sets. tol may be NULL for defaults. */
RATNASH_API ratnash_status ratnash_dataset_from_json(
    const char* json, const ratnash_tolerances* tol, ratnash_dataset** out);
RATNASH_API ratnash_status ratnash_dataset_to_json(const ratnash_dataset* data,
                                                   char** out);
RATNASH_API int ratnash_dataset_n(const ratnash_dataset* data);
RATNASH_API int ratnash_dataset_size(const ratnash_dataset* data);
RATNASH_API void ratnash_dataset_free(ratnash_dataset* data);

/* Games. Extra JSON fields such as "meta" are ignored. */
RATNASH_API ratnash_status ratnash_game_from_json(const char* json,
                                                  ratnash_game** out);
RATNASH_API ratnash_status ratnash_game_to_json(const ratnash_game* game,
                                                char** out);
RATNASH_API int ratnash_game_n(const ratnash_game* game);
RATNASH_API void ratnash_game_free(ratnash_game* game);

/* Decides rationalizability. *rationalizable is 1 or 0 and *json holds
 * {"rationalizable", "delta_star", and "A"/"B" when rationalizable}. */
RATNASH_API ratnash_status ratnash_rationalize(const ratnash_dataset* data,
                                               const ratnash_tolerances* tol,
                                               int* rationalizable,
                                               double* delta_star, char** json);

/* The rationalization LP as text, one constraint per line. */
RATNASH_API ratnash_status ratnash_lp_dump(const ratnash_dataset* data,
                                           const ratnash_tolerances* tol,
                                           char** text);

/* method is one of lp, lowdim, support, chromatic, composite, auto. */
RATNASH_API ratnash_status ratnash_synthesize(const ratnash_dataset* data,
                                              const char* method,
                                              const ratnash_tolerances* tol,
                                              ratnash_synthesis** out);
RATNASH_API ratnash_status ratnash_synthesis_info_get(
    const ratnash_synthesis* s, ratnash_synthesis_info* info);
RATNASH_API ratnash_status ratnash_synthesis_game(const ratnash_synthesis* s,
                                                  ratnash_game** out);
RATNASH_API ratnash_status ratnash_synthesis_to_json(const ratnash_synthesis* s,
                                                     char** out);
RATNASH_API void ratnash_synthesis_free(ratnash_synthesis* s);

RATNASH_API ratnash_status ratnash_verify(const ratnash_game* game,
                                          const ratnash_dataset* data,
                                          const ratnash_tolerances* tol,
                                          ratnash_report** out);
RATNASH_API ratnash_status ratnash_report_info_get(const ratnash_report* r,
                                                   ratnash_report_info* info);
RATNASH_API ratnash_status ratnash_report_to_json(const ratnash_report* r,
                                                  char** out);
RATNASH_API void ratnash_report_free(ratnash_report* r);

/* Number of strict pure equilibria of the game. */
RATNASH_API ratnash_status ratnash_strict_pure_count(
    const ratnash_game* game, const ratnash_tolerances* tol, int* count);

/* Lower-bound data sets: "uniform-nested", "game-rank", "no-pure-ne".
 * witness may be NULL; otherwise it receives the witness game or NULL when
 * the case has none. claimed_bound may be NULL. */
RATNASH_API ratnash_status ratnash_lowerbound(const char* name, int n,
                                              ratnash_dataset** data,
                                              ratnash_game** witness,
                                              int* claimed_bound);

/* Checks the lower-bound claim of a case against a rationalizing game.
 * *holds is 1 or 0; detail may be NULL. */
RATNASH_API ratnash_status ratnash_lowerbound_check(
    const char* name, int n, const ratnash_game* game,
    const ratnash_tolerances* tol, int* holds, char** detail);

RATNASH_API ratnash_status ratnash_sweep(const ratnash_sweep_config* config,
                                         char** csv);

#ifdef __cplusplus
}
#endif

#endif /* RATNASH_RATNASH_H_ */
