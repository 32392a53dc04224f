// Copyright 2026 The benchagg Authors.
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

#ifndef BENCHAGG_BENCHAGG_H_
#define BENCHAGG_BENCHAGG_H_

/* C interface of libbenchagg.
 *
 * Documents cross the boundary as UTF-8 JSON text. Strings returned through
 * `char** out` are owned by the caller and released with ba_string_free.
 * On failure a function returns a non-zero ba_status, leaves *out untouched
 * and records a message retrievable with ba_last_error() on the same thread.
 */

#include <stddef.h>

#if defined(_WIN32)
#define BA_API __declspec(dllexport)
#elif defined(BENCHAGG_BUILDING_LIBRARY)
#define BA_API __attribute__((visibility("default")))
#else
#define BA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ba_status {
  BA_OK = 0,
  BA_ERR_INVALID_ARGUMENT = 1,
  BA_ERR_VALIDATION = 2,
  BA_ERR_CONSISTENCY = 3,
  BA_ERR_NOT_FOUND = 4,
  BA_ERR_CONFLICT = 5,
  BA_ERR_IO = 6,
  BA_ERR_PROTOCOL = 7,
  BA_ERR_TIMEOUT = 8,
  BA_ERR_UNSUPPORTED = 9,
  BA_ERR_INTERNAL = 10
} ba_status;

typedef struct ba_model ba_model;
typedef struct ba_store ba_store;

BA_API const char* ba_version(void);
BA_API const char* ba_status_name(ba_status status);
/* Message of the last failure on this thread; "" when none. Valid until the
 * next failing call on the same thread. */
BA_API const char* ba_last_error(void);
BA_API void ba_string_free(char* s);

/* Models. */
BA_API ba_status ba_model_load(const char* json, ba_model** out);
BA_API ba_status ba_model_load_file(const char* path, ba_model** out);
BA_API void ba_model_free(ba_model* model);
BA_API ba_status ba_model_to_json(const ba_model* model, char** out);
BA_API ba_status ba_model_describe(const ba_model* model, char** out);
/* Ranked report of the given profiles. reference: NULL, "worst" or "ideal";
 * format: "json" or "markdown". */
BA_API ba_status ba_model_evaluate(const ba_model* model, const char* profiles_json,
                                   const char* reference, const char* format, char** out);
/* Interval scores of one profile carrying [lo, hi] measurements. */
BA_API ba_status ba_model_evaluate_interval(const ba_model* model, const char* profile_json,
                                            char** out);
BA_API ba_status ba_model_explain(const ba_model* model, const char* profiles_json,
                                  const char* alternative, const char* reference,
                                  const char* format, char** out);
/* Replaces the parameters of node `node_id` with the ones derived from a
 * session document. */
BA_API ba_status ba_model_apply_session(ba_model* model, const char* node_id,
                                        const char* session_json);

/* Elicitation. ba_check_consistency never fails on a parseable session: the
 * violations (possibly none) are returned as a JSON array. */
BA_API ba_status ba_check_consistency(const char* session_json, char** out);
/* Parameters derived from a session: {"kind": "utility"|"capacity",
 * "parameters": {...}, "summary": {...}}. BA_ERR_CONSISTENCY lists the
 * violations in ba_last_error(). */
BA_API ba_status ba_elicit(const char* session_json, char** out);

/* Store. root NULL means $BENCHAGG_STORE, else ./benchagg-store. */
BA_API ba_status ba_store_open(const char* root, ba_store** out);
BA_API void ba_store_close(ba_store* store);
BA_API ba_status ba_store_root(const ba_store* store, char** out);
BA_API ba_status ba_store_ingest(ba_store* store, const char* document, char** out);
BA_API ba_status ba_store_records(const ba_store* store, char** out);
BA_API ba_status ba_store_put_model(ba_store* store, const char* name, const ba_model* model);
BA_API ba_status ba_store_get_model(const ba_store* store, const char* name, ba_model** out);
BA_API ba_status ba_store_report(const ba_store* store, const char* model_name,
                                 const char* reference, const char* format, char** out);
/* Same document as ba_store_report, for a model that need not be stored. */
BA_API ba_status ba_store_evaluate(const ba_store* store, const ba_model* model,
                                   const char* reference, const char* format, char** out);
/* Explanation with profiles built from the store's records. */
BA_API ba_status ba_store_explain(const ba_store* store, const ba_model* model,
                                  const char* alternative, const char* reference,
                                  const char* format, char** out);
/* One HTTP-equivalent request against the store, without a socket:
 * *status_out receives the HTTP status and *out the body. */
BA_API ba_status ba_store_request(ba_store* store, const char* method, const char* target,
                                  const char* body, int* status_out, char** out);

/* Serves the HTTP API until the process is stopped. on_ready, when not
 * NULL, receives the bound port (useful with port 0). */
BA_API ba_status ba_serve(ba_store* store, const char* host, int port,
                          void (*on_ready)(int port, void* ctx), void* ctx);

/* Benchmarks. Configuration documents are described in docs/schemas.md. */
BA_API ba_status ba_bench_run(const char* config_json, char** out);
BA_API ba_status ba_bench_qscore(const char* config_json, char** out);
BA_API ba_status ba_bench_solve(const char* problem_json, const char* solver_json, char** out);
BA_API ba_status ba_bench_generate(const char* instance_json, char** out);

/* Quantum simulation. */
BA_API ba_status ba_qsim_ideal(const char* request_json, char** out);
BA_API ba_status ba_qsim_score(const char* measured_json, const char* alternative,
                               char** out);

#ifdef __cplusplus
}
#endif

#endif /* BENCHAGG_BENCHAGG_H_ */
