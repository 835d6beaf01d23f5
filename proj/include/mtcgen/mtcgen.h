// Copyright 2026 The mtcgen Authors
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

#ifndef MTCGEN_MTCGEN_H_
#define MTCGEN_MTCGEN_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MTCGEN_API __declspec(dllexport)
#else
#define MTCGEN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mtcgen_status {
  MTCGEN_OK = 0,
  MTCGEN_ERR_INVALID_ARGUMENT = 1,
  MTCGEN_ERR_IO = 2,
  MTCGEN_ERR_CORPUS = 3,
  MTCGEN_ERR_CONFIG = 4,
  MTCGEN_ERR_UNKNOWN_METHOD = 5,
  MTCGEN_ERR_PROVIDER_UNAVAILABLE = 6,
  MTCGEN_ERR_FIXTURE_MISS = 7,
  MTCGEN_ERR_NOT_EXTRACTABLE = 8,
  MTCGEN_ERR_NOT_AN_ASSERTION = 9,
  MTCGEN_ERR_INTERNAL = 10,
  /* The run finished but some pair recorded a failure. Output is valid. */
  MTCGEN_PARTIAL = 11
} mtcgen_status;

/* A loaded, type-checked corpus. */
typedef struct mtcgen_corpus mtcgen_corpus;

/* A validated pipeline configuration. */
typedef struct mtcgen_config mtcgen_config;

MTCGEN_API const char* mtcgen_version(void);

/* Message of the last failed call on this thread; never NULL. */
MTCGEN_API const char* mtcgen_last_error(void);

MTCGEN_API const char* mtcgen_status_name(mtcgen_status status);

/* Strings returned through `char** out` are owned by the caller. */
MTCGEN_API void mtcgen_string_free(char* text);

MTCGEN_API mtcgen_status mtcgen_corpus_load(const char* path, mtcgen_corpus** out);
MTCGEN_API void mtcgen_corpus_free(mtcgen_corpus* corpus);

/* `targets_json` is a JSON array of method refs, or NULL for every method. */
MTCGEN_API mtcgen_status mtcgen_analyze(const mtcgen_corpus* corpus, const char* targets_json,
                                        char** out);
MTCGEN_API mtcgen_status mtcgen_facts(const mtcgen_corpus* corpus, const char* methods_json,
                                      char** out);
MTCGEN_API mtcgen_status mtcgen_mutate(const mtcgen_corpus* corpus, const char* target,
                                       const char* candidate, size_t cap, uint64_t seed,
                                       char** out);

/* `request_json`: {target, candidate, testPath, testSource, mutantCap?, seed?,
   aggregation?}. */
MTCGEN_API mtcgen_status mtcgen_validate(const mtcgen_corpus* corpus, const char* request_json,
                                         char** out);

/* Compares two skeleton JSON documents. */
MTCGEN_API mtcgen_status mtcgen_skeleton_compare(const char* generated_json,
                                                 const char* reference_json, char** out);

/* Compares a run report's retained MTCs with the corpus's own tests. */
MTCGEN_API mtcgen_status mtcgen_compare_reference(const mtcgen_corpus* corpus,
                                                  const char* report_json, char** out);

/* Relative paths in `config_json` resolve against `base_dir` (may be NULL). */
MTCGEN_API mtcgen_status mtcgen_config_parse(const char* config_json, const char* base_dir,
                                             mtcgen_config** out);
MTCGEN_API void mtcgen_config_free(mtcgen_config* config);
MTCGEN_API mtcgen_status mtcgen_config_to_json(const mtcgen_config* config, char** out);

/* Full pipeline; writes the output tree and returns the report. */
MTCGEN_API mtcgen_status mtcgen_run(const mtcgen_config* config, char** report);

/* Candidates only. */
MTCGEN_API mtcgen_status mtcgen_generate(const mtcgen_config* config, char** report);

/* Recomputes the metrics block of every task in a prior report. */
MTCGEN_API mtcgen_status mtcgen_report(const char* report_json, char** out);

#ifdef __cplusplus
}
#endif

#endif  // MTCGEN_MTCGEN_H_
