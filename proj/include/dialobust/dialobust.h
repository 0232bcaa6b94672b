//
// Copyright 2026 The Dialobust Authors
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
//

#ifndef DIALOBUST_DIALOBUST_H_
#define DIALOBUST_DIALOBUST_H_

// C interface of the dialobust toolkit.
//
// Objects are opaque handles created by the library and released with the
// matching *_free function. Strings returned through `char**` out-parameters
// are NUL-terminated, owned by the caller and released with
// dlb_string_free(). Every fallible function returns a dlb_status; on
// failure dlb_last_error() describes the problem. Error state is kept per
// thread. Handles may be shared between threads for reading; a handle must
// not be freed while another thread uses it.

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(DLB_BUILDING_LIBRARY)
#define DLB_API __declspec(dllexport)
#else
#define DLB_API __declspec(dllimport)
#endif
#else
#define DLB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

// Status codes double as process exit codes of the command-line tool.
typedef enum dlb_status {
  DLB_OK = 0,
  DLB_ERR_IO = 2,        // unreadable or unwritable files
  DLB_ERR_CONFIG = 3,    // invalid configuration or argument
  DLB_ERR_DATA = 4,      // malformed or inconsistent input data
  DLB_ERR_INTERNAL = 5,  // unexpected failure (e.g. out of memory)
} dlb_status;

typedef enum dlb_format {
  DLB_FORMAT_BABI = 0,
  DLB_FORMAT_JSONL = 1,
} dlb_format;

typedef enum dlb_report_format {
  DLB_REPORT_JSON = 0,
  DLB_REPORT_TEXT = 1,
} dlb_report_format;

typedef enum dlb_clean_mode {
  // Removes edit tokens, reparanda and interregna according to the tags and
  // drops the tags.
  DLB_CLEAN_TAGS = 0,
  // Undoes every recorded augmentation, including inserted turns.
  DLB_CLEAN_STRIP = 1,
} dlb_clean_mode;

typedef enum dlb_ranker_target {
  DLB_RANKER_LENGTH = 0,
  DLB_RANKER_RATING = 1,
} dlb_ranker_target;

typedef struct dlb_corpus dlb_corpus;
typedef struct dlb_config dlb_config;

// Library version, e.g. "0.1.0". Static storage.
DLB_API const char* dlb_version(void);

// Message of the last failure on the calling thread ("" if none). Valid
// until the next library call on the same thread.
DLB_API const char* dlb_last_error(void);
// Machine-readable kind of the last failure, e.g. "MalformedLine".
DLB_API const char* dlb_last_error_kind(void);

DLB_API void dlb_string_free(char* str);

// ---------------------------------------------------------------------------
// Corpora.

DLB_API dlb_status dlb_corpus_parse(const char* text, size_t length,
                                    dlb_format format, dlb_corpus** out);
DLB_API dlb_status dlb_corpus_write(const dlb_corpus* corpus,
                                    dlb_format format, char** out,
                                    size_t* out_length);
DLB_API void dlb_corpus_free(dlb_corpus* corpus);

DLB_API size_t dlb_corpus_dialogue_count(const dlb_corpus* corpus);
DLB_API size_t dlb_corpus_turn_count(const dlb_corpus* corpus);

// ---------------------------------------------------------------------------
// Augmentation configuration.

// Built-in defaults for every section.
DLB_API dlb_status dlb_config_default(dlb_config** out);
// JSON config; "<name>_file" entries resolve against `base_dir` (may be
// NULL for the working directory).
DLB_API dlb_status dlb_config_parse(const char* json, size_t length,
                                    const char* base_dir, dlb_config** out);
DLB_API void dlb_config_free(dlb_config* config);

// ---------------------------------------------------------------------------
// Augmentation pipelines. Results depend only on the input, the config and
// `seed`; `jobs` (0 = hardware concurrency) only changes speed.

DLB_API dlb_status dlb_augment_disfluency(const dlb_corpus* corpus,
                                          const dlb_config* config,
                                          uint64_t seed, unsigned jobs,
                                          dlb_corpus** out);
DLB_API dlb_status dlb_augment_ood(const dlb_corpus* corpus,
                                   const dlb_config* config, uint64_t seed,
                                   unsigned jobs, dlb_corpus** out);
// Noise is drawn from the vocabulary of `corpus`.
DLB_API dlb_status dlb_turn_dropout(const dlb_corpus* corpus,
                                    const dlb_config* config, uint64_t seed,
                                    unsigned jobs, dlb_corpus** out);
// `warnings` (may be NULL) receives newline-separated notes on skipped
// dialogues, or "" when there are none.
DLB_API dlb_status dlb_counterfeit(const dlb_corpus* corpus,
                                   const dlb_config* config, uint64_t seed,
                                   unsigned jobs, dlb_corpus** out,
                                   char** warnings);

// Tags the user turns with the rule-based repetition/filler baseline.
DLB_API dlb_status dlb_tag_baseline(const dlb_corpus* corpus,
                                    dlb_corpus** out);

DLB_API dlb_status dlb_clean(const dlb_corpus* corpus, dlb_clean_mode mode,
                             dlb_corpus** out);

// ---------------------------------------------------------------------------
// Inspection.

DLB_API dlb_status dlb_stats(const dlb_corpus* corpus,
                             dlb_report_format format, char** out);

// Checks the tag sequence of every tagged turn. `out` receives one line per
// violation ("line L: dialogue D turn T token P: description"), where L is
// the input line the dialogue started on when the corpus was parsed.
DLB_API dlb_status dlb_validate(const dlb_corpus* corpus, char** out,
                                size_t* violation_count);

// ---------------------------------------------------------------------------
// Evaluation. Reports are rendered as a JSON array of
// {"name","value","support","extras"} objects or as an aligned table.
//
// Metrics over a gold and a predicted corpus of identical shape:
//   "disfluency"   F_e, F_rm and F_rps over tagged gold user turns
//   "accuracy"     per-utterance accuracy of system actions
//   "api-call"     accuracy of each dialogue's final api_call
//   "ood-f1"       F1 with `fallback_action` as the positive class
// `fallback_action` may be NULL for "FALLBACK". A non-zero
// `interregnum_in_structure` counts interregnum tokens towards F_rps.
DLB_API dlb_status dlb_eval(const dlb_corpus* gold, const dlb_corpus* pred,
                            const char* metric, const char* fallback_action,
                            int interregnum_in_structure,
                            dlb_report_format format, char** out);

// Precision@k over JSON lines of
// {"context_id": str, "candidates": [{"score": num, "relevant": bool}, ...]}.
DLB_API dlb_status dlb_precision_at_k(const char* tuples_jsonl, size_t length,
                                      int k, dlb_report_format format,
                                      char** out);

// weights[i] = 1 / counts[i]^gamma.
DLB_API dlb_status dlb_class_weights(const int64_t* counts, size_t n,
                                     double gamma, double* weights);

DLB_API dlb_status dlb_pearson(const double* xs, const double* ys, size_t n,
                               double* out);

// ---------------------------------------------------------------------------
// Dataset construction.

// Drops dialogues with fewer than `min_turns` turns or at least the
// `length_percentile`-th percentile (nearest rank) of turn counts.
DLB_API dlb_status dlb_filter_outliers(const dlb_corpus* corpus,
                                       size_t min_turns,
                                       double length_percentile,
                                       dlb_corpus** out);

// Balanced (context, response) pairs as JSON lines.
DLB_API dlb_status dlb_ranker_pairs(const dlb_corpus* corpus, double lower,
                                    double upper, dlb_ranker_target target,
                                    uint64_t seed, char** out);

// Lowercase hex SHA-256, used for run-manifest digests.
DLB_API dlb_status dlb_sha256_hex(const void* data, size_t length,
                                  char** out);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // DIALOBUST_DIALOBUST_H_
