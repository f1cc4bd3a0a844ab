#ifndef FIXLAB_FIXLAB_H
#define FIXLAB_FIXLAB_H

/* C interface to the fixlab library. Handles are opaque; every fallible call
 * returns a fixlab_status and leaves a message in fixlab_last_error(). Strings
 * returned through char** out-parameters are released with fixlab_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(FIXLAB_BUILDING_LIBRARY)
#define FIXLAB_API __attribute__((visibility("default")))
#else
#define FIXLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fixlab_status {
  FIXLAB_OK = 0,
  FIXLAB_USAGE = 1,        /* bad argument or unknown claim id */
  FIXLAB_PARSE = 2,        /* malformed instance file */
  FIXLAB_IO = 3,           /* file could not be read or written */
  FIXLAB_CAP = 4,          /* a size cap was exceeded */
  FIXLAB_PRECONDITION = 5, /* input violates an operation's precondition */
  FIXLAB_INTERNAL = 6      /* invariant violation or unexpected error */
} fixlab_status;

typedef enum fixlab_finder {
  FIXLAB_FINDER_AUTO = 0, /* abelian finder when N is abelian, else nilpotent */
  FIXLAB_FINDER_ABELIAN = 1,
  FIXLAB_FINDER_NILPOTENT = 2
} fixlab_finder;

typedef struct fixlab_instance fixlab_instance;
typedef struct fixlab_report fixlab_report;

typedef struct fixlab_verify_options {
  size_t max_order; /* 0 selects the claim default */
  size_t jobs;      /* 0 selects the hardware concurrency */
  uint64_t seed;
} fixlab_verify_options;

FIXLAB_API void fixlab_verify_options_init(fixlab_verify_options* options);

/* Message for the last failed call on this thread; empty after success. */
FIXLAB_API const char* fixlab_last_error(void);
FIXLAB_API const char* fixlab_status_name(fixlab_status status);
FIXLAB_API void fixlab_string_free(char* s);

FIXLAB_API size_t fixlab_claim_count(void);
/* NULL when index is out of range. */
FIXLAB_API const char* fixlab_claim_id(size_t index);

FIXLAB_API fixlab_status fixlab_verify(const char* claim, const fixlab_verify_options* options,
                                       fixlab_report** out);
FIXLAB_API fixlab_status fixlab_search_ls(const fixlab_verify_options* options, fixlab_report** out);
FIXLAB_API int fixlab_report_passed(const fixlab_report* report);
FIXLAB_API size_t fixlab_report_failure_count(const fixlab_report* report);
FIXLAB_API size_t fixlab_report_find_count(const fixlab_report* report);
FIXLAB_API double fixlab_report_wall_seconds(const fixlab_report* report);
FIXLAB_API fixlab_status fixlab_report_to_json(const fixlab_report* report, int include_timing, char** out);
FIXLAB_API fixlab_status fixlab_report_save(const fixlab_report* report, const char* path, int include_timing);
FIXLAB_API void fixlab_report_free(fixlab_report* report);

FIXLAB_API fixlab_status fixlab_instance_load(const char* path, fixlab_instance** out);
FIXLAB_API fixlab_status fixlab_instance_parse(const char* text, fixlab_instance** out);
FIXLAB_API fixlab_status fixlab_instance_save(const fixlab_instance* instance, const char* path);
FIXLAB_API fixlab_status fixlab_instance_to_json(const fixlab_instance* instance, char** out);
/* Owned by the handle. */
FIXLAB_API const char* fixlab_instance_id(const fixlab_instance* instance);
FIXLAB_API void fixlab_instance_free(fixlab_instance* instance);

/* Z1 and H1(J, N) with class representatives and their complements. */
FIXLAB_API fixlab_status fixlab_h1_json(const fixlab_instance* instance, char** out);
/* Complements of N with conjugacy and local-conjugacy classes. */
FIXLAB_API fixlab_status fixlab_complements_json(const fixlab_instance* instance, char** out);
/* Runs a fixed-point finder on the instance's attached action. *found is set
 * to 1 when a verified J-fixed point was returned. */
FIXLAB_API fixlab_status fixlab_fixpoint_json(const fixlab_instance* instance, fixlab_finder mode, char** out,
                                              int* found);

/* Writes every corpus instance with |G| <= max_order into dir as <id>.json
 * plus an index.json manifest. */
FIXLAB_API fixlab_status fixlab_corpus_write(size_t max_order, uint64_t seed, const char* dir, size_t* written);

#ifdef __cplusplus
}
#endif

#endif
