#ifndef SINGH_SINGH_H
#define SINGH_SINGH_H

/* C interface to the Singh plot library. All handles are opaque; every
 * fallible call returns a singh_status and leaves a message retrievable
 * through singh_last_error() on the calling thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(SINGH_BUILDING_LIBRARY)
#define SINGH_API __attribute__((visibility("default")))
#else
#define SINGH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match the CLI exit codes. */
typedef enum singh_status {
  SINGH_OK = 0,
  SINGH_ERR_INVALID_ARGUMENT = 1,
  SINGH_ERR_PARSE = 2,
  SINGH_ERR_VALIDATION = 3,
  SINGH_ERR_RUNTIME = 4
} singh_status;

typedef enum singh_classification {
  SINGH_VALID = 0,
  SINGH_OVERCONFIDENT = 1,
  SINGH_CONSERVATIVE = 2,
  SINGH_FAVOURABLE = 3
} singh_classification;

enum {
  SINGH_OUTPUT_CSV = 1,
  SINGH_OUTPUT_SVG = 2,
  SINGH_OUTPUT_REPORT = 4
};

/* Which curve of a result to query. Precise results only have SINGH_CURVE_MAIN. */
typedef enum singh_curve_id {
  SINGH_CURVE_MAIN = 0,
  SINGH_CURVE_LOWER = 1,
  SINGH_CURVE_UPPER = 2
} singh_curve_id;

typedef struct singh_scenario singh_scenario;
typedef struct singh_result singh_result;

SINGH_API const char* singh_version(void);

/* Message of the last failed call on this thread; "" if none. */
SINGH_API const char* singh_last_error(void);

SINGH_API singh_status singh_scenario_parse(const char* text, size_t length, singh_scenario** out);
SINGH_API singh_status singh_scenario_load(const char* path, singh_scenario** out);
SINGH_API void singh_scenario_free(singh_scenario* scenario);

/* Overrides; each revalidates the scenario. */
SINGH_API singh_status singh_scenario_set_replicates(singh_scenario* scenario, uint64_t m);
SINGH_API singh_status singh_scenario_set_seed(singh_scenario* scenario, uint64_t seed);
SINGH_API singh_status singh_scenario_set_outputs(singh_scenario* scenario, unsigned outputs);

SINGH_API const char* singh_scenario_name(const singh_scenario* scenario);

/* Canonical document; valid until the scenario is modified or freed. */
SINGH_API const char* singh_scenario_document(singh_scenario* scenario);

/* workers = 0 uses every hardware thread. */
SINGH_API singh_status singh_scenario_evaluate(const singh_scenario* scenario, unsigned workers, singh_result** out);

/* Evaluates and writes the requested artifacts into out_dir. out may be NULL. */
SINGH_API singh_status singh_scenario_run(const singh_scenario* scenario, const char* out_dir, unsigned workers,
                                          singh_result** out);

SINGH_API void singh_result_free(singh_result* result);
SINGH_API int singh_result_is_band(const singh_result* result);
SINGH_API double singh_result_eval(const singh_result* result, singh_curve_id curve, double alpha);
SINGH_API uint64_t singh_result_replicates(const singh_result* result);
SINGH_API uint64_t singh_result_never_count(const singh_result* result, singh_curve_id curve);
SINGH_API singh_classification singh_result_classification(const singh_result* result);
SINGH_API int singh_result_valid(const singh_result* result);
SINGH_API double singh_result_max_deficit(const singh_result* result);
SINGH_API double singh_result_conservatism_area(const singh_result* result);
SINGH_API double singh_result_dkw_epsilon(const singh_result* result);

SINGH_API size_t singh_preset_count(void);
SINGH_API const char* singh_preset_name(size_t index);
SINGH_API const char* singh_preset_description(size_t index);

/* Called once per finished scenario of a preset. */
typedef void (*singh_preset_callback)(const char* scenario_name, const singh_result* result, void* user);

/* replicates = 0 and seed = NULL keep the preset's own values. */
SINGH_API singh_status singh_preset_run(const char* name, const char* out_dir, uint64_t replicates,
                                        const uint64_t* seed, unsigned workers, singh_preset_callback callback,
                                        void* user);

#ifdef __cplusplus
}
#endif

#endif
