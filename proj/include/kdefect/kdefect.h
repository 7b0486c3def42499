/*
 * kdefect C API.
 *
 * All functions return a kd_status. On failure a message is available from
 * kd_last_error() until the next call on the same thread. Strings returned
 * through char** out-parameters are owned by the caller and released with
 * kd_string_free(). Handles are released with their *_free function;
 * passing NULL to a free function is a no-op.
 */
#ifndef KDEFECT_H
#define KDEFECT_H

#include <stdint.h>

#if defined(_WIN32)
#  define KD_API __declspec(dllexport)
#else
#  define KD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kd_status {
    KD_OK = 0,
    KD_ERR_INVALID_ARGUMENT = 1,
    KD_ERR_PARSE = 2,
    KD_ERR_CAP_EXCEEDED = 3,
    KD_ERR_TIMEOUT = 4,
    KD_ERR_IO = 5,
    KD_ERR_INTERNAL = 6
} kd_status;

typedef enum kd_format {
    KD_FORMAT_AUTO = 0,
    KD_FORMAT_JSON = 1,
    KD_FORMAT_TEXT = 2
} kd_format;

typedef enum kd_render {
    KD_RENDER_JSON = 0,
    KD_RENDER_TABLE = 1
} kd_render;

typedef enum kd_verdict {
    KD_HOLDS = 0,
    KD_VIOLATED = 1,
    KD_INFEASIBLE = 2,
    KD_TIMEOUT = 3
} kd_verdict;

typedef struct kd_hypergraph kd_hypergraph;
typedef struct kd_report kd_report;
typedef struct kd_scan kd_scan;

KD_API const char * kd_version(void);
KD_API const char * kd_last_error(void);
/* Line of the last parse error, 0 if none. */
KD_API int kd_last_error_line(void);
KD_API void kd_string_free(char * s);

/* hypergraphs */

KD_API kd_status kd_hypergraph_parse(const char * text, kd_format fmt, kd_hypergraph ** out);
/* params: {"family": "fns", "n": 11, "s": 3} and so on */
KD_API kd_status kd_hypergraph_generate(const char * params_json, kd_hypergraph ** out);
KD_API kd_status kd_hypergraph_serialize(const kd_hypergraph * h, kd_format fmt, char ** out);
KD_API int kd_hypergraph_order(const kd_hypergraph * h);
KD_API int kd_hypergraph_size(const kd_hypergraph * h);
/* s-stable part (almost = 0) or almost s-stable part (almost = 1) */
KD_API kd_status kd_hypergraph_stable_part(const kd_hypergraph * h, int s, int almost, kd_hypergraph ** out);
KD_API void kd_hypergraph_free(kd_hypergraph * h);

/* solvers */

typedef struct kd_solve_options {
    int r;
    int s;
    int equitable;
    /* cap on removed vertices for cd/ecd; negative means none */
    int max_removal;
    /* wall-clock budget; 0 or negative means none */
    int64_t time_limit_ms;
} kd_solve_options;

KD_API kd_solve_options kd_solve_options_default(void);

/*
 * invariant: "chi", "alpha", "nu", "cd", "ecd" or "kneser-chi".
 * Writes a JSON object {"invariant", "status", "value", "certificate", ...}.
 * A removal cap that is hit is reported with "status": "cap-exceeded" and a
 * lower bound, and still returns KD_OK.
 */
KD_API kd_status kd_solve(const kd_hypergraph * h, const char * invariant,
        const kd_solve_options * options, char ** out_json);

/* conjecture checks and theorem replays */

/* conjecture: "frick", "jafari" or "almost" */
KD_API kd_status kd_check(const kd_hypergraph * h, const char * conjecture, int r, int s,
        int64_t time_limit_ms, kd_report ** out);
/* params: flat JSON object of integers, e.g. {"n": 11, "s": 3} */
KD_API kd_status kd_verify(const char * theorem_id, const char * params_json,
        int64_t time_limit_ms, kd_report ** out);
/* JSON array of registered theorem ids */
KD_API kd_status kd_theorem_ids(char ** out_json);
KD_API kd_verdict kd_report_verdict(const kd_report * report);
KD_API kd_status kd_report_render(const kd_report * report, kd_render how, char ** out);
KD_API void kd_report_free(kd_report * report);

/* scans */

KD_API kd_status kd_scan_run(const char * spec_json, kd_scan ** out);
KD_API int kd_scan_total(const kd_scan * scan);
KD_API int kd_scan_violated(const kd_scan * scan);
KD_API int kd_scan_timeouts(const kd_scan * scan);
/* KD_RENDER_JSON gives JSON lines, summary first */
KD_API kd_status kd_scan_render(const kd_scan * scan, kd_render how, char ** out);
KD_API void kd_scan_free(kd_scan * scan);

/* SAT interop */

/* task: {"task": "colorable", "r": 3, "equitable": false} or {"task": "kneser", "r": 2, "t": 3} */
KD_API kd_status kd_export_cnf(const kd_hypergraph * h, const char * task_json,
        const char * cnf_path, const char * map_path);
/* valid is set to 1 when the decoded model is a correct certificate */
KD_API kd_status kd_check_model(const char * map_path, const char * model_path,
        int * valid, char ** detail_json);

#ifdef __cplusplus
}
#endif

#endif
