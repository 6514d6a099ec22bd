/* ffgroup — finite-field matrix-group toolkit, C interface.
 *
 * Opaque handles plus integer status codes. Every function that can fail
 * returns an ffg_status; the owning context keeps the message of the last
 * failed call. Strings returned through char** are heap-allocated and must be
 * released with ffg_string_free; reports with ffg_report_free.
 */

#ifndef FFGROUP_FFGROUP_H
#define FFGROUP_FFGROUP_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FFG_API
#elif defined(FFG_BUILDING_SHARED)
#define FFG_API __attribute__((visibility("default")))
#else
#define FFG_API
#endif

typedef struct ffg_context ffg_context;
typedef struct ffg_report ffg_report;

typedef enum ffg_status {
    FFG_OK = 0,
    FFG_ERR_INVALID_ARGUMENT = 1, /* bad parameters: non-prime-power q, d not dividing n, ... */
    FFG_ERR_PARSE = 2,            /* malformed polynomial / matrix / generator-file text */
    FFG_ERR_BUDGET = 3,           /* point budget exceeded or scan too large */
    FFG_ERR_DOMAIN = 4,           /* singular matrix, division by zero, mixed fields, ... */
    FFG_ERR_INTERNAL = 5
} ffg_status;

FFG_API const char* ffg_version(void);

/* ---- context: budgets and worker count ---- */

FFG_API ffg_context* ffg_context_new(void);
FFG_API void ffg_context_free(ffg_context* ctx);

FFG_API ffg_status ffg_context_set_point_budget(ffg_context* ctx, uint64_t budget);
FFG_API ffg_status ffg_context_set_scan_budget(ffg_context* ctx, uint64_t budget);
FFG_API ffg_status ffg_context_set_workers(ffg_context* ctx, uint32_t workers);

/* Message of the most recent failed call on this context ("" if none). */
FFG_API const char* ffg_context_last_error(const ffg_context* ctx);

/* ---- field descriptors ---- */

/* Parses "p^k", a plain prime power, or a prime; outputs may be NULL. */
FFG_API ffg_status ffg_parse_prime_power(ffg_context* ctx, const char* text, uint64_t* q_out,
                                         uint64_t* p_out, uint32_t* k_out);

/* ---- verification harnesses ---- */

FFG_API ffg_status ffg_verify_main(ffg_context* ctx, uint64_t q, uint32_t n, ffg_report** out);
FFG_API ffg_status ffg_verify_degos(ffg_context* ctx, uint64_t p, uint32_t n, ffg_report** out);
FFG_API ffg_status ffg_verify_singer_lemma(ffg_context* ctx, uint64_t q, uint32_t n,
                                           ffg_report** out);
FFG_API ffg_status ffg_verify_fixed_points(ffg_context* ctx, uint64_t q, uint32_t a, uint32_t d,
                                           ffg_report** out);
FFG_API ffg_status ffg_verify_two_companion(ffg_context* ctx, uint64_t q, uint32_t n,
                                            ffg_report** out);
FFG_API ffg_status ffg_verify_unique_ext(ffg_context* ctx, uint64_t q, uint32_t n, uint32_t d,
                                         ffg_report** out);
FFG_API ffg_status ffg_verify_kantor(ffg_context* ctx, uint64_t q, uint32_t n, ffg_report** out);

/* ---- reports ---- */

FFG_API int ffg_report_passed(const ffg_report* rep);     /* 1 = no failures, no budget hit */
FFG_API int ffg_report_budget_hit(const ffg_report* rep);
FFG_API uint64_t ffg_report_failure_count(const ffg_report* rep);
FFG_API ffg_status ffg_report_json(const ffg_report* rep, char** out);
FFG_API ffg_status ffg_report_csv_row(const ffg_report* rep, char** out);
FFG_API ffg_status ffg_report_text(const ffg_report* rep, char** out);
FFG_API const char* ffg_report_csv_header(void);
FFG_API void ffg_report_free(ffg_report* rep);

/* ---- object listings and order computation ---- */

/* Newline-separated polynomial text lines ("1,1,1" = 1 + X + X^2). */
FFG_API ffg_status ffg_list_primitive(ffg_context* ctx, uint64_t q, uint32_t n, char** out);
FFG_API ffg_status ffg_list_nonzero_const(ffg_context* ctx, uint64_t q, uint32_t n, char** out);

/* Exact order of the group generated by the n x n matrices in generator-file
 * text (blocks of n rows, blank-line separated, '#' comments). Decimal string. */
FFG_API ffg_status ffg_order_from_generators(ffg_context* ctx, uint64_t q, uint32_t n,
                                             const char* file_text, char** out);

/* |GL_n(q)| as a decimal string. */
FFG_API ffg_status ffg_gl_order(ffg_context* ctx, uint64_t q, uint32_t n, char** out);

FFG_API void ffg_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FFGROUP_FFGROUP_H */
