/* C interface to the flag-code toolkit.
 *
 * All functions return fc_status; FC_OK means success. Documents are opaque
 * handles created by the parse/read/generate functions and released with
 * fc_document_free. Result strings are heap-allocated JSON owned by the
 * caller and released with fc_string_free. On failure the thread-local
 * error object is set and can be fetched with fc_last_error.
 */
#ifndef FLAGCODES_H
#define FLAGCODES_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FC_API __declspec(dllexport)
#else
#define FC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fc_status {
    FC_OK = 0,
    FC_ERR_PARSE = 1,      /* malformed input or invalid document */
    FC_ERR_VALIDATION = 2, /* domain preconditions violated */
    FC_ERR_TOO_LARGE = 3,  /* enumeration budget exceeded */
    FC_ERR_UNKNOWN_FIXTURE = 4,
    FC_ERR_INFEASIBLE = 5, /* retry budget exhausted in generation */
    FC_ERR_BAD_ARGUMENT = 6,
    FC_ERR_INTERNAL = 7,
} fc_status;

/* Opaque parsed document: a constant dimension code, a flag code, or a
 * code product together with its field and ambient dimension. */
typedef struct fc_document fc_document;

typedef struct fc_search_options {
    int semilinear;          /* 0: GL_n scan, 1: GammaL_n scan */
    uint64_t max_candidates; /* 0 selects the default budget (1 << 26) */
    size_t max_elements;     /* aut: list elements only up to this count;
                                0 selects the default (512) */
} fc_search_options;

typedef struct fc_random_params {
    uint64_t seed;
    unsigned q;
    unsigned n;
    const unsigned* type_dims;
    size_t type_len;
    size_t size;
    const char* profile; /* "generic" | "disjoint" | "odfc-attempt"; NULL = generic */
} fc_random_params;

FC_API const char* fc_status_name(fc_status status);

/* Last error on this thread as {"error":{"code":...,"message":...}}. */
FC_API fc_status fc_last_error(char** json_out);

FC_API fc_status fc_document_parse(const char* json_text, fc_document** out);
FC_API fc_status fc_document_read_file(const char* path, fc_document** out);
/* Canonical emission: fixed key order, sorted codewords, two-space indent. */
FC_API fc_status fc_document_emit(const fc_document* doc, char** json_out);
FC_API void fc_document_free(fc_document* doc);
FC_API void fc_string_free(char* s);

/* Subcommand-shaped operations; each returns a JSON result object. */
FC_API fc_status fc_op_distance(const fc_document* doc, char** result_json);
FC_API fc_status fc_op_projected(const fc_document* doc, char** result_json);
FC_API fc_status fc_op_check_genset(const fc_document* doc, char** result_json);
FC_API fc_status fc_op_sic_closure(const fc_document* doc, char** result_json);
FC_API fc_status fc_op_check_sic(const fc_document* doc, char** result_json);
FC_API fc_status fc_op_check_determined(const fc_document* doc, char** result_json);
FC_API fc_status fc_op_classify(const fc_document* doc, char** result_json);
FC_API fc_status fc_op_odfc_check(const fc_document* doc, char** result_json);
FC_API fc_status fc_op_aut(const fc_document* doc, const fc_search_options* options,
                           char** result_json);
FC_API fc_status fc_op_equiv(const fc_document* doc, const fc_document* other,
                             const fc_search_options* options, char** result_json);

/* Deterministic generation: identical parameters produce identical codes. */
FC_API fc_status fc_random_flagcode(const fc_random_params* params, fc_document** out);

/* Built-in examples; q = 0 selects the fixture's default field. */
FC_API fc_status fc_fixture(const char* name, unsigned q, fc_document** out);
FC_API fc_status fc_fixture_names(char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* FLAGCODES_H */
