#include "flagcodes/flagcodes.h"

#include <cstring>
#include <fstream>
#include <sstream>

#include "ops.hpp"

using namespace flagcodes;

struct fc_document {
    Document doc;
};

namespace {

thread_local std::string last_error_code = "None";
thread_local std::string last_error_message;

fc_status status_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::ParseError:
        return FC_ERR_PARSE;
    case ErrorCode::TooLarge:
        return FC_ERR_TOO_LARGE;
    case ErrorCode::UnknownFixture:
        return FC_ERR_UNKNOWN_FIXTURE;
    case ErrorCode::Infeasible:
        return FC_ERR_INFEASIBLE;
    case ErrorCode::Internal:
        return FC_ERR_INTERNAL;
    default:
        return FC_ERR_VALIDATION;
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

fc_status set_error(const char* code, const std::string& message, fc_status status) {
    last_error_code = code;
    last_error_message = message;
    return status;
}

// Runs `body`, translating exceptions into status codes + the thread-local
// error object.
template <typename Fn>
fc_status guarded(Fn&& body) {
    try {
        body();
        return FC_OK;
    } catch (const Error& err) {
        return set_error(error_code_name(err.code()), err.what(), status_for(err.code()));
    } catch (const std::exception& err) {
        return set_error("Internal", err.what(), FC_ERR_INTERNAL);
    }
}

SearchOptions search_options(const fc_search_options* options) {
    SearchOptions out;
    if (options) {
        out.semilinear = options->semilinear != 0;
        if (options->max_candidates) out.max_candidates = options->max_candidates;
    }
    return out;
}

fc_status run_op(const fc_document* doc, char** result_json, Json (*op)(const Document&)) {
    if (!doc || !result_json)
        return set_error("BadArgument", "null argument", FC_ERR_BAD_ARGUMENT);
    return guarded([&] { *result_json = copy_string(emit_json(op(doc->doc))); });
}

} // namespace

extern "C" {

const char* fc_status_name(fc_status status) {
    switch (status) {
    case FC_OK: return "ok";
    case FC_ERR_PARSE: return "parse-error";
    case FC_ERR_VALIDATION: return "validation-error";
    case FC_ERR_TOO_LARGE: return "too-large";
    case FC_ERR_UNKNOWN_FIXTURE: return "unknown-fixture";
    case FC_ERR_INFEASIBLE: return "infeasible";
    case FC_ERR_BAD_ARGUMENT: return "bad-argument";
    case FC_ERR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

fc_status fc_last_error(char** json_out) {
    if (!json_out) return FC_ERR_BAD_ARGUMENT;
    Json error{{"error", Json{{"code", last_error_code}, {"message", last_error_message}}}};
    *json_out = copy_string(emit_json(error));
    return FC_OK;
}

fc_status fc_document_parse(const char* json_text, fc_document** out) {
    if (!json_text || !out)
        return set_error("BadArgument", "null argument", FC_ERR_BAD_ARGUMENT);
    return guarded([&] { *out = new fc_document{parse_document(json_text)}; });
}

fc_status fc_document_read_file(const char* path, fc_document** out) {
    if (!path || !out) return set_error("BadArgument", "null argument", FC_ERR_BAD_ARGUMENT);
    return guarded([&] {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            fail(ErrorCode::ParseError, std::string("cannot open file \"") + path + "\"");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        *out = new fc_document{parse_document(buffer.str())};
    });
}

fc_status fc_document_emit(const fc_document* doc, char** json_out) {
    if (!doc || !json_out) return set_error("BadArgument", "null argument", FC_ERR_BAD_ARGUMENT);
    return guarded([&] { *json_out = copy_string(emit_document(doc->doc)); });
}

void fc_document_free(fc_document* doc) { delete doc; }

void fc_string_free(char* s) { std::free(s); }

fc_status fc_op_distance(const fc_document* doc, char** result_json) {
    return run_op(doc, result_json, op_distance);
}

fc_status fc_op_projected(const fc_document* doc, char** result_json) {
    return run_op(doc, result_json, op_projected);
}

fc_status fc_op_check_genset(const fc_document* doc, char** result_json) {
    return run_op(doc, result_json, op_check_genset);
}

fc_status fc_op_sic_closure(const fc_document* doc, char** result_json) {
    return run_op(doc, result_json, op_sic_closure);
}

fc_status fc_op_check_sic(const fc_document* doc, char** result_json) {
    return run_op(doc, result_json, op_check_sic);
}

fc_status fc_op_check_determined(const fc_document* doc, char** result_json) {
    return run_op(doc, result_json, op_check_determined);
}

fc_status fc_op_classify(const fc_document* doc, char** result_json) {
    return run_op(doc, result_json, op_classify);
}

fc_status fc_op_odfc_check(const fc_document* doc, char** result_json) {
    return run_op(doc, result_json, op_odfc_check);
}

fc_status fc_op_aut(const fc_document* doc, const fc_search_options* options,
                    char** result_json) {
    if (!doc || !result_json)
        return set_error("BadArgument", "null argument", FC_ERR_BAD_ARGUMENT);
    return guarded([&] {
        AutOptions aut_options;
        aut_options.search = search_options(options);
        if (options && options->max_elements) aut_options.max_elements = options->max_elements;
        *result_json = copy_string(emit_json(op_aut(doc->doc, aut_options)));
    });
}

fc_status fc_op_equiv(const fc_document* doc, const fc_document* other,
                      const fc_search_options* options, char** result_json) {
    if (!doc || !other || !result_json)
        return set_error("BadArgument", "null argument", FC_ERR_BAD_ARGUMENT);
    return guarded([&] {
        *result_json =
            copy_string(emit_json(op_equiv(doc->doc, other->doc, search_options(options))));
    });
}

fc_status fc_random_flagcode(const fc_random_params* params, fc_document** out) {
    if (!params || !out || (!params->type_dims && params->type_len))
        return set_error("BadArgument", "null argument", FC_ERR_BAD_ARGUMENT);
    return guarded([&] {
        auto [p, e] = factor_prime_power(params->q);
        AmbientSpace ambient(FieldCtx::create(p, e), params->n);
        std::vector<size_t> dims(params->type_dims, params->type_dims + params->type_len);
        RandomProfile profile =
            params->profile ? parse_profile(params->profile) : RandomProfile::Generic;
        *out = new fc_document{make_document(
            random_flagcode(params->seed, ambient, dims, params->size, profile))};
    });
}

fc_status fc_fixture(const char* name, unsigned q, fc_document** out) {
    if (!name || !out) return set_error("BadArgument", "null argument", FC_ERR_BAD_ARGUMENT);
    return guarded([&] { *out = new fc_document{fixture(name, q)}; });
}

fc_status fc_fixture_names(char** json_out) {
    if (!json_out) return set_error("BadArgument", "null argument", FC_ERR_BAD_ARGUMENT);
    return guarded([&] {
        Json names = Json::array();
        for (const std::string& name : fixture_names()) names.push_back(name);
        *json_out = copy_string(emit_json(names));
    });
}

} // extern "C"
