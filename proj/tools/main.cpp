#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagcodes/flagcodes.h"

// Thin command-line front end over the shared-library C API: parse
// arguments, load documents, call one operation, print its JSON. Exit codes:
// 0 success, 2 validation/parse errors, 3 enumeration budget exceeded.

namespace {

int exit_code_for(fc_status status) {
    if (status == FC_OK) return 0;
    if (status == FC_ERR_TOO_LARGE) return 3;
    return 2;
}

void print_last_error() {
    char* error_json = nullptr;
    if (fc_last_error(&error_json) == FC_OK && error_json) {
        std::fputs(error_json, stderr);
        fc_string_free(error_json);
    }
}

struct DocumentHandle {
    fc_document* doc = nullptr;
    ~DocumentHandle() { fc_document_free(doc); }
};

struct StringHandle {
    char* text = nullptr;
    ~StringHandle() { fc_string_free(text); }
};

int emit_result(fc_status status, StringHandle& result) {
    if (status != FC_OK) {
        print_last_error();
        return exit_code_for(status);
    }
    std::fputs(result.text, stdout);
    return 0;
}

int load_document(const std::string& path, DocumentHandle& handle) {
    fc_status status = fc_document_read_file(path.c_str(), &handle.doc);
    if (status != FC_OK) {
        print_last_error();
        return exit_code_for(status);
    }
    return 0;
}

int fail_kind(const std::string& expected, const std::string& path) {
    nlohmann::ordered_json error{
        {"error",
         {{"code", "ParseError"},
          {"message", "expected a " + expected + " document: " + path}}}};
    std::fputs((error.dump(2) + "\n").c_str(), stderr);
    return 2;
}

bool document_kind_is(fc_document* doc, const std::string& kind) {
    StringHandle emitted;
    if (fc_document_emit(doc, &emitted.text) != FC_OK) return false;
    auto parsed = nlohmann::json::parse(emitted.text, nullptr, false);
    return parsed.is_object() && parsed.value("kind", "") == kind;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for constant dimension codes and flag codes over F_q"};
    app.require_subcommand(1);

    std::string path, path_b, mode = "linear", profile = "generic", fixture_name;
    bool expect_flag = false, expect_cdc = false, list_fixtures = false;
    uint64_t max_candidates = 0;
    size_t max_elements = 0;
    uint64_t seed = 0;
    unsigned q = 2, n = 0;
    size_t size = 0;
    std::vector<unsigned> type_dims;

    auto* distance = app.add_subcommand("distance", "Minimum distance and distance bound");
    distance->add_option("file", path)->required();
    distance->add_flag("--flag", expect_flag, "require a flagcode document");
    distance->add_flag("--cdc", expect_cdc, "require a cdc document");

    auto* projected = app.add_subcommand("projected", "Projected codes of a flag code");
    projected->add_option("file", path)->required();

    auto* check_genset =
        app.add_subcommand("check-genset", "Is the code product a generating set");
    check_genset->add_option("file", path)->required();

    auto* sic_closure_cmd =
        app.add_subcommand("sic-closure", "The unique SIC flag code of a generating set");
    sic_closure_cmd->add_option("file", path)->required();

    auto* check_sic = app.add_subcommand("check-sic", "Is the flag code SIC");
    check_sic->add_option("file", path)->required();

    auto* check_determined =
        app.add_subcommand("check-determined", "Is the flag code determined by its projected codes");
    check_determined->add_option("file", path)->required();

    auto* classify = app.add_subcommand("classify", "Full structural classification");
    classify->add_option("file", path)->required();

    auto* odfc = app.add_subcommand("odfc-check", "Optimum-distance check by both routes");
    odfc->add_option("file", path)->required();

    auto* aut = app.add_subcommand("aut", "Linear automorphism group");
    aut->add_option("file", path)->required();
    aut->add_option("--max-candidates", max_candidates, "enumeration budget");
    aut->add_option("--max-elements", max_elements, "list elements only up to this count");

    auto* saut = app.add_subcommand("saut", "Semilinear automorphism group");
    saut->add_option("file", path)->required();
    saut->add_option("--max-candidates", max_candidates, "enumeration budget");
    saut->add_option("--max-elements", max_elements, "list elements only up to this count");

    auto* equiv = app.add_subcommand("equiv", "Equivalence of two codes");
    equiv->add_option("file", path)->required();
    equiv->add_option("other", path_b)->required();
    equiv->add_option("--mode", mode)->check(CLI::IsMember({"linear", "semilinear"}));
    equiv->add_option("--max-candidates", max_candidates, "enumeration budget");

    auto* random_cmd = app.add_subcommand("random", "Seeded random flag code");
    random_cmd->add_option("--seed", seed)->required();
    random_cmd->add_option("--q", q, "field order");
    random_cmd->add_option("--n", n, "ambient dimension")->required();
    random_cmd->add_option("--type", type_dims, "type vector, e.g. --type 1,2")
        ->required()
        ->delimiter(',');
    random_cmd->add_option("--size", size, "number of flags")->required();
    random_cmd->add_option("--profile", profile)
        ->check(CLI::IsMember({"generic", "disjoint", "odfc-attempt"}));

    auto* fixtures_cmd = app.add_subcommand("fixtures", "Built-in paper examples");
    fixtures_cmd->add_option("name", fixture_name);
    fixtures_cmd->add_option("--q", q, "field order (0 = fixture default)");
    fixtures_cmd->add_flag("--list", list_fixtures, "list fixture names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        nlohmann::ordered_json error{
            {"error",
             {{"code", app.get_subcommands().empty() && argc > 1 ? "UnknownCommand" : "ParseError"},
              {"message", err.what()}}}};
        std::fputs((error.dump(2) + "\n").c_str(), stderr);
        return 2;
    }

    fc_search_options options{};
    options.max_candidates = max_candidates;
    options.max_elements = max_elements;

    StringHandle result;

    if (*random_cmd) {
        fc_random_params params{};
        params.seed = seed;
        params.q = q;
        params.n = n;
        params.type_dims = type_dims.data();
        params.type_len = type_dims.size();
        params.size = size;
        params.profile = profile.c_str();
        DocumentHandle doc;
        fc_status status = fc_random_flagcode(&params, &doc.doc);
        if (status != FC_OK) {
            print_last_error();
            return exit_code_for(status);
        }
        return emit_result(fc_document_emit(doc.doc, &result.text), result);
    }

    if (*fixtures_cmd) {
        if (list_fixtures || fixture_name.empty()) {
            return emit_result(fc_fixture_names(&result.text), result);
        }
        DocumentHandle doc;
        unsigned fixture_q = fixtures_cmd->count("--q") ? q : 0;
        fc_status status = fc_fixture(fixture_name.c_str(), fixture_q, &doc.doc);
        if (status != FC_OK) {
            print_last_error();
            return exit_code_for(status);
        }
        return emit_result(fc_document_emit(doc.doc, &result.text), result);
    }

    DocumentHandle doc;
    if (int code = load_document(path, doc); code != 0) return code;

    if (*distance) {
        if (expect_flag && !document_kind_is(doc.doc, "flagcode")) return fail_kind("flagcode", path);
        if (expect_cdc && !document_kind_is(doc.doc, "cdc")) return fail_kind("cdc", path);
        return emit_result(fc_op_distance(doc.doc, &result.text), result);
    }
    if (*projected) return emit_result(fc_op_projected(doc.doc, &result.text), result);
    if (*check_genset) return emit_result(fc_op_check_genset(doc.doc, &result.text), result);
    if (*sic_closure_cmd) return emit_result(fc_op_sic_closure(doc.doc, &result.text), result);
    if (*check_sic) return emit_result(fc_op_check_sic(doc.doc, &result.text), result);
    if (*check_determined)
        return emit_result(fc_op_check_determined(doc.doc, &result.text), result);
    if (*classify) return emit_result(fc_op_classify(doc.doc, &result.text), result);
    if (*odfc) return emit_result(fc_op_odfc_check(doc.doc, &result.text), result);
    if (*aut) return emit_result(fc_op_aut(doc.doc, &options, &result.text), result);
    if (*saut) {
        options.semilinear = 1;
        return emit_result(fc_op_aut(doc.doc, &options, &result.text), result);
    }
    if (*equiv) {
        DocumentHandle other;
        if (int code = load_document(path_b, other); code != 0) return code;
        options.semilinear = mode == "semilinear" ? 1 : 0;
        return emit_result(fc_op_equiv(doc.doc, other.doc, &options, &result.text), result);
    }

    return 2;
}
