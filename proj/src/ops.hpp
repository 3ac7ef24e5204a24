#pragma once

#include "fixtures.hpp"
#include "randomgen.hpp"

namespace flagcodes {

/// Result builders shared by the C API and the CLI. Each takes a parsed
/// document, validates the payload kind, and returns the canonical JSON
/// result object for its subcommand.

Json op_distance(const Document& doc);
Json op_projected(const Document& doc);      // full codeproduct document
Json op_check_genset(const Document& doc);
Json op_sic_closure(const Document& doc);    // full flagcode document
Json op_check_sic(const Document& doc);
Json op_check_determined(const Document& doc);
Json op_classify(const Document& doc);
Json op_odfc_check(const Document& doc);

struct AutOptions {
    SearchOptions search;
    /// Stabilizer elements are listed only up to this size.
    size_t max_elements = 512;
};

Json op_aut(const Document& doc, const AutOptions& options);
Json op_equiv(const Document& doc, const Document& other, const SearchOptions& options);

const ConstantDimensionCode& require_cdc(const Document& doc);
const FlagCode& require_flagcode(const Document& doc);
const CodeProduct& require_codeproduct(const Document& doc);

} // namespace flagcodes
