#pragma once

#include <optional>
#include <string>

#include "genset.hpp"

namespace flagcodes {

/// Outcome of a flag-code equivalence decision. When the search never ran
/// because an invariant already separates the codes, pruned_by names it:
/// "cardinality" (|C| ≠ |C'|), "min-distance" (a flag or projected minimum
/// distance differs), or "projected-cardinalities" (some |C_i| ≠ |C'_i|).
struct EquivalenceReport {
    bool equivalent = false;
    std::optional<GroupElement> witness;
    std::optional<std::string> pruned_by;
};

FlagCode act_flagcode(const FlagCode& code, const GroupElement& g);

/// Exhaustive pruned equivalence search in canonical scan order. For codes
/// determined by their projected codes the search matches the projected
/// codes level-wise instead of the flag sets; both predicates select the
/// same witnesses, so the reported element does not depend on the route.
EquivalenceReport are_equivalent_flagcodes(const FlagCode& code, const FlagCode& other,
                                           const SearchOptions& options = {});

/// Exact stabilizer {g : C·g = C} by direct scan. Always a subset of
/// ∩_i Aut(C_i).
std::vector<GroupElement> aut_flagcode(const FlagCode& code, const SearchOptions& options = {});

struct ProjectedAutResult {
    std::vector<GroupElement> elements; // ∩_i aut(C_i), canonical order
    /// True when the code is SIC, in which case the intersection equals
    /// Aut(C) (resp. SAut(C)). Otherwise the intersection is only an upper
    /// set; equality may still hold and is not decided here.
    bool exact = false;
};

/// ∩_i aut(C_i) computed from the projected codes alone.
ProjectedAutResult aut_via_projected(const FlagCode& code, const SearchOptions& options = {});

} // namespace flagcodes
