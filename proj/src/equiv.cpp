#include "equiv.hpp"

#include <algorithm>

namespace flagcodes {

FlagCode act_flagcode(const FlagCode& code, const GroupElement& g) {
    std::vector<Flag> images;
    images.reserve(code.size());
    for (const Flag& f : code.flags()) images.push_back(f.acted(g));
    return FlagCode(code.typevec(), std::move(images));
}

namespace {

// C·(A, φ) = C' flag by flag with early exit; assumes |C| = |C'|.
bool maps_onto(const FlagCode& code, const Matrix& a, const FieldAutomorphism& phi,
               const FlagCode& target) {
    for (const Flag& f : code.flags()) {
        std::vector<Subspace> image;
        image.reserve(f.length());
        for (const Subspace& s : f.spaces()) image.push_back(subspace_image(s, a, phi));
        if (!target.contains_flag(Flag(code.typevec(), std::move(image)))) return false;
    }
    return true;
}

bool maps_levels_onto(const std::vector<ConstantDimensionCode>& projected, const Matrix& a,
                      const FieldAutomorphism& phi,
                      const std::vector<ConstantDimensionCode>& target) {
    for (size_t i = 0; i < projected.size(); ++i)
        for (const Subspace& w : projected[i].words())
            if (!target[i].contains_word(subspace_image(w, a, phi))) return false;
    return true;
}

} // namespace

EquivalenceReport are_equivalent_flagcodes(const FlagCode& code, const FlagCode& other,
                                           const SearchOptions& options) {
    if (!code.typevec().same_as(other.typevec()))
        fail(ErrorCode::TypeMismatch, "flag codes of different type cannot be compared");

    if (code.size() != other.size()) return {false, std::nullopt, "cardinality"};
    if (min_flag_distance(code) != min_flag_distance(other))
        return {false, std::nullopt, "min-distance"};

    std::vector<ConstantDimensionCode> projected = projected_codes(code);
    std::vector<ConstantDimensionCode> projected_other = projected_codes(other);
    for (size_t i = 0; i < projected.size(); ++i) {
        if (projected[i].size() != projected_other[i].size())
            return {false, std::nullopt, "projected-cardinalities"};
        if (min_distance(projected[i]) != min_distance(projected_other[i]))
            return {false, std::nullopt, "min-distance"};
    }

    const AmbientSpace& ambient = code.ambient();
    require_scan_budget(ambient, options);
    const std::vector<Matrix>& gl = enumerate_gl(ambient, options.max_candidates);

    // For determined codes, matching all projected codes with one element
    // already forces C·g = C', so the cheaper level-wise test decides.
    bool determined = is_determined(code).determined;
    for (unsigned power : scan_powers(ambient, options)) {
        for (const Matrix& a : gl) {
            bool hit = determined ? maps_levels_onto(projected, a, {power}, projected_other)
                                  : maps_onto(code, a, {power}, other);
            if (hit) {
                GroupElement g = GroupElement::semilinear(a, {power});
                if (determined && !(act_flagcode(code, g) == other))
                    fail(ErrorCode::Internal,
                         "projected-route witness failed to map the flag code");
                return {true, std::move(g), std::nullopt};
            }
        }
    }
    return {false, std::nullopt, std::nullopt};
}

std::vector<GroupElement> aut_flagcode(const FlagCode& code, const SearchOptions& options) {
    const AmbientSpace& ambient = code.ambient();
    require_scan_budget(ambient, options);
    const std::vector<Matrix>& gl = enumerate_gl(ambient, options.max_candidates);
    std::vector<GroupElement> stab;
    for (unsigned power : scan_powers(ambient, options))
        for (const Matrix& a : gl)
            if (maps_onto(code, a, {power}, code))
                stab.push_back(GroupElement::semilinear(a, {power}));
    return stab;
}

ProjectedAutResult aut_via_projected(const FlagCode& code, const SearchOptions& options) {
    std::vector<ConstantDimensionCode> projected = projected_codes(code);
    std::vector<GroupElement> intersection = aut_group(projected.front(), options);
    for (size_t i = 1; i < projected.size() && !intersection.empty(); ++i) {
        std::vector<GroupElement> next = aut_group(projected[i], options);
        std::vector<GroupElement> merged;
        merged.reserve(std::min(intersection.size(), next.size()));
        std::set_intersection(intersection.begin(), intersection.end(), next.begin(), next.end(),
                              std::back_inserter(merged));
        intersection = std::move(merged);
    }
    return {std::move(intersection), is_sic(code).sic};
}

} // namespace flagcodes
