#include "flags.hpp"

#include <algorithm>

namespace flagcodes {

TypeVector::TypeVector(AmbientSpace ambient, std::vector<size_t> dims)
    : ambient_(std::move(ambient)), dims_(std::move(dims)) {
    if (dims_.empty()) fail(ErrorCode::DimensionMismatch, "type vector must be nonempty");
    size_t prev = 0;
    for (size_t t : dims_) {
        if (t <= prev)
            fail(ErrorCode::DimensionMismatch, "type vector must be strictly increasing from 1");
        prev = t;
    }
    if (dims_.back() >= ambient_.n)
        fail(ErrorCode::DimensionMismatch, "type dimensions must be below the ambient dimension");
}

Flag::Flag(TypeVector typevec, std::vector<Subspace> spaces)
    : typevec_(std::move(typevec)), spaces_(std::move(spaces)) {
    const auto& dims = typevec_.dims();
    if (spaces_.size() != dims.size())
        fail(ErrorCode::DimensionMismatch, "flag length differs from the type vector");
    for (size_t i = 0; i < spaces_.size(); ++i) {
        require_same_ambient(typevec_.ambient(), spaces_[i].ambient());
        if (spaces_[i].dim() != dims[i])
            fail(ErrorCode::DimensionMismatch,
                 "subspace dimension differs from the type vector at level " + std::to_string(i + 1));
    }
    // Dimensions are strictly increasing, so containment is proper.
    for (size_t i = 0; i + 1 < spaces_.size(); ++i)
        if (!spaces_[i].contained_in(spaces_[i + 1]))
            fail(ErrorCode::NotNested,
                 "flag subspaces are not nested at level " + std::to_string(i + 2));
}

Flag Flag::acted(const GroupElement& g) const {
    std::vector<Subspace> images;
    images.reserve(spaces_.size());
    for (const Subspace& s : spaces_) images.push_back(s.acted(g));
    return Flag(typevec_, std::move(images));
}

FlagCode::FlagCode(TypeVector typevec, std::vector<Flag> flags)
    : typevec_(std::move(typevec)), flags_(std::move(flags)) {
    if (flags_.empty()) fail(ErrorCode::DimensionMismatch, "a flag code must be nonempty");
    for (const Flag& f : flags_)
        if (!f.typevec().same_as(typevec_))
            fail(ErrorCode::TypeMismatch, "all flags in a code must share the type vector");
    std::sort(flags_.begin(), flags_.end());
    auto dup = std::adjacent_find(flags_.begin(), flags_.end());
    if (dup != flags_.end()) fail(ErrorCode::DimensionMismatch, "flags must be distinct");
}

bool FlagCode::contains_flag(const Flag& f) const {
    return std::binary_search(flags_.begin(), flags_.end(), f);
}

unsigned flag_distance(const Flag& f, const Flag& g) {
    if (!f.typevec().same_as(g.typevec()))
        fail(ErrorCode::TypeMismatch, "flag distance requires equal type vectors");
    unsigned total = 0;
    for (size_t i = 0; i < f.length(); ++i) total += subspace_distance(f.at(i), g.at(i));
    return total;
}

unsigned min_flag_distance(const FlagCode& code) {
    if (code.size() == 1) return 0;
    unsigned best = UINT32_MAX;
    const auto& flags = code.flags();
    for (size_t i = 0; i < flags.size(); ++i)
        for (size_t j = i + 1; j < flags.size(); ++j)
            best = std::min(best, flag_distance(flags[i], flags[j]));
    return best;
}

unsigned flag_distance_bound(const TypeVector& typevec) {
    unsigned total = 0;
    for (size_t t : typevec.dims())
        total += max_distance_bound(t, typevec.ambient().n);
    return total;
}

std::vector<ConstantDimensionCode> projected_codes(const FlagCode& code) {
    std::vector<ConstantDimensionCode> projected;
    projected.reserve(code.length());
    for (size_t i = 0; i < code.length(); ++i) {
        std::vector<Subspace> level;
        level.reserve(code.size());
        for (const Flag& f : code.flags()) level.push_back(f.at(i));
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
        projected.emplace_back(code.ambient(), std::move(level));
    }
    return projected;
}

bool is_disjoint(const FlagCode& code) {
    for (const ConstantDimensionCode& ci : projected_codes(code))
        if (ci.size() != code.size()) return false;
    return true;
}

TypeExtremes type_extremes(const TypeVector& typevec) {
    TypeExtremes out;
    const size_t n = typevec.ambient().n;
    const auto& dims = typevec.dims();
    for (size_t i = 0; i < dims.size(); ++i) {
        if (2 * dims[i] <= n) {
            out.t_a = dims[i];
            out.index_a = i;
        }
        if (2 * dims[i] >= n && !out.t_b) {
            out.t_b = dims[i];
            out.index_b = i;
        }
    }
    return out;
}

bool is_odfc_direct(const FlagCode& code) {
    return min_flag_distance(code) == flag_distance_bound(code.typevec());
}

bool is_odfc_via_projected(const FlagCode& code) {
    TypeExtremes extremes = type_extremes(code.typevec());
    std::vector<size_t> indices;
    if (extremes.index_a) indices.push_back(*extremes.index_a);
    if (extremes.index_b && extremes.index_b != extremes.index_a)
        indices.push_back(*extremes.index_b);
    std::vector<ConstantDimensionCode> projected = projected_codes(code);
    for (size_t i : indices) {
        if (projected[i].size() != code.size()) return false;
        if (!is_max_distance(projected[i]).value) return false;
    }
    return true;
}

} // namespace flagcodes
