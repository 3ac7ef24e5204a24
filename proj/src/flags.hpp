#pragma once

#include <optional>
#include <vector>

#include "cdc.hpp"

namespace flagcodes {

/// Dimension list 0 < t_1 < … < t_r < n of a flag.
class TypeVector {
public:
    TypeVector(AmbientSpace ambient, std::vector<size_t> dims);

    const AmbientSpace& ambient() const { return ambient_; }
    const std::vector<size_t>& dims() const { return dims_; }
    size_t length() const { return dims_.size(); }

    bool same_as(const TypeVector& other) const {
        return dims_ == other.dims_ && ambient_.same_as(other.ambient_);
    }

private:
    AmbientSpace ambient_;
    std::vector<size_t> dims_;
};

/// A strictly nested sequence of subspaces matching a type vector.
class Flag {
public:
    Flag(TypeVector typevec, std::vector<Subspace> spaces);

    const TypeVector& typevec() const { return typevec_; }
    size_t length() const { return spaces_.size(); }
    const std::vector<Subspace>& spaces() const { return spaces_; }
    const Subspace& at(size_t i) const { return spaces_[i]; }

    Flag acted(const GroupElement& g) const;

    friend bool operator==(const Flag& a, const Flag& b) { return a.spaces_ == b.spaces_; }
    friend std::strong_ordering operator<=>(const Flag& a, const Flag& b) {
        return std::lexicographical_compare_three_way(a.spaces_.begin(), a.spaces_.end(),
                                                      b.spaces_.begin(), b.spaces_.end());
    }

private:
    TypeVector typevec_;
    std::vector<Subspace> spaces_;
};

/// A nonempty set of distinct flags of one type, stored in canonical order.
class FlagCode {
public:
    FlagCode(TypeVector typevec, std::vector<Flag> flags);

    const TypeVector& typevec() const { return typevec_; }
    const AmbientSpace& ambient() const { return typevec_.ambient(); }
    size_t size() const { return flags_.size(); }
    size_t length() const { return typevec_.length(); }
    const std::vector<Flag>& flags() const { return flags_; }

    bool contains_flag(const Flag& f) const;

    friend bool operator==(const FlagCode& a, const FlagCode& b) { return a.flags_ == b.flags_; }

private:
    TypeVector typevec_;
    std::vector<Flag> flags_;
};

/// d_f(F, F') = Σ_i d_S(F_i, F'_i); TypeMismatch when the types differ.
unsigned flag_distance(const Flag& f, const Flag& g);

/// Minimum pairwise flag distance; 0 when |C| = 1 by the singleton
/// convention (taken as attainable even though the bound chain starts at 0).
unsigned min_flag_distance(const FlagCode& code);

/// Upper bound Σ_i min{2t_i, 2(n−t_i)} on the flag distance.
unsigned flag_distance_bound(const TypeVector& typevec);

/// The i-th projected codes C_1, …, C_r (deduplicated level sets).
std::vector<ConstantDimensionCode> projected_codes(const FlagCode& code);

/// |C_i| = |C| for every level.
bool is_disjoint(const FlagCode& code);

/// The remarkable dimensions of the type vector:
///   t_a = max{t_i : 2t_i ≤ n},  t_b = min{t_i : 2t_i ≥ n},
/// each absent when no dimension qualifies. Values are dimensions; the
/// matching indices are exposed separately for the condition checks.
struct TypeExtremes {
    std::optional<size_t> t_a;
    std::optional<size_t> t_b;
    std::optional<size_t> index_a; // position in dims(), 0-based
    std::optional<size_t> index_b;
};

TypeExtremes type_extremes(const TypeVector& typevec);

/// Optimum-distance test by the definition: min distance equals the bound.
bool is_odfc_direct(const FlagCode& code);

/// Optimum-distance test through the projected codes: |C| = |C_i| and C_i
/// of maximum distance for i ∈ {a, b}; reduces to the single existing index
/// when t_a or t_b is absent. Agrees with the direct route.
bool is_odfc_via_projected(const FlagCode& code);

} // namespace flagcodes
