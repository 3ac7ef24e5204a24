#pragma once

#include <map>
#include <optional>

#include "flags.hpp"

namespace flagcodes {

/// A Cartesian product C_1 × … × C_r of constant dimension codes whose
/// dimensions form a valid type vector.
class CodeProduct {
public:
    CodeProduct(AmbientSpace ambient, std::vector<ConstantDimensionCode> components);

    const AmbientSpace& ambient() const { return ambient_; }
    const std::vector<ConstantDimensionCode>& components() const { return components_; }
    size_t length() const { return components_.size(); }

    TypeVector typevec() const;

private:
    AmbientSpace ambient_;
    std::vector<ConstantDimensionCode> components_;
};

/// Node budget for the inclusion-filtered product search.
struct ProductOptions {
    uint64_t max_nodes = uint64_t(1) << 22;
};

/// (C_1 × … × C_r) ∩ F_q((t_1, …, t_r), n): every tuple from the product
/// that forms a flag, found by depth-first search filtering candidates by
/// inclusion level by level (the full product is never materialized).
/// The empty result is a value, not an error.
std::vector<Flag> product_flags(const CodeProduct& product, const ProductOptions& options = {});

struct GeneratingSetReport {
    bool generating = false;
    /// First offending subspace in canonical order when not generating:
    /// 1-based level i and the subspace of C_i with no neighbor below or
    /// above (sentinels C_0 = {{0}}, C_{r+1} = {F_q^n}).
    std::optional<size_t> witness_level;
    std::optional<Subspace> witness_subspace;
};

/// Neighbor-existence characterization of generating sets: every U_i in
/// C_i must lie over some U_{i−1} in C_{i−1} and under some U_{i+1} in
/// C_{i+1}.
GeneratingSetReport is_generating_set(const CodeProduct& product);

/// The unique SIC flag code generated by a generating set: the full
/// inclusion-filtered product. NotGenerating when the product is not a
/// generating set.
FlagCode sic_closure(const CodeProduct& product, const ProductOptions& options = {});

struct SicReport {
    bool sic = false;
    /// A spliced flag (F_1, …, F_{i−1}, F'_i, …, F'_r) missing from the
    /// code, when not SIC.
    std::optional<Flag> witness;
};

/// Subspace-inclusion-closure by the splice definition: any two member
/// flags compatible at a nesting point splice into a member flag.
SicReport is_sic(const FlagCode& code);

/// Per-level multiplicities m_C(F_i): how many flags of C share each
/// subspace at each level. Column sums at every level equal |C|.
class MultiplicityTable {
public:
    explicit MultiplicityTable(const FlagCode& code);

    size_t multiplicity(size_t level_index, const Subspace& subspace) const;
    size_t levels() const { return per_level_.size(); }
    const std::map<Subspace, size_t>& level(size_t level_index) const {
        return per_level_[level_index];
    }

private:
    std::vector<std::map<Subspace, size_t>> per_level_;
};

MultiplicityTable multiplicities(const FlagCode& code);

struct DeterminationReport {
    bool determined = false;
    /// When the code is SIC but not determined: a flag whose subspaces all
    /// have multiplicity ≥ 2 (removable without changing the projected
    /// codes).
    std::optional<Flag> removable_flag;
    /// When the code is not SIC: the offending spliced flag.
    std::optional<Flag> sic_witness;
};

/// Determined by projected codes: SIC and every flag owns a
/// multiplicity-1 subspace.
DeterminationReport is_determined(const FlagCode& code);

} // namespace flagcodes
