#pragma once

#include <map>
#include <optional>

#include "equiv.hpp"

namespace flagcodes {

/// A level-i subspace with two distinct neighbors at the adjacent level,
/// disproving the uniqueness that increasing/decreasing requires.
struct UniquenessWitness {
    size_t level;         // 1-based level of `subject`
    Subspace subject;
    Subspace first_neighbor;
    Subspace second_neighbor;
};

struct IncDecResult {
    bool holds = false;
    std::optional<UniquenessWitness> witness;
};

/// Increasing: every V in C_i contains exactly one U in C_{i−1}; at least
/// one always exists, so only uniqueness can fail.
IncDecResult is_increasing(const FlagCode& code);

/// Decreasing: every U in C_{i−1} lies in exactly one V in C_i.
IncDecResult is_decreasing(const FlagCode& code);

/// The inclusion maps α_i : C_i → C_{i−1} and β_i : C_{i−1} → C_i, present
/// per level exactly when the uniqueness holds at that level. Existing maps
/// are surjective; when |C_{i−1}| = |C_i| and α_i exists, β_i = α_i⁻¹.
struct InclusionMaps {
    /// Keyed by 1-based level i in (1, r]; values map canonical subspaces.
    std::map<size_t, std::map<Subspace, Subspace>> alpha;
    std::map<size_t, std::map<Subspace, Subspace>> beta;
};

InclusionMaps inclusion_maps(const FlagCode& code);

/// The cardinality profile implied by the classification:
/// |C_1| ≤ … ≤ |C_r| = |C| for increasing codes, reversed for decreasing.
/// True when no profile is implied.
bool cardinality_profile_check(const FlagCode& code);

/// One sufficient-condition rule: whether its hypotheses hold and what it
/// predicts. A rule whose hypotheses hold while the observed classification
/// misses the prediction is a hard Internal failure.
struct ConditionRule {
    std::string name;
    bool hypotheses_hold = false;
    bool predicts_increasing = false;
    bool predicts_decreasing = false;
};

struct NumericComparison {
    size_t lhs = 0;
    size_t rhs = 0;
    bool holds = false; // lhs < rhs
};

struct ConditionReport {
    bool all_projected_max_distance = false;
    TypeExtremes extremes;
    /// t_b < 2 t_a and 2 t_b < n + t_a, evaluated when both dimensions exist.
    std::optional<NumericComparison> tb_lt_2ta;
    std::optional<NumericComparison> two_tb_lt_n_plus_ta;
    std::vector<ConditionRule> rules;
    bool predicted_increasing = false;
    bool predicted_decreasing = false;
    bool observed_increasing = false;
    bool observed_decreasing = false;
};

/// Evaluates the sufficient conditions tying maximum-distance projected
/// codes to the increasing/decreasing properties:
///  - all C_i of maximum distance and t_1 ≥ n/2  ⇒ increasing;
///  - all C_i of maximum distance and t_r ≤ n/2  ⇒ decreasing;
///  - all C_i max distance, t_1 ≤ n/2 ≤ t_r, t_b < 2t_a and
///    |C_1| = … = |C_a|  ⇒ increasing (resp. 2t_b < n + t_a and
///    |C_b| = … = |C_r|  ⇒ decreasing), pairings exactly as stated;
///  - optimum distance together with any of the four type conditions
///    ⇒ increasing and decreasing.
ConditionReport sufficient_conditions(const FlagCode& code);

/// Everything the classify command reports for one flag code.
struct Classification {
    bool increasing = false;
    bool decreasing = false;
    bool disjoint = false;
    bool sic = false;
    bool determined = false;
    bool odfc = false;

    std::optional<UniquenessWitness> increasing_witness;
    std::optional<UniquenessWitness> decreasing_witness;
    std::optional<size_t> disjoint_witness_level; // 1-based level with |C_i| < |C|
    std::optional<Flag> sic_witness;
    std::optional<Flag> determined_witness; // removable flag when SIC but undetermined

    size_t size = 0;
    std::vector<size_t> projected_sizes;
    unsigned min_distance = 0;
    unsigned distance_bound = 0;
    ConditionReport conditions;
};

Classification classify(const FlagCode& code);

} // namespace flagcodes
