#pragma once

#include <optional>
#include <vector>

#include "grassmann.hpp"

namespace flagcodes {

/// Budgets for the brute-force group scans. A scan over GL_n(F_q) or
/// ΓL_n(F_q) considers q^(n²) (resp. q^(n²)·e) candidates; TooLarge when
/// that exceeds max_candidates.
struct SearchOptions {
    bool semilinear = false;
    uint64_t max_candidates = uint64_t(1) << 26;
};

struct MaxDistanceResult {
    bool value = false;
    /// Singletons have d_S = 0 by convention, so the bound is unreachable;
    /// reported rather than silently folded into `value`.
    bool degenerate_singleton = false;
};

/// A nonempty set of distinct k-dimensional subspaces of F_q^n, stored
/// sorted in canonical subspace order.
class ConstantDimensionCode {
public:
    ConstantDimensionCode(AmbientSpace ambient, std::vector<Subspace> words);

    const AmbientSpace& ambient() const { return ambient_; }
    size_t k() const { return k_; }
    size_t size() const { return words_.size(); }
    const std::vector<Subspace>& words() const { return words_; }

    bool contains_word(const Subspace& u) const;

    friend bool operator==(const ConstantDimensionCode& a, const ConstantDimensionCode& b) {
        return a.words_ == b.words_;
    }

private:
    AmbientSpace ambient_;
    size_t k_;
    std::vector<Subspace> words_;
};

/// Minimum pairwise subspace distance; 0 when |C| = 1.
unsigned min_distance(const ConstantDimensionCode& code);

/// Distance bound min{2k, 2(n−k)} for equal-dimension codes.
unsigned max_distance_bound(size_t k, size_t n);

MaxDistanceResult is_max_distance(const ConstantDimensionCode& code);

ConstantDimensionCode act_code(const ConstantDimensionCode& code, const GroupElement& g);

/// Exact stabilizer {g : C·g = C} by scan in canonical order (automorphism
/// power ascending, then matrix lexicographic). Linear mode restricts to
/// GL_n; semilinear iterates φ outer, which degenerates to the linear scan
/// over prime fields.
std::vector<GroupElement> aut_group(const ConstantDimensionCode& code,
                                    const SearchOptions& options = {});

/// First group element g with C·g = C' in canonical order, if any.
/// Pre-filters on |C| and d_S(C) before scanning.
std::optional<GroupElement> are_equivalent_codes(const ConstantDimensionCode& code,
                                                 const ConstantDimensionCode& other,
                                                 const SearchOptions& options = {});

/// Shared budget check for group scans; throws TooLarge when
/// q^(n²)·(e if semilinear) exceeds options.max_candidates.
void require_scan_budget(const AmbientSpace& ambient, const SearchOptions& options);

/// Frobenius powers iterated by a scan: [0] for linear mode, [0, e) for
/// semilinear mode.
std::vector<unsigned> scan_powers(const AmbientSpace& ambient, const SearchOptions& options);

} // namespace flagcodes
