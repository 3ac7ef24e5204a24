#include "incdec.hpp"

#include <algorithm>

namespace flagcodes {

namespace {

// Unique neighbor scan shared by both directions. For each level boundary
// (i−1, i), every `subject` at level `subject_level` must relate to exactly
// one subspace at the other level; returns the first subject with two.
std::optional<UniquenessWitness> find_double_neighbor(
    const std::vector<ConstantDimensionCode>& projected, bool increasing) {
    for (size_t i = 1; i < projected.size(); ++i) {
        const ConstantDimensionCode& lower = projected[i - 1];
        const ConstantDimensionCode& upper = projected[i];
        const ConstantDimensionCode& subjects = increasing ? upper : lower;
        const ConstantDimensionCode& candidates = increasing ? lower : upper;
        for (const Subspace& subject : subjects.words()) {
            std::optional<Subspace> first;
            for (const Subspace& other : candidates.words()) {
                bool related = increasing ? other.contained_in(subject)
                                          : subject.contained_in(other);
                if (!related) continue;
                if (!first) {
                    first = other;
                } else {
                    size_t level = increasing ? i + 1 : i;
                    return UniquenessWitness{level, subject, *first, other};
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

IncDecResult is_increasing(const FlagCode& code) {
    auto witness = find_double_neighbor(projected_codes(code), true);
    return {!witness.has_value(), std::move(witness)};
}

IncDecResult is_decreasing(const FlagCode& code) {
    auto witness = find_double_neighbor(projected_codes(code), false);
    return {!witness.has_value(), std::move(witness)};
}

namespace {

// from -> unique related word in `to`, or nothing when some word relates to
// two. `forward` is "maps down" for alpha (upper to lower) and "maps up" for
// beta.
std::optional<std::map<Subspace, Subspace>> unique_neighbor_map(
    const ConstantDimensionCode& from, const ConstantDimensionCode& to, bool down) {
    std::map<Subspace, Subspace> map;
    for (const Subspace& s : from.words()) {
        std::optional<Subspace> unique;
        for (const Subspace& t : to.words()) {
            bool related = down ? t.contained_in(s) : s.contained_in(t);
            if (!related) continue;
            if (unique) return std::nullopt;
            unique = t;
        }
        if (!unique) fail(ErrorCode::Internal, "projected-code word without a neighbor");
        map.emplace(s, *unique);
    }
    return map;
}

void require_surjective(const std::map<Subspace, Subspace>& map,
                        const ConstantDimensionCode& codomain, const char* name) {
    for (const Subspace& target : codomain.words()) {
        bool hit = std::any_of(map.begin(), map.end(),
                               [&](const auto& kv) { return kv.second == target; });
        if (!hit)
            fail(ErrorCode::Internal, std::string("inclusion map ") + name + " is not surjective");
    }
}

} // namespace

InclusionMaps inclusion_maps(const FlagCode& code) {
    std::vector<ConstantDimensionCode> projected = projected_codes(code);
    InclusionMaps maps;
    for (size_t i = 1; i < projected.size(); ++i) {
        const ConstantDimensionCode& lower = projected[i - 1];
        const ConstantDimensionCode& upper = projected[i];
        const size_t level = i + 1; // 1-based level of the upper code

        auto alpha = unique_neighbor_map(upper, lower, true);
        if (alpha) {
            require_surjective(*alpha, lower, "alpha");
            maps.alpha.emplace(level, std::move(*alpha));
        }
        auto beta = unique_neighbor_map(lower, upper, false);
        if (beta) {
            require_surjective(*beta, upper, "beta");
            maps.beta.emplace(level, std::move(*beta));
        }
        if (maps.alpha.count(level) && maps.beta.count(level) && lower.size() == upper.size()) {
            // equal cardinalities: beta inverts alpha
            for (const auto& [v, u] : maps.alpha.at(level))
                if (!(maps.beta.at(level).at(u) == v))
                    fail(ErrorCode::Internal, "beta is not the inverse of alpha");
        }
    }
    return maps;
}

bool cardinality_profile_check(const FlagCode& code) {
    std::vector<ConstantDimensionCode> projected = projected_codes(code);
    std::vector<size_t> sizes;
    sizes.reserve(projected.size());
    for (const ConstantDimensionCode& c : projected) sizes.push_back(c.size());

    if (is_increasing(code).holds) {
        if (!std::is_sorted(sizes.begin(), sizes.end())) return false;
        if (sizes.back() != code.size()) return false;
    }
    if (is_decreasing(code).holds) {
        if (!std::is_sorted(sizes.rbegin(), sizes.rend())) return false;
        if (sizes.front() != code.size()) return false;
    }
    return true;
}

ConditionReport sufficient_conditions(const FlagCode& code) {
    ConditionReport report;
    const size_t n = code.ambient().n;
    const auto& dims = code.typevec().dims();
    std::vector<ConstantDimensionCode> projected = projected_codes(code);

    report.all_projected_max_distance =
        std::all_of(projected.begin(), projected.end(),
                    [](const ConstantDimensionCode& c) { return is_max_distance(c).value; });
    report.extremes = type_extremes(code.typevec());
    report.observed_increasing = is_increasing(code).holds;
    report.observed_decreasing = is_decreasing(code).holds;

    const bool straddles = 2 * dims.front() <= n && 2 * dims.back() >= n;
    if (report.extremes.t_a && report.extremes.t_b) {
        size_t ta = *report.extremes.t_a;
        size_t tb = *report.extremes.t_b;
        report.tb_lt_2ta = NumericComparison{tb, 2 * ta, tb < 2 * ta};
        report.two_tb_lt_n_plus_ta = NumericComparison{2 * tb, n + ta, 2 * tb < n + ta};
    }

    auto sizes_equal = [&](size_t from, size_t to) {
        for (size_t i = from; i < to; ++i)
            if (projected[i].size() != projected[i + 1].size()) return false;
        return true;
    };

    std::vector<ConditionRule> rules;
    rules.push_back({"max-distance-t1-ge-half",
                     report.all_projected_max_distance && 2 * dims.front() >= n, true, false});
    rules.push_back({"max-distance-tr-le-half",
                     report.all_projected_max_distance && 2 * dims.back() <= n, false, true});
    {
        bool hyp = report.all_projected_max_distance && straddles && report.tb_lt_2ta &&
                   report.tb_lt_2ta->holds && sizes_equal(0, *report.extremes.index_a);
        rules.push_back({"max-distance-tb-lt-2ta", hyp, true, false});
    }
    {
        bool hyp = report.all_projected_max_distance && straddles && report.two_tb_lt_n_plus_ta &&
                   report.two_tb_lt_n_plus_ta->holds &&
                   sizes_equal(*report.extremes.index_b, dims.size() - 1);
        rules.push_back({"max-distance-2tb-lt-n-plus-ta", hyp, false, true});
    }
    {
        bool any_type_condition = 2 * dims.front() >= n || 2 * dims.back() <= n ||
                                  (straddles && ((report.tb_lt_2ta && report.tb_lt_2ta->holds) ||
                                                 (report.two_tb_lt_n_plus_ta &&
                                                  report.two_tb_lt_n_plus_ta->holds)));
        bool hyp = is_odfc_direct(code) && any_type_condition;
        rules.push_back({"odfc-type-condition", hyp, true, true});
    }

    for (ConditionRule& rule : rules) {
        if (rule.hypotheses_hold) {
            if (rule.predicts_increasing && !report.observed_increasing)
                fail(ErrorCode::Internal,
                     "sufficient condition " + rule.name + " predicted increasing, observed not");
            if (rule.predicts_decreasing && !report.observed_decreasing)
                fail(ErrorCode::Internal,
                     "sufficient condition " + rule.name + " predicted decreasing, observed not");
            report.predicted_increasing |= rule.predicts_increasing;
            report.predicted_decreasing |= rule.predicts_decreasing;
        }
    }
    report.rules = std::move(rules);
    return report;
}

Classification classify(const FlagCode& code) {
    Classification out;
    IncDecResult inc = is_increasing(code);
    IncDecResult dec = is_decreasing(code);
    out.increasing = inc.holds;
    out.decreasing = dec.holds;
    out.increasing_witness = std::move(inc.witness);
    out.decreasing_witness = std::move(dec.witness);

    std::vector<ConstantDimensionCode> projected = projected_codes(code);
    out.disjoint = true;
    for (size_t i = 0; i < projected.size(); ++i) {
        out.projected_sizes.push_back(projected[i].size());
        if (projected[i].size() != code.size() && out.disjoint) {
            out.disjoint = false;
            out.disjoint_witness_level = i + 1;
        }
    }

    SicReport sic = is_sic(code);
    out.sic = sic.sic;
    out.sic_witness = std::move(sic.witness);

    DeterminationReport det = is_determined(code);
    out.determined = det.determined;
    out.determined_witness = std::move(det.removable_flag);

    out.size = code.size();
    out.min_distance = min_flag_distance(code);
    out.distance_bound = flag_distance_bound(code.typevec());
    bool direct = is_odfc_direct(code);
    if (direct != is_odfc_via_projected(code))
        fail(ErrorCode::Internal, "optimum-distance characterizations disagree");
    out.odfc = direct;

    out.conditions = sufficient_conditions(code);

    // Implications that hold on every instance; violations are defects.
    if ((out.increasing || out.decreasing) && !out.sic)
        fail(ErrorCode::Internal, "increasing/decreasing code is not SIC");
    if (out.increasing && out.disjoint && !out.decreasing)
        fail(ErrorCode::Internal, "disjoint increasing code is not decreasing");
    if (out.decreasing && out.disjoint && !out.increasing)
        fail(ErrorCode::Internal, "disjoint decreasing code is not increasing");
    return out;
}

} // namespace flagcodes
