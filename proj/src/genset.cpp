#include "genset.hpp"

#include <algorithm>

namespace flagcodes {

CodeProduct::CodeProduct(AmbientSpace ambient, std::vector<ConstantDimensionCode> components)
    : ambient_(std::move(ambient)), components_(std::move(components)) {
    if (components_.empty())
        fail(ErrorCode::DimensionMismatch, "a code product must have at least one component");
    size_t prev = 0;
    for (const ConstantDimensionCode& c : components_) {
        require_same_ambient(ambient_, c.ambient());
        if (c.k() <= prev)
            fail(ErrorCode::DimensionMismatch,
                 "component dimensions must be strictly increasing from 1");
        prev = c.k();
    }
    if (prev >= ambient_.n)
        fail(ErrorCode::DimensionMismatch,
             "component dimensions must stay below the ambient dimension");
}

TypeVector CodeProduct::typevec() const {
    std::vector<size_t> dims;
    dims.reserve(components_.size());
    for (const ConstantDimensionCode& c : components_) dims.push_back(c.k());
    return TypeVector(ambient_, std::move(dims));
}

namespace {

struct ProductSearch {
    const CodeProduct& product;
    uint64_t budget;
    uint64_t visited = 0;
    std::vector<Subspace> chain;
    std::vector<Flag> found;
    TypeVector typevec;

    void run() {
        descend(0);
    }

    void descend(size_t level) {
        if (level == product.length()) {
            found.emplace_back(typevec, chain);
            return;
        }
        for (const Subspace& candidate : product.components()[level].words()) {
            if (++visited > budget)
                fail(ErrorCode::TooLarge, "product search exceeded the node budget " +
                                              std::to_string(budget));
            if (!chain.empty() && !chain.back().contained_in(candidate)) continue;
            chain.push_back(candidate);
            descend(level + 1);
            chain.pop_back();
        }
    }
};

} // namespace

std::vector<Flag> product_flags(const CodeProduct& product, const ProductOptions& options) {
    ProductSearch search{product, options.max_nodes, 0, {}, {}, product.typevec()};
    search.run();
    std::sort(search.found.begin(), search.found.end());
    return std::move(search.found);
}

GeneratingSetReport is_generating_set(const CodeProduct& product) {
    const auto& components = product.components();
    const size_t r = components.size();
    for (size_t i = 0; i < r; ++i) {
        for (const Subspace& u : components[i].words()) {
            // Below: C_0 = {{0}} always qualifies.
            if (i > 0) {
                bool has_lower = std::any_of(
                    components[i - 1].words().begin(), components[i - 1].words().end(),
                    [&](const Subspace& lower) { return lower.contained_in(u); });
                if (!has_lower) return {false, i + 1, u};
            }
            // Above: C_{r+1} = {F_q^n} always qualifies.
            if (i + 1 < r) {
                bool has_upper = std::any_of(
                    components[i + 1].words().begin(), components[i + 1].words().end(),
                    [&](const Subspace& upper) { return u.contained_in(upper); });
                if (!has_upper) return {false, i + 1, u};
            }
        }
    }
    return {true, std::nullopt, std::nullopt};
}

FlagCode sic_closure(const CodeProduct& product, const ProductOptions& options) {
    GeneratingSetReport report = is_generating_set(product);
    if (!report.generating)
        fail(ErrorCode::NotGenerating, "the code product is not a generating set of flag codes");
    std::vector<Flag> flags = product_flags(product, options);
    if (flags.empty())
        fail(ErrorCode::Internal, "a generating set produced an empty product");
    return FlagCode(product.typevec(), std::move(flags));
}

SicReport is_sic(const FlagCode& code) {
    const size_t r = code.length();
    for (size_t i = 1; i < r; ++i) {
        for (const Flag& f : code.flags()) {
            for (const Flag& g : code.flags()) {
                if (!f.at(i - 1).contained_in(g.at(i))) continue;
                std::vector<Subspace> spliced;
                spliced.reserve(r);
                for (size_t j = 0; j < i; ++j) spliced.push_back(f.at(j));
                for (size_t j = i; j < r; ++j) spliced.push_back(g.at(j));
                Flag candidate(code.typevec(), std::move(spliced));
                if (!code.contains_flag(candidate)) return {false, std::move(candidate)};
            }
        }
    }
    return {true, std::nullopt};
}

MultiplicityTable::MultiplicityTable(const FlagCode& code) {
    per_level_.resize(code.length());
    for (const Flag& f : code.flags())
        for (size_t i = 0; i < code.length(); ++i) ++per_level_[i][f.at(i)];
}

size_t MultiplicityTable::multiplicity(size_t level_index, const Subspace& subspace) const {
    const auto& level = per_level_.at(level_index);
    auto it = level.find(subspace);
    return it == level.end() ? 0 : it->second;
}

MultiplicityTable multiplicities(const FlagCode& code) { return MultiplicityTable(code); }

DeterminationReport is_determined(const FlagCode& code) {
    SicReport sic = is_sic(code);
    if (!sic.sic) return {false, std::nullopt, std::move(sic.witness)};
    MultiplicityTable table(code);
    for (const Flag& f : code.flags()) {
        bool has_unique_level = false;
        for (size_t i = 0; i < code.length() && !has_unique_level; ++i)
            has_unique_level = table.multiplicity(i, f.at(i)) == 1;
        if (!has_unique_level) return {false, f, std::nullopt};
    }
    return {true, std::nullopt, std::nullopt};
}

} // namespace flagcodes
