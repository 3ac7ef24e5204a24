#include "cdc.hpp"

#include <algorithm>

namespace flagcodes {

ConstantDimensionCode::ConstantDimensionCode(AmbientSpace ambient, std::vector<Subspace> words)
    : ambient_(std::move(ambient)), k_(0), words_(std::move(words)) {
    if (words_.empty())
        fail(ErrorCode::DimensionMismatch, "a constant dimension code must be nonempty");
    k_ = words_.front().dim();
    for (const Subspace& w : words_) {
        require_same_ambient(ambient_, w.ambient());
        if (w.dim() != k_)
            fail(ErrorCode::DimensionMismatch, "codewords must all have the same dimension");
    }
    std::sort(words_.begin(), words_.end());
    auto dup = std::adjacent_find(words_.begin(), words_.end());
    if (dup != words_.end())
        fail(ErrorCode::DimensionMismatch, "codewords must be distinct");
}

bool ConstantDimensionCode::contains_word(const Subspace& u) const {
    return std::binary_search(words_.begin(), words_.end(), u);
}

unsigned min_distance(const ConstantDimensionCode& code) {
    if (code.size() == 1) return 0;
    unsigned best = UINT32_MAX;
    const auto& words = code.words();
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j)
            best = std::min(best, subspace_distance(words[i], words[j]));
    return best;
}

unsigned max_distance_bound(size_t k, size_t n) {
    return static_cast<unsigned>(2 * std::min(k, n - k));
}

MaxDistanceResult is_max_distance(const ConstantDimensionCode& code) {
    if (code.size() == 1) return {false, true};
    unsigned bound = max_distance_bound(code.k(), code.ambient().n);
    return {min_distance(code) == bound, false};
}

ConstantDimensionCode act_code(const ConstantDimensionCode& code, const GroupElement& g) {
    std::vector<Subspace> images;
    images.reserve(code.size());
    for (const Subspace& w : code.words()) images.push_back(w.acted(g));
    return ConstantDimensionCode(code.ambient(), std::move(images));
}

void require_scan_budget(const AmbientSpace& ambient, const SearchOptions& options) {
    const unsigned q = ambient.q();
    const size_t n = ambient.n;
    uint64_t candidates = 1;
    for (size_t i = 0; i < n * n; ++i) {
        if (candidates > options.max_candidates / q) {
            candidates = UINT64_MAX;
            break;
        }
        candidates *= q;
    }
    if (options.semilinear && candidates != UINT64_MAX) {
        unsigned e = ambient.ctx->e();
        candidates = candidates > options.max_candidates / e ? UINT64_MAX : candidates * e;
    }
    if (candidates > options.max_candidates)
        fail(ErrorCode::TooLarge, "group scan exceeds the candidate budget " +
                                      std::to_string(options.max_candidates));
}

std::vector<unsigned> scan_powers(const AmbientSpace& ambient, const SearchOptions& options) {
    if (!options.semilinear) return {0};
    std::vector<unsigned> powers(ambient.ctx->e());
    for (unsigned j = 0; j < powers.size(); ++j) powers[j] = j;
    return powers;
}

namespace {

// C·(A, φ) = C', word by word with early exit; assumes |C| = |C'|.
bool maps_onto(const ConstantDimensionCode& code, const Matrix& a, const FieldAutomorphism& phi,
               const ConstantDimensionCode& target) {
    for (const Subspace& w : code.words())
        if (!target.contains_word(subspace_image(w, a, phi))) return false;
    return true;
}

} // namespace

std::vector<GroupElement> aut_group(const ConstantDimensionCode& code,
                                    const SearchOptions& options) {
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

std::optional<GroupElement> are_equivalent_codes(const ConstantDimensionCode& code,
                                                 const ConstantDimensionCode& other,
                                                 const SearchOptions& options) {
    require_same_ambient(code.ambient(), other.ambient());
    if (code.k() != other.k())
        fail(ErrorCode::DimensionMismatch, "codes of different dimension cannot be compared");
    if (code.size() != other.size()) return std::nullopt;
    if (min_distance(code) != min_distance(other)) return std::nullopt;

    const AmbientSpace& ambient = code.ambient();
    require_scan_budget(ambient, options);
    const std::vector<Matrix>& gl = enumerate_gl(ambient, options.max_candidates);
    for (unsigned power : scan_powers(ambient, options))
        for (const Matrix& a : gl)
            if (maps_onto(code, a, {power}, other))
                return GroupElement::semilinear(a, {power});
    return std::nullopt;
}

} // namespace flagcodes
