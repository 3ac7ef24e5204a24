#include "randomgen.hpp"

#include <algorithm>

namespace flagcodes {

RandomProfile parse_profile(const std::string& name) {
    if (name == "generic") return RandomProfile::Generic;
    if (name == "disjoint") return RandomProfile::Disjoint;
    if (name == "odfc-attempt") return RandomProfile::OdfcAttempt;
    fail(ErrorCode::ParseError,
         "profile must be one of \"generic\", \"disjoint\", \"odfc-attempt\"");
}

Flag random_flag(SplitMix64& rng, const TypeVector& typevec) {
    const AmbientSpace& ambient = typevec.ambient();
    const size_t n = ambient.n;
    const size_t depth = typevec.dims().back();
    constexpr int kMatrixRetries = 1000;
    for (int attempt = 0; attempt < kMatrixRetries; ++attempt) {
        Matrix m(ambient.ctx, depth, n);
        for (size_t r = 0; r < depth; ++r)
            for (size_t c = 0; c < n; ++c) m.set(r, c, rng.element(ambient.q()));
        if (m.rank() != depth) continue;
        std::vector<Subspace> spaces;
        spaces.reserve(typevec.length());
        for (size_t t : typevec.dims()) {
            Matrix prefix(ambient.ctx, t, n);
            for (size_t r = 0; r < t; ++r)
                for (size_t c = 0; c < n; ++c) prefix.set(r, c, m.at(r, c));
            spaces.push_back(Subspace::from_rows(ambient, prefix));
        }
        return Flag(typevec, std::move(spaces));
    }
    fail(ErrorCode::Infeasible, "could not sample a full-rank flag matrix");
}

FlagCode random_flagcode(uint64_t seed, const AmbientSpace& ambient,
                         const std::vector<size_t>& type_dims, size_t size,
                         RandomProfile profile) {
    if (size == 0) fail(ErrorCode::Infeasible, "requested an empty flag code");
    TypeVector typevec(ambient, type_dims);
    SplitMix64 rng(seed);

    constexpr int kCodeRetries = 256;
    for (int attempt = 0; attempt < kCodeRetries; ++attempt) {
        std::vector<Flag> flags;
        bool filled = true;
        size_t stale = 0;
        while (flags.size() < size) {
            Flag f = random_flag(rng, typevec);
            if (std::find(flags.begin(), flags.end(), f) == flags.end()) {
                flags.push_back(std::move(f));
                stale = 0;
            } else if (++stale > 64 + 16 * size) {
                filled = false; // the variety is likely too small
                break;
            }
        }
        if (!filled) break;
        FlagCode code(typevec, std::move(flags));
        bool accepted = true;
        switch (profile) {
        case RandomProfile::Generic: break;
        case RandomProfile::Disjoint: accepted = is_disjoint(code); break;
        case RandomProfile::OdfcAttempt: accepted = is_odfc_direct(code); break;
        }
        if (accepted) return code;
    }
    fail(ErrorCode::Infeasible, "retry budget exhausted for the requested profile");
}

Matrix random_invertible(SplitMix64& rng, const AmbientSpace& ambient) {
    constexpr int kRetries = 4000;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        Matrix m(ambient.ctx, ambient.n, ambient.n);
        for (size_t r = 0; r < ambient.n; ++r)
            for (size_t c = 0; c < ambient.n; ++c) m.set(r, c, rng.element(ambient.q()));
        if (m.rank() == ambient.n) return m;
    }
    fail(ErrorCode::Infeasible, "could not sample an invertible matrix");
}

} // namespace flagcodes
