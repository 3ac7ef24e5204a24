#pragma once

#include <cstdint>

#include "flags.hpp"

namespace flagcodes {

/// Deterministic 64-bit generator (SplitMix64). All artifact randomness
/// flows through this one scheme so that identical seeds reproduce
/// identical codes; field elements are drawn as next() mod q.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint16_t element(unsigned q) { return static_cast<uint16_t>(next() % q); }

    /// Uniform value in [0, bound).
    uint64_t below(uint64_t bound) { return next() % bound; }

private:
    uint64_t state_;
};

enum class RandomProfile { Generic, Disjoint, OdfcAttempt };

RandomProfile parse_profile(const std::string& name);

/// A random full-rank t_r×n matrix sampled per flag; the flag is the chain
/// of leading-row prefixes. Collisions retry, and profile filters
/// (disjointness or the optimum-distance check) retry the whole code.
/// Infeasible once the retry budget is exhausted.
FlagCode random_flagcode(uint64_t seed, const AmbientSpace& ambient,
                         const std::vector<size_t>& type_dims, size_t size,
                         RandomProfile profile = RandomProfile::Generic);

/// Random flag built from `rng`; shared by the code generator and the
/// property-test helpers.
Flag random_flag(SplitMix64& rng, const TypeVector& typevec);

/// Random invertible n×n matrix by rejection sampling.
Matrix random_invertible(SplitMix64& rng, const AmbientSpace& ambient);

} // namespace flagcodes
