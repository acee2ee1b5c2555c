#pragma once

#include <cstdint>

#include "zzmod/persmod.hpp"

namespace zzmod {

/// SplitMix64: the fixed, documented PRNG behind all seeded generation.
/// The seed schedule (one stream per generator call, draws in declaration
/// order) is part of the external contract; identical seeds reproduce
/// identical instances byte for byte on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi], inclusive.
    long range(long lo, long hi);

private:
    std::uint64_t state_;
};

struct GeneratedInstance {
    PersModule module;
    Barcode truth; // rank-1 bars
};

/// Direct sum of uniformly drawn interval modules, conjugated by per-vertex
/// unimodular scrambles.  A bar drawn with rank r contributes r rank-1 bars
/// to the ground truth.
GeneratedInstance gen_decomposable(std::uint64_t seed, const ZigzagShape& shape,
                                   int max_bars, int max_rank, int scramble_level);

/// Edge matrices with uniform entries in [-entry_bound, entry_bound] and
/// uniform vertex ranks in [0, max_rank]; no decomposability guarantee.
PersModule gen_adversarial(std::uint64_t seed, const ZigzagShape& shape, int max_rank,
                           int entry_bound);

/// Product of `level` random elementary matrices (row add with coefficient
/// in [-2,2], swap, negate).
IntMatrix random_unimodular(std::uint64_t seed, std::size_t n, int level);

/// A unimodular scramble together with its exact inverse, advanced off an
/// existing stream.
struct UnimodularPair {
    IntMatrix u, u_inv;
};
UnimodularPair random_unimodular_pair(SplitMix64& rng, std::size_t n, int level);

/// Conjugates every edge by fresh per-vertex scrambles drawn from `rng`:
/// the result is isomorphic to m.
PersModule scramble(SplitMix64& rng, const PersModule& m, int level);

} // namespace zzmod
