#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zzmod/persmod.hpp"

namespace zzmod {

enum class FailureKind {
    DirectSumColumnCount, // summand columns at a vertex do not add to the rank
    DirectSumNotUnimodular,
    NotInvariant,
    SupportGap,
    RankNotConstant,
    EdgeNotIsomorphism,
};

std::string to_string(FailureKind k);

struct VerifyFailure {
    FailureKind kind;
    std::optional<int> vertex;
    std::optional<std::size_t> summand;
    IntMatrix witness;
};

struct VerifyReport {
    bool ok = true;
    std::vector<VerifyFailure> failures;
};

/// Independent certification of a claimed decomposition: internal direct
/// sum at every vertex, invariance of each summand, and projective
/// constant structure (interval support, constant rank, unimodular
/// internal transition on the generators).
VerifyReport verify_decomposition(const PersModule& m, const Decomposition& d);

/// Weaker check for splits whose parts need not be projective constant
/// (peak splits): invariance of every part plus a unimodular column
/// concatenation at each vertex.
bool is_internal_direct_sum(const PersModule& m, const std::vector<Submodule>& parts);

/// Multiset of (support interval, generator rank) per summand; requires a
/// verified decomposition.
Barcode barcode_of(const Decomposition& d);

/// Rank-1 normalized bars, sorted: the canonical form compared by
/// barcodes_equal.
Barcode normalize(const Barcode& b);

bool barcodes_equal(const Barcode& a, const Barcode& b);

} // namespace zzmod
