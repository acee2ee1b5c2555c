#pragma once

#include <optional>

#include "zzmod/colimit_pcc.hpp"
#include "zzmod/verifier.hpp"

namespace zzmod {

/// Either a verified rank-1 interval decomposition with its barcode, or the
/// lexicographically first failing pair of the projective colimit
/// conditions as a refusal certificate.
struct DecompOutcome {
    std::optional<Decomposition> decomposition;
    std::optional<Barcode> barcode;
    std::optional<PairReport> refusal;

    bool success() const { return decomposition.has_value(); }
};

DecompOutcome decompose(const PersModule& m);

struct PeakSplitPart {
    Submodule sub;     // generators inside m
    PersModule module; // the summand in its own coordinates
};

/// F = G (+) H (+) J with H peaked at x, G supported before x and J after.
struct PeakSplitResult {
    PeakSplitPart g, h, j;
};

/// Splits off everything that dies at x by decomposing the two restrictions
/// [1,x] and [x,n] and regrouping their summands.  Requires an interior
/// vertex and a module satisfying the PCC; splitting failures surface as
/// PccViolationError.
PeakSplitResult peak_split(const PersModule& m, int x);

/// The three A_3 configurations with a peak in the middle.  Case 1 is the
/// monotone shape (either direction), case 2 has a sink at 2 with both
/// edges injective, case 3 a source at 2 with both edges surjective.
Decomposition decompose_a3_case1(const PersModule& m);
Decomposition decompose_a3_case2(const PersModule& m);
Decomposition decompose_a3_case3(const PersModule& m);

/// Splits every rank-r summand into r rank-1 summands by transporting one
/// basis choice across the support through the summand's internal
/// isomorphisms.
Decomposition refine_to_rank_one(const PersModule& m, const Decomposition& d);

/// Extends a decomposition of restrict_to(m, iv) across monotone boundary
/// runs: preimages when the run maps injectively into the boundary, images
/// when it maps surjectively out of it.  The result is verified; an inner
/// decomposition incompatible with the boundary raises PreconditionError.
Decomposition extend_summand(const PersModule& m, Interval iv,
                             const Decomposition& inner);

/// Full projective constant decomposition (summands of any rank, unsorted).
/// Assumes the PCC; exposed for the refinement and verification pipeline.
std::vector<Submodule> decompose_projective_constant(const PersModule& m);

/// Deterministic summand order: (support lo, hi, rank), then generator
/// entries lexicographically.
void sort_decomposition(Decomposition& d);

} // namespace zzmod
