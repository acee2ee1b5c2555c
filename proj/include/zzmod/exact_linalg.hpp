#pragma once

#include <optional>
#include <vector>

#include "zzmod/int_matrix.hpp"

namespace zzmod {

/// Smith normal form u*a*v == s with u, v unimodular and s diagonal with
/// nonnegative entries in a divisibility chain, zeros last.  The exact
/// inverses of the transforms are tracked during the reduction; several
/// constructions (complements, sections) read them directly.
struct SnfResult {
    IntMatrix u, s, v;
    IntMatrix u_inv, v_inv;

    std::size_t rank() const;
    const Int& diag(std::size_t i) const { return s.at(i, i); }
};

/// Cokernel of a map into Z^rows, up to isomorphism: a free part plus
/// cyclic torsion factors in a divisibility chain.  Over Z the cokernel is
/// projective exactly when the torsion list is empty.
struct CokerInvariants {
    std::size_t free_rank = 0;
    std::vector<Int> torsion_factors;

    bool is_free() const { return torsion_factors.empty(); }
    bool is_trivial() const { return free_rank == 0 && torsion_factors.empty(); }
    bool operator==(const CokerInvariants&) const = default;
};

namespace testhook {
/// Deliberately corrupts snf output when set; only the selfcheck command's
/// failure-injection path flips it.
extern bool corrupt_snf;
} // namespace testhook

SnfResult snf(const IntMatrix& a);

/// Canonical column-style Hermite form of the column span: pivot rows
/// strictly increasing, pivots positive, entries left of a pivot in its row
/// reduced into [0, pivot).  Zero columns are dropped, so two matrices have
/// equal column span over Z iff their forms are identical.
IntMatrix hnf_cols(const IntMatrix& a);

/// Basis of {x : a*x == 0}, in canonical column form.
IntMatrix kernel_basis(const IntMatrix& a);

/// Basis of the column span of a; equals hnf_cols(a).
IntMatrix image_basis(const IntMatrix& a);

CokerInvariants cokernel_invariants(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Some x with a*x == b over Z, or nullopt when b is outside the span.
/// b may have several columns; the solve is all-or-nothing.
std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b);

/// Section psi of a surjection phi: phi*psi == identity.  The domain then
/// splits as ker(phi) (+) col(psi).  Throws NotSurjectiveError with the
/// offending invariants otherwise.
IntMatrix split_surjection(const IntMatrix& phi);

/// Basis c with col(g) (+) col(c) == Z^ambient_rank, taken as the trailing
/// columns of u^-1 from snf(g).  Requires the quotient to be free; throws
/// NotFreeQuotientError listing the torsion factors otherwise.
IntMatrix complement(const IntMatrix& g, std::size_t ambient_rank);

/// Complement of col(inner) inside col(outer); both live in the same
/// ambient space and col(inner) must lie in col(outer).
IntMatrix complement_within(const IntMatrix& inner, const IntMatrix& outer);

/// Basis of col(a) ∩ col(b) in canonical column form.
IntMatrix intersect(const IntMatrix& a, const IntMatrix& b);

/// Basis of {x : m*x ∈ col(b)}; always contains kernel_basis(m).
IntMatrix preimage(const IntMatrix& m, const IntMatrix& b);

bool is_unimodular(const IntMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination.  The 0x0
/// matrix has determinant 1.
Int det(const IntMatrix& a);

/// Inverse of a unimodular matrix (integer entries).
IntMatrix inverse_unimodular(const IntMatrix& a);

} // namespace zzmod
