#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zzmod/exact_linalg.hpp"
#include "zzmod/poset.hpp"

namespace zzmod {

/// Pointwise free persistence module over Z on a zigzag shape: one rank per
/// vertex and one integer matrix per edge, shaped target-rank x source-rank
/// in the edge's orientation.
struct PersModule {
    ZigzagShape shape;
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> edges;

    std::size_t rank_at(int v) const { return ranks[static_cast<std::size_t>(v - 1)]; }
    const IntMatrix& edge(int i) const { return edges[static_cast<std::size_t>(i - 1)]; }
    IntMatrix& edge(int i) { return edges[static_cast<std::size_t>(i - 1)]; }
    bool is_zero() const;

    bool operator==(const PersModule&) const = default;
};

struct ValidationIssue {
    int edge_index;
    std::size_t expected_rows, expected_cols;
    std::size_t found_rows, found_cols;
    std::string to_string() const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
};

ValidationReport validate(const PersModule& m);
/// Throws DimensionError when validate(m) reports problems.
void ensure_valid(const PersModule& m);

/// Composite of the edge maps along the monotone run from x to y; identity
/// when x == y.  Throws NotComparableError when x <= y fails in the partial
/// order.
IntMatrix path_map(const PersModule& m, int x, int y);

/// Restriction to iv with vertices relabeled 1..(hi-lo+1).
PersModule restrict_to(const PersModule& m, Interval iv);

PersModule direct_sum(const PersModule& a, const PersModule& b);

PersModule interval_module(const ZigzagShape& shape, Interval iv, std::size_t rank);
PersModule zero_module(const ZigzagShape& shape);

PersModule mirror(const PersModule& m);

/// Per-vertex generator matrices in ambient coordinates, kept in canonical
/// column form.  Invariance (edges carry generators into generators) is a
/// semantic requirement checked by is_invariant, not by the type.
struct Submodule {
    std::vector<IntMatrix> gens;

    const IntMatrix& at(int v) const { return gens[static_cast<std::size_t>(v - 1)]; }
    IntMatrix& at(int v) { return gens[static_cast<std::size_t>(v - 1)]; }
    bool is_zero() const;
    bool operator==(const Submodule&) const = default;
};

Submodule zero_submodule(const PersModule& m);
Submodule full_submodule(const PersModule& m);
Submodule mirror(const Submodule& s);

bool is_invariant(const PersModule& m, const Submodule& s);

/// True iff every path map pointing toward x (in the total order) is
/// injective and every path map pointing away from x is surjective.
bool has_peak(const PersModule& m, int x);

/// Support of a submodule: the vertex range with nonzero generators, or
/// nullopt for the zero submodule or a gapped (non-interval) support.
std::optional<Interval> support_of(const Submodule& s);

/// The submodule re-expressed as a module in its own generator
/// coordinates.  Requires invariance; edge matrices are the unique
/// solutions of gens[tgt] * e = edge * gens[src].
PersModule abstract_submodule(const PersModule& m, const Submodule& s);

/// Composes an inner submodule (of abstract_submodule(m, outer)) back into
/// ambient coordinates.
Submodule push_through(const Submodule& outer, const Submodule& inner);

/// Internal direct sum of submodules: concatenated generators, canonical.
Submodule merge_submodules(const PersModule& m, const std::vector<Submodule>& parts);

struct Decomposition {
    std::vector<Submodule> summands;
};

struct Bar {
    Interval iv;
    std::size_t rank = 1;
    bool operator==(const Bar&) const = default;
    auto operator<=>(const Bar&) const = default;
};

/// Multiset of bars; equality is order-free and rank-1 normalized.
struct Barcode {
    std::vector<Bar> bars;
};

} // namespace zzmod
