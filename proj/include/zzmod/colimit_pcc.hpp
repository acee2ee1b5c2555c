#pragma once

#include <vector>

#include "zzmod/persmod.hpp"

namespace zzmod {

/// Presentation of colim(F|[x,y]) as a cokernel: generators are the direct
/// sum of the segment's sink modules; one relation block per interior
/// source equates its two sink-ward path-map images.  Endpoint sources have
/// a single sink-ward direction and contribute nothing.
struct ColimitPresentation {
    std::size_t gen_rank = 0;
    IntMatrix relations;
    IntMatrix into_from_x;
    IntMatrix into_from_y;
    std::vector<int> sinks;
};

ColimitPresentation colimit_presentation(const PersModule& m, Interval iv);

struct ConditionResult {
    CokerInvariants invariants;
    bool pass() const { return invariants.is_free(); }
    bool operator==(const ConditionResult&) const = default;
};

struct PairReport {
    int x = 0, y = 0;
    ConditionResult c1, c2, c3, c4;
    bool pass() const { return c1.pass() && c2.pass() && c3.pass() && c4.pass(); }
    /// 1-based index of the first failing condition, 0 when all pass.
    int first_failing_condition() const;
    bool operator==(const PairReport&) const = default;
};

struct PccReport {
    std::vector<PairReport> pairs; // lexicographic (x, y)
    bool overall = true;
    const PairReport* first_failure() const;
};

PairReport check_pair(const PersModule& m, int x, int y);

/// All pairs x <= y in the total order; pair computations are independent
/// and run under OpenMP, assembled in lexicographic order regardless of
/// scheduling.
PccReport check_all(const PersModule& m);
/// Single-threaded reference; must agree entry-for-entry with check_all.
PccReport check_all_serial(const PersModule& m);

/// Closed-form colimit and cokernel invariants for an interval module
/// F(iv_support, Z^rank) restricted to [iv_query.lo, iv_query.hi].
struct OracleAnswer {
    CokerInvariants colim;
    CokerInvariants coker_x;
    CokerInvariants coker_y;
    CokerInvariants coker_xy;
    bool operator==(const OracleAnswer&) const = default;
};

OracleAnswer interval_colimit_oracle(const ZigzagShape& shape, Interval iv_support,
                                     std::size_t rank, Interval iv_query);

} // namespace zzmod
