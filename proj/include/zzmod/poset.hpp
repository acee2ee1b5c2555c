#pragma once

#include <compare>
#include <vector>

#include "zzmod/errors.hpp"

namespace zzmod {

enum class Direction { Forward, Backward };

/// Closed interval [lo, hi] of vertices in the associated total order.
/// Contiguity is all an interval needs here: in a zigzag poset the
/// intervals are exactly the contiguous vertex ranges.
struct Interval {
    int lo = 1;
    int hi = 1;

    bool contains(int v) const { return lo <= v && v <= hi; }
    int length() const { return hi - lo + 1; }
    bool operator==(const Interval&) const = default;
    auto operator<=>(const Interval&) const = default;
};

/// Finite zigzag poset on vertices 1..n arranged on a line, one orientation
/// per consecutive edge.  The associated total order is the numeric order of
/// the labels; the partial order is generated by the oriented edges.
class ZigzagShape {
public:
    ZigzagShape() = default;
    explicit ZigzagShape(std::vector<Direction> orientations);

    int vertex_count() const { return n_; }
    int edge_count() const { return n_ - 1; }
    const std::vector<Direction>& orientations() const { return orientations_; }

    /// Orientation of the edge between vertices i and i+1, 1 <= i < n.
    Direction orientation(int i) const;

    /// Source and target of edge i under its orientation.
    int edge_source(int i) const;
    int edge_target(int i) const;

    /// Partial order: x <= y iff x and y share a monotone run whose edges
    /// all point from x to y.
    bool leq(int x, int y) const;

    /// Endpoints plus every vertex where the orientation alternates, in
    /// ascending order.
    std::vector<int> extrema() const;

    bool is_total_order() const;

    Interval full() const { return {1, n_}; }
    bool valid_vertex(int v) const { return 1 <= v && v <= n_; }
    void require_vertex(int v) const;
    void require_interval(Interval iv) const;

    bool operator==(const ZigzagShape&) const = default;

private:
    int n_ = 1;
    std::vector<Direction> orientations_;
};

ZigzagShape make_shape(std::vector<Direction> orientations);

/// Shape read right-to-left: vertex x maps to n+1-x and every edge flips.
ZigzagShape mirror(const ZigzagShape& shape);
Interval mirror(Interval iv, int n);

struct SegmentEnds {
    std::vector<int> sources;
    std::vector<int> sinks;
};

/// Sources and sinks of the restriction of the shape to iv.  A single
/// vertex is both.
SegmentEnds segment_sources_sinks(const ZigzagShape& shape, Interval iv);

bool is_sink_in(const ZigzagShape& shape, Interval iv, int v);
bool is_source_in(const ZigzagShape& shape, Interval iv, int v);

/// The sink reached from v by following its rightward monotone run inside
/// iv; v itself when the run immediately turns back.
int sink_rightward(const ZigzagShape& shape, Interval iv, int v);
/// Dual: sink reached walking leftward.
int sink_leftward(const ZigzagShape& shape, Interval iv, int v);

} // namespace zzmod
