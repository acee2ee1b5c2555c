#include "zzmod/poset.hpp"

#include <string>
#include <utility>

namespace zzmod {

ZigzagShape::ZigzagShape(std::vector<Direction> orientations)
    : n_(static_cast<int>(orientations.size()) + 1),
      orientations_(std::move(orientations)) {}

Direction ZigzagShape::orientation(int i) const {
    if (i < 1 || i >= n_) throw DimensionError("edge index out of range");
    return orientations_[static_cast<std::size_t>(i - 1)];
}

int ZigzagShape::edge_source(int i) const {
    return orientation(i) == Direction::Forward ? i : i + 1;
}

int ZigzagShape::edge_target(int i) const {
    return orientation(i) == Direction::Forward ? i + 1 : i;
}

bool ZigzagShape::leq(int x, int y) const {
    require_vertex(x);
    require_vertex(y);
    if (x == y) return true;
    if (x < y) {
        for (int i = x; i < y; ++i)
            if (orientation(i) != Direction::Forward) return false;
        return true;
    }
    for (int i = y; i < x; ++i)
        if (orientation(i) != Direction::Backward) return false;
    return true;
}

std::vector<int> ZigzagShape::extrema() const {
    std::vector<int> out;
    out.push_back(1);
    for (int v = 2; v < n_; ++v)
        if (orientation(v - 1) != orientation(v)) out.push_back(v);
    if (n_ > 1) out.push_back(n_);
    return out;
}

bool ZigzagShape::is_total_order() const {
    for (Direction d : orientations_)
        if (d != Direction::Forward) return false;
    return true;
}

void ZigzagShape::require_vertex(int v) const {
    if (!valid_vertex(v))
        throw DimensionError("vertex " + std::to_string(v) + " out of range 1.." +
                             std::to_string(n_));
}

void ZigzagShape::require_interval(Interval iv) const {
    if (!(1 <= iv.lo && iv.lo <= iv.hi && iv.hi <= n_))
        throw DimensionError("invalid interval [" + std::to_string(iv.lo) + "," +
                             std::to_string(iv.hi) + "] in 1.." + std::to_string(n_));
}

ZigzagShape make_shape(std::vector<Direction> orientations) {
    return ZigzagShape(std::move(orientations));
}

ZigzagShape mirror(const ZigzagShape& shape) {
    std::vector<Direction> rev(shape.orientations().rbegin(), shape.orientations().rend());
    for (Direction& d : rev)
        d = d == Direction::Forward ? Direction::Backward : Direction::Forward;
    return ZigzagShape(std::move(rev));
}

Interval mirror(Interval iv, int n) { return {n + 1 - iv.hi, n + 1 - iv.lo}; }

bool is_sink_in(const ZigzagShape& shape, Interval iv, int v) {
    const bool left_in = v == iv.lo || shape.orientation(v - 1) == Direction::Forward;
    const bool right_in = v == iv.hi || shape.orientation(v) == Direction::Backward;
    return left_in && right_in;
}

bool is_source_in(const ZigzagShape& shape, Interval iv, int v) {
    const bool left_out = v == iv.lo || shape.orientation(v - 1) == Direction::Backward;
    const bool right_out = v == iv.hi || shape.orientation(v) == Direction::Forward;
    return left_out && right_out;
}

SegmentEnds segment_sources_sinks(const ZigzagShape& shape, Interval iv) {
    shape.require_interval(iv);
    SegmentEnds ends;
    for (int v = iv.lo; v <= iv.hi; ++v) {
        if (is_source_in(shape, iv, v)) ends.sources.push_back(v);
        if (is_sink_in(shape, iv, v)) ends.sinks.push_back(v);
    }
    return ends;
}

int sink_rightward(const ZigzagShape& shape, Interval iv, int v) {
    int w = v;
    while (w < iv.hi && shape.orientation(w) == Direction::Forward) ++w;
    return w;
}

int sink_leftward(const ZigzagShape& shape, Interval iv, int v) {
    int w = v;
    while (w > iv.lo && shape.orientation(w - 1) == Direction::Backward) --w;
    return w;
}

} // namespace zzmod
