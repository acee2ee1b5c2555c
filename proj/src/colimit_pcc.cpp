#include "zzmod/colimit_pcc.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zzmod {

ColimitPresentation colimit_presentation(const PersModule& m, Interval iv) {
    m.shape.require_interval(iv);
    const ZigzagShape& sh = m.shape;

    ColimitPresentation pres;
    std::map<int, std::size_t> sink_offset;
    for (int v = iv.lo; v <= iv.hi; ++v) {
        if (!is_sink_in(sh, iv, v)) continue;
        sink_offset[v] = pres.gen_rank;
        pres.sinks.push_back(v);
        pres.gen_rank += m.rank_at(v);
    }

    std::size_t rel_cols = 0;
    for (int z = iv.lo + 1; z < iv.hi; ++z)
        if (is_source_in(sh, iv, z)) rel_cols += m.rank_at(z);

    pres.relations = IntMatrix(pres.gen_rank, rel_cols);
    std::size_t col = 0;
    for (int z = iv.lo + 1; z < iv.hi; ++z) {
        if (!is_source_in(sh, iv, z)) continue;
        const int sl = sink_leftward(sh, iv, z);
        const int sr = sink_rightward(sh, iv, z);
        pres.relations.place(sink_offset.at(sl), col, path_map(m, z, sl));
        pres.relations.place(sink_offset.at(sr), col, path_map(m, z, sr).negated());
        col += m.rank_at(z);
    }

    const int sx = sink_rightward(sh, iv, iv.lo);
    pres.into_from_x = IntMatrix(pres.gen_rank, m.rank_at(iv.lo));
    pres.into_from_x.place(sink_offset.at(sx), 0, path_map(m, iv.lo, sx));

    const int sy = sink_leftward(sh, iv, iv.hi);
    pres.into_from_y = IntMatrix(pres.gen_rank, m.rank_at(iv.hi));
    pres.into_from_y.place(sink_offset.at(sy), 0, path_map(m, iv.hi, sy));

    return pres;
}

int PairReport::first_failing_condition() const {
    if (!c1.pass()) return 1;
    if (!c2.pass()) return 2;
    if (!c3.pass()) return 3;
    if (!c4.pass()) return 4;
    return 0;
}

const PairReport* PccReport::first_failure() const {
    for (const PairReport& p : pairs)
        if (!p.pass()) return &p;
    return nullptr;
}

PairReport check_pair(const PersModule& m, int x, int y) {
    if (x > y) throw PreconditionError("check_pair: x must precede y");
    ColimitPresentation p = colimit_presentation(m, {x, y});
    PairReport rep;
    rep.x = x;
    rep.y = y;
    rep.c1 = {cokernel_invariants(p.relations)};
    rep.c2 = {cokernel_invariants(hconcat(p.relations, p.into_from_x))};
    rep.c3 = {cokernel_invariants(hconcat(p.relations, p.into_from_y))};
    rep.c4 = {cokernel_invariants(hconcat(hconcat(p.relations, p.into_from_x), p.into_from_y))};
    return rep;
}

namespace {

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> ps;
    for (int x = 1; x <= n; ++x)
        for (int y = x; y <= n; ++y) ps.emplace_back(x, y);
    return ps;
}

PccReport assemble(const std::vector<PairReport>& reports) {
    PccReport rep;
    rep.pairs = reports;
    rep.overall = std::all_of(rep.pairs.begin(), rep.pairs.end(),
                              [](const PairReport& p) { return p.pass(); });
    return rep;
}

} // namespace

PccReport check_all(const PersModule& m) {
    const auto pairs = all_pairs(m.shape.vertex_count());
    std::vector<PairReport> reports(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < pairs.size(); ++i)
        reports[i] = check_pair(m, pairs[i].first, pairs[i].second);
    return assemble(reports);
}

PccReport check_all_serial(const PersModule& m) {
    const auto pairs = all_pairs(m.shape.vertex_count());
    std::vector<PairReport> reports(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        reports[i] = check_pair(m, pairs[i].first, pairs[i].second);
    return assemble(reports);
}

OracleAnswer interval_colimit_oracle(const ZigzagShape& shape, Interval iv_support,
                                     std::size_t rank, Interval iv_query) {
    shape.require_interval(iv_support);
    shape.require_interval(iv_query);

    const int qx = iv_query.lo, qy = iv_query.hi;
    const int jlo = std::max(iv_support.lo, qx), jhi = std::min(iv_support.hi, qy);
    const bool in_support_x = jlo <= jhi && jlo <= qx && qx <= jhi;
    const bool in_support_y = jlo <= jhi && jlo <= qy && qy <= jhi;

    std::size_t c = 0;
    if (jlo <= jhi && rank > 0) {
        // Peel source endpoints: runs hanging off an endpoint source do not
        // change the colimit of an interval module.
        int lo = qx, hi = qy;
        int slo = jlo, shi = jhi;
        while (true) {
            if (slo > shi) break; // support gone
            if (lo == hi) {
                c = (slo <= lo && lo <= shi) ? rank : 0;
                break;
            }
            bool monotone = true;
            for (int i = lo; i < hi - 1 && monotone; ++i)
                monotone = shape.orientation(i) == shape.orientation(i + 1);
            if (monotone) {
                const int sink =
                    shape.orientation(lo) == Direction::Forward ? hi : lo;
                c = (slo <= sink && sink <= shi) ? rank : 0;
                break;
            }
            if (shape.orientation(lo) == Direction::Forward) { // lo is a source
                lo = sink_rightward(shape, {lo, hi}, lo);
                slo = std::max(slo, lo);
                continue;
            }
            if (shape.orientation(hi - 1) == Direction::Backward) { // hi is a source
                hi = sink_leftward(shape, {lo, hi}, hi);
                shi = std::min(shi, hi);
                continue;
            }
            // Both endpoints are sinks; scan the segment's extrema in the
            // support window.
            int zs = 0, zt = 0;
            for (int v = lo; v <= hi; ++v) {
                const bool ext = v == lo || v == hi ||
                                 shape.orientation(v - 1) != shape.orientation(v);
                if (!ext || v < slo || v > shi) continue;
                if (zs == 0) zs = v;
                zt = v;
            }
            if (zs == 0) {
                c = 0; // support meets no extremum: everything dies inside a run
            } else {
                const bool s_sink = is_sink_in(shape, {lo, hi}, zs);
                const bool t_sink = is_sink_in(shape, {lo, hi}, zt);
                c = (s_sink && t_sink) ? rank : 0;
            }
            break;
        }
    }

    auto free_part = [](std::size_t k) { return CokerInvariants{k, {}}; };
    OracleAnswer ans;
    ans.colim = free_part(c);
    ans.coker_x = free_part(in_support_x && c > 0 ? 0 : c);
    ans.coker_y = free_part(in_support_y && c > 0 ? 0 : c);
    ans.coker_xy = free_part((in_support_x || in_support_y) && c > 0 ? 0 : c);
    return ans;
}

} // namespace zzmod
