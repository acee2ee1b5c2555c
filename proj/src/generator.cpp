#include "zzmod/generator.hpp"

#include <algorithm>

namespace zzmod {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    // rejection keeps the draw exactly uniform
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

long SplitMix64::range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

UnimodularPair random_unimodular_pair(SplitMix64& rng, std::size_t n, int level) {
    UnimodularPair p{IntMatrix::identity(n), IntMatrix::identity(n)};
    if (n == 0) return p;
    for (int step = 0; step < level; ++step) {
        const long op = rng.range(0, 2);
        if (op == 0 && n >= 2) { // row add
            const std::size_t i = rng.below(n);
            std::size_t j = rng.below(n - 1);
            if (j >= i) ++j;
            const Int c(rng.range(-2, 2));
            p.u.add_row_multiple(i, j, c);
            p.u_inv.add_col_multiple(j, i, -c);
        } else if (op == 1 && n >= 2) { // swap
            const std::size_t i = rng.below(n);
            std::size_t j = rng.below(n - 1);
            if (j >= i) ++j;
            p.u.swap_rows(i, j);
            p.u_inv.swap_cols(i, j);
        } else { // negate
            const std::size_t i = rng.below(n);
            p.u.negate_row(i);
            p.u_inv.negate_col(i);
        }
    }
    return p;
}

IntMatrix random_unimodular(std::uint64_t seed, std::size_t n, int level) {
    SplitMix64 rng(seed);
    return random_unimodular_pair(rng, n, level).u;
}

PersModule scramble(SplitMix64& rng, const PersModule& m, int level) {
    std::vector<UnimodularPair> per_vertex;
    per_vertex.reserve(m.ranks.size());
    for (std::size_t r : m.ranks)
        per_vertex.push_back(random_unimodular_pair(rng, r, level));
    PersModule out = m;
    for (int i = 1; i < m.shape.vertex_count(); ++i) {
        const std::size_t src = static_cast<std::size_t>(m.shape.edge_source(i)) - 1;
        const std::size_t tgt = static_cast<std::size_t>(m.shape.edge_target(i)) - 1;
        out.edge(i) = per_vertex[tgt].u * m.edge(i) * per_vertex[src].u_inv;
    }
    return out;
}

GeneratedInstance gen_decomposable(std::uint64_t seed, const ZigzagShape& shape,
                                   int max_bars, int max_rank, int scramble_level) {
    if (max_bars < 1) throw PreconditionError("gen_decomposable: max_bars must be >= 1");
    if (max_rank < 1) throw PreconditionError("gen_decomposable: max_rank must be >= 1");
    SplitMix64 rng(seed);
    const int n = shape.vertex_count();

    GeneratedInstance inst;
    inst.module = zero_module(shape);
    const long bars = rng.range(1, max_bars);
    for (long b = 0; b < bars; ++b) {
        const int lo = static_cast<int>(rng.range(1, n));
        const int hi = static_cast<int>(rng.range(lo, n));
        const std::size_t r = static_cast<std::size_t>(rng.range(1, max_rank));
        inst.module = direct_sum(inst.module, interval_module(shape, {lo, hi}, r));
        for (std::size_t k = 0; k < r; ++k) inst.truth.bars.push_back({{lo, hi}, 1});
    }
    std::sort(inst.truth.bars.begin(), inst.truth.bars.end());
    inst.module = scramble(rng, inst.module, scramble_level);
    return inst;
}

PersModule gen_adversarial(std::uint64_t seed, const ZigzagShape& shape, int max_rank,
                           int entry_bound) {
    if (entry_bound < 1)
        throw PreconditionError("gen_adversarial: entry_bound must be >= 1");
    SplitMix64 rng(seed);
    PersModule m;
    m.shape = shape;
    for (int v = 1; v <= shape.vertex_count(); ++v)
        m.ranks.push_back(static_cast<std::size_t>(rng.range(0, max_rank)));
    for (int i = 1; i < shape.vertex_count(); ++i) {
        IntMatrix e(m.rank_at(shape.edge_target(i)), m.rank_at(shape.edge_source(i)));
        for (std::size_t r = 0; r < e.rows(); ++r)
            for (std::size_t c = 0; c < e.cols(); ++c)
                e.at(r, c) = rng.range(-entry_bound, entry_bound);
        m.edges.push_back(std::move(e));
    }
    return m;
}

} // namespace zzmod
