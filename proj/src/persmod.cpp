#include "zzmod/persmod.hpp"

#include <algorithm>

namespace zzmod {

bool PersModule::is_zero() const {
    return std::all_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r == 0; });
}

std::string ValidationIssue::to_string() const {
    return "edge " + std::to_string(edge_index) + ": expected " +
           std::to_string(expected_rows) + "x" + std::to_string(expected_cols) +
           ", found " + std::to_string(found_rows) + "x" + std::to_string(found_cols);
}

ValidationReport validate(const PersModule& m) {
    ValidationReport rep;
    const int n = m.shape.vertex_count();
    if (m.ranks.size() != static_cast<std::size_t>(n) ||
        m.edges.size() != static_cast<std::size_t>(n - 1)) {
        rep.ok = false;
        rep.issues.push_back({0, static_cast<std::size_t>(n),
                              static_cast<std::size_t>(n - 1), m.ranks.size(),
                              m.edges.size()});
        return rep;
    }
    for (int i = 1; i < n; ++i) {
        const std::size_t er = m.rank_at(m.shape.edge_target(i));
        const std::size_t ec = m.rank_at(m.shape.edge_source(i));
        if (m.edge(i).rows() != er || m.edge(i).cols() != ec) {
            rep.ok = false;
            rep.issues.push_back({i, er, ec, m.edge(i).rows(), m.edge(i).cols()});
        }
    }
    return rep;
}

void ensure_valid(const PersModule& m) {
    ValidationReport rep = validate(m);
    if (!rep.ok) {
        std::string msg = "module dimension mismatch:";
        for (const auto& is : rep.issues) msg += " " + is.to_string() + ";";
        throw DimensionError(msg);
    }
}

IntMatrix path_map(const PersModule& m, int x, int y) {
    if (!m.shape.leq(x, y))
        throw NotComparableError("no morphism " + std::to_string(x) + " -> " +
                                 std::to_string(y));
    IntMatrix p = IntMatrix::identity(m.rank_at(x));
    if (x < y) {
        for (int i = x; i < y; ++i) p = m.edge(i) * p;
    } else {
        for (int i = x - 1; i >= y; --i) p = m.edge(i) * p;
    }
    return p;
}

PersModule restrict_to(const PersModule& m, Interval iv) {
    m.shape.require_interval(iv);
    PersModule r;
    std::vector<Direction> dirs;
    for (int i = iv.lo; i < iv.hi; ++i) dirs.push_back(m.shape.orientation(i));
    r.shape = ZigzagShape(std::move(dirs));
    for (int v = iv.lo; v <= iv.hi; ++v) r.ranks.push_back(m.rank_at(v));
    for (int i = iv.lo; i < iv.hi; ++i) r.edges.push_back(m.edge(i));
    return r;
}

PersModule direct_sum(const PersModule& a, const PersModule& b) {
    if (a.shape != b.shape) throw ShapeMismatchError("direct_sum: shapes differ");
    PersModule c;
    c.shape = a.shape;
    for (std::size_t i = 0; i < a.ranks.size(); ++i)
        c.ranks.push_back(a.ranks[i] + b.ranks[i]);
    for (std::size_t i = 0; i < a.edges.size(); ++i)
        c.edges.push_back(block_diag(a.edges[i], b.edges[i]));
    return c;
}

PersModule interval_module(const ZigzagShape& shape, Interval iv, std::size_t rank) {
    shape.require_interval(iv);
    PersModule m;
    m.shape = shape;
    const int n = shape.vertex_count();
    for (int v = 1; v <= n; ++v) m.ranks.push_back(iv.contains(v) ? rank : 0);
    for (int i = 1; i < n; ++i) {
        if (iv.contains(i) && iv.contains(i + 1)) {
            m.edges.push_back(IntMatrix::identity(rank));
        } else {
            m.edges.push_back(IntMatrix(m.rank_at(shape.edge_target(i)),
                                        m.rank_at(shape.edge_source(i))));
        }
    }
    return m;
}

PersModule zero_module(const ZigzagShape& shape) {
    PersModule m;
    m.shape = shape;
    m.ranks.assign(static_cast<std::size_t>(shape.vertex_count()), 0);
    m.edges.assign(static_cast<std::size_t>(shape.edge_count()), IntMatrix());
    return m;
}

PersModule mirror(const PersModule& m) {
    PersModule r;
    r.shape = mirror(m.shape);
    r.ranks.assign(m.ranks.rbegin(), m.ranks.rend());
    r.edges.assign(m.edges.rbegin(), m.edges.rend());
    return r;
}

bool Submodule::is_zero() const {
    return std::all_of(gens.begin(), gens.end(),
                       [](const IntMatrix& g) { return g.cols() == 0; });
}

Submodule zero_submodule(const PersModule& m) {
    Submodule s;
    for (std::size_t r : m.ranks) s.gens.emplace_back(r, 0);
    return s;
}

Submodule full_submodule(const PersModule& m) {
    Submodule s;
    for (std::size_t r : m.ranks) s.gens.push_back(IntMatrix::identity(r));
    return s;
}

Submodule mirror(const Submodule& s) {
    Submodule r;
    r.gens.assign(s.gens.rbegin(), s.gens.rend());
    return r;
}

bool is_invariant(const PersModule& m, const Submodule& s) {
    if (s.gens.size() != m.ranks.size()) return false;
    for (std::size_t i = 0; i < s.gens.size(); ++i)
        if (s.gens[i].rows() != m.ranks[i]) return false;
    for (int i = 1; i < m.shape.vertex_count(); ++i) {
        const int src = m.shape.edge_source(i), tgt = m.shape.edge_target(i);
        if (!solve(s.at(tgt), m.edge(i) * s.at(src))) return false;
    }
    return true;
}

bool has_peak(const PersModule& m, int x) {
    m.shape.require_vertex(x);
    const int n = m.shape.vertex_count();
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v) {
            if (u == v || !m.shape.leq(u, v)) continue;
            const bool need_inj = (u <= v && v <= x) || (x <= v && v <= u);
            const bool need_surj = (v <= u && u <= x) || (x <= u && u <= v);
            if (!need_inj && !need_surj) continue;
            IntMatrix p = path_map(m, u, v);
            if (need_inj && kernel_basis(p).cols() != 0) return false;
            if (need_surj && !cokernel_invariants(p).is_trivial()) return false;
        }
    return true;
}

std::optional<Interval> support_of(const Submodule& s) {
    int lo = 0, hi = 0;
    for (std::size_t i = 0; i < s.gens.size(); ++i) {
        if (s.gens[i].cols() == 0) continue;
        const int v = static_cast<int>(i) + 1;
        if (lo == 0) lo = v;
        else if (v != hi + 1) return std::nullopt; // gap
        hi = v;
    }
    if (lo == 0) return std::nullopt;
    return Interval{lo, hi};
}

PersModule abstract_submodule(const PersModule& m, const Submodule& s) {
    PersModule a;
    a.shape = m.shape;
    for (const IntMatrix& g : s.gens) a.ranks.push_back(g.cols());
    for (int i = 1; i < m.shape.vertex_count(); ++i) {
        const int src = m.shape.edge_source(i), tgt = m.shape.edge_target(i);
        auto e = solve(s.at(tgt), m.edge(i) * s.at(src));
        if (!e)
            throw InternalCheckError("abstract_submodule: generators not invariant");
        a.edges.push_back(std::move(*e));
    }
    return a;
}

Submodule push_through(const Submodule& outer, const Submodule& inner) {
    if (outer.gens.size() != inner.gens.size())
        throw DimensionError("push_through: vertex count mismatch");
    Submodule s;
    for (std::size_t i = 0; i < outer.gens.size(); ++i)
        s.gens.push_back(hnf_cols(outer.gens[i] * inner.gens[i]));
    return s;
}

Submodule merge_submodules(const PersModule& m, const std::vector<Submodule>& parts) {
    Submodule s = zero_submodule(m);
    for (const Submodule& p : parts)
        for (std::size_t i = 0; i < s.gens.size(); ++i)
            s.gens[i] = hconcat(s.gens[i], p.gens[i]);
    for (IntMatrix& g : s.gens) g = hnf_cols(g);
    return s;
}

} // namespace zzmod
