#include "zzmod/verifier.hpp"

#include <algorithm>

namespace zzmod {

std::string to_string(FailureKind k) {
    switch (k) {
        case FailureKind::DirectSumColumnCount: return "direct_sum_column_count";
        case FailureKind::DirectSumNotUnimodular: return "direct_sum_not_unimodular";
        case FailureKind::NotInvariant: return "not_invariant";
        case FailureKind::SupportGap: return "support_gap";
        case FailureKind::RankNotConstant: return "rank_not_constant";
        case FailureKind::EdgeNotIsomorphism: return "edge_not_isomorphism";
    }
    return "unknown";
}

VerifyReport verify_decomposition(const PersModule& m, const Decomposition& d) {
    VerifyReport rep;
    const int n = m.shape.vertex_count();

    // (a) internal direct sum over Z at every vertex.
    for (int v = 1; v <= n; ++v) {
        IntMatrix all(m.rank_at(v), 0);
        for (const Submodule& s : d.summands) {
            if (s.gens.size() != static_cast<std::size_t>(n) ||
                s.at(v).rows() != m.rank_at(v)) {
                rep.ok = false;
                rep.failures.push_back({FailureKind::DirectSumColumnCount, v,
                                        std::nullopt, IntMatrix()});
                return rep;
            }
            all = hconcat(all, s.at(v));
        }
        if (all.cols() != m.rank_at(v)) {
            rep.ok = false;
            rep.failures.push_back(
                {FailureKind::DirectSumColumnCount, v, std::nullopt, all});
        } else if (!is_unimodular(all)) {
            rep.ok = false;
            rep.failures.push_back(
                {FailureKind::DirectSumNotUnimodular, v, std::nullopt, all});
        }
    }

    // (b) invariance, (c) projective constant structure per summand.
    for (std::size_t k = 0; k < d.summands.size(); ++k) {
        const Submodule& s = d.summands[k];
        if (!is_invariant(m, s)) {
            rep.ok = false;
            rep.failures.push_back({FailureKind::NotInvariant, std::nullopt, k,
                                    IntMatrix()});
            continue;
        }
        if (s.is_zero()) continue;
        auto sup = support_of(s);
        if (!sup) {
            rep.ok = false;
            rep.failures.push_back({FailureKind::SupportGap, std::nullopt, k,
                                    IntMatrix()});
            continue;
        }
        const std::size_t r = s.at(sup->lo).cols();
        bool constant = true;
        for (int v = sup->lo; v <= sup->hi; ++v)
            if (s.at(v).cols() != r) constant = false;
        if (!constant) {
            rep.ok = false;
            rep.failures.push_back({FailureKind::RankNotConstant, std::nullopt, k,
                                    IntMatrix()});
            continue;
        }
        for (int i = sup->lo; i < sup->hi; ++i) {
            const int src = m.shape.edge_source(i), tgt = m.shape.edge_target(i);
            auto t = solve(s.at(tgt), m.edge(i) * s.at(src));
            if (!t || t->rows() != t->cols() || !is_unimodular(*t)) {
                rep.ok = false;
                rep.failures.push_back({FailureKind::EdgeNotIsomorphism, i, k,
                                        t ? *t : IntMatrix()});
            }
        }
    }
    return rep;
}

bool is_internal_direct_sum(const PersModule& m, const std::vector<Submodule>& parts) {
    for (int v = 1; v <= m.shape.vertex_count(); ++v) {
        IntMatrix all(m.rank_at(v), 0);
        for (const Submodule& s : parts) {
            if (s.gens.size() != m.ranks.size() || s.at(v).rows() != m.rank_at(v))
                return false;
            all = hconcat(all, s.at(v));
        }
        if (all.cols() != m.rank_at(v) || !is_unimodular(all)) return false;
    }
    for (const Submodule& s : parts)
        if (!is_invariant(m, s)) return false;
    return true;
}

Barcode barcode_of(const Decomposition& d) {
    Barcode bc;
    for (const Submodule& s : d.summands) {
        auto sup = support_of(s);
        if (!sup) continue; // zero summands carry no bar
        bc.bars.push_back({*sup, s.at(sup->lo).cols()});
    }
    std::sort(bc.bars.begin(), bc.bars.end());
    return bc;
}

Barcode normalize(const Barcode& b) {
    Barcode out;
    for (const Bar& bar : b.bars)
        for (std::size_t i = 0; i < bar.rank; ++i) out.bars.push_back({bar.iv, 1});
    std::sort(out.bars.begin(), out.bars.end());
    return out;
}

bool barcodes_equal(const Barcode& a, const Barcode& b) {
    return normalize(a).bars == normalize(b).bars;
}

} // namespace zzmod
