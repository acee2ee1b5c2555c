#include "zzmod/decomposer.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace zzmod {

namespace {

Submodule pad_submodule(const PersModule& m, Interval iv, const Submodule& local) {
    Submodule s = zero_submodule(m);
    for (int v = iv.lo; v <= iv.hi; ++v) s.at(v) = local.at(v - iv.lo + 1);
    return s;
}

std::vector<Submodule> decompose_pc_impl(const PersModule& m);

std::vector<Submodule> decompose_a1(const PersModule& m) {
    if (m.rank_at(1) == 0) return {};
    Submodule s;
    s.gens.push_back(IntMatrix::identity(m.rank_at(1)));
    return {s};
}

// A_2 with a forward edge: F_1 = ker (+) G_1 and F_2 = im (+) G_2; the
// middle pair G_1 -> A(G_1) carries the through bar.
std::vector<Submodule> decompose_a2_forward(const PersModule& m) {
    const IntMatrix& a = m.edge(1);
    const std::size_t r1 = m.rank_at(1), r2 = m.rank_at(2);
    std::vector<Submodule> out;

    IntMatrix ker = kernel_basis(a);
    if (ker.cols() > 0) out.push_back({{ker, IntMatrix(r2, 0)}});

    IntMatrix g1 = hnf_cols(complement(ker, r1));
    if (g1.cols() > 0) out.push_back({{g1, hnf_cols(a * g1)}});

    IntMatrix g2 = hnf_cols(complement(image_basis(a), r2));
    if (g2.cols() > 0) out.push_back({{IntMatrix(r1, 0), g2}});
    return out;
}

std::vector<Submodule> decompose_a2(const PersModule& m) {
    if (m.shape.orientation(1) == Direction::Forward) return decompose_a2_forward(m);
    auto pieces = decompose_a2_forward(mirror(m));
    for (auto& s : pieces) s = mirror(s);
    return pieces;
}

struct PeakParts {
    std::vector<Submodule> left_done;  // supported in [1, x-1]
    std::vector<Submodule> right_done; // supported in [x+1, n]
    Submodule peak_part;               // full at x, peak at x
};

// Peak split at x: both one-sided restrictions are decomposed
// recursively; summands through x glue into the peak part (they carry
// the full fiber at x since the others vanish there), the rest are
// finished summands already.
PeakParts split_at_peak(const PersModule& m, int x) {
    const int n = m.shape.vertex_count();
    PeakParts out;
    out.peak_part = zero_submodule(m);

    std::vector<Submodule> keep_left, keep_right;
    for (auto& s : decompose_pc_impl(restrict_to(m, {1, x}))) {
        if (s.at(x).cols() == 0)
            out.left_done.push_back(pad_submodule(m, {1, x}, s));
        else
            keep_left.push_back(std::move(s));
    }
    for (auto& s : decompose_pc_impl(restrict_to(m, {x, n}))) {
        if (s.at(1).cols() == 0)
            out.right_done.push_back(pad_submodule(m, {x, n}, s));
        else
            keep_right.push_back(std::move(s));
    }

    for (int v = 1; v < x; ++v) {
        IntMatrix g(m.rank_at(v), 0);
        for (const Submodule& s : keep_left) g = hconcat(g, s.at(v));
        out.peak_part.at(v) = hnf_cols(g);
    }
    for (int v = x; v <= n; ++v) {
        IntMatrix g(m.rank_at(v), 0);
        for (const Submodule& s : keep_right) g = hconcat(g, s.at(v - x + 1));
        out.peak_part.at(v) = hnf_cols(g);
    }
    if (out.peak_part.at(x) != IntMatrix::identity(m.rank_at(x)))
        throw InternalCheckError("split_at_peak: peak part is not full at the pivot");
    return out;
}

std::vector<Submodule> case1_rows(const PersModule& m) {
    const IntMatrix &a = m.edge(1), &b = m.edge(2);
    const std::size_t r1 = m.rank_at(1), r2 = m.rank_at(2), r3 = m.rank_at(3);

    IntMatrix im = image_basis(a);
    IntMatrix ker = kernel_basis(b);
    IntMatrix w = intersect(im, ker);
    IntMatrix g = complement_within(w, im);
    IntMatrix k = complement_within(w, ker);
    IntMatrix h = hnf_cols(complement(hnf_cols(hconcat(im, ker)), r2));

    std::vector<Submodule> rows;
    auto add = [&](IntMatrix g1, IntMatrix g2, IntMatrix g3) {
        if (g2.cols() == 0) return;
        rows.push_back({{std::move(g1), std::move(g2), std::move(g3)}});
    };
    add(IntMatrix(r1, 0), h, hnf_cols(b * h));
    add(preimage(a, g), g, hnf_cols(b * g));
    add(preimage(a, w), w, IntMatrix(r3, 0));
    add(IntMatrix(r1, 0), k, IntMatrix(r3, 0));
    return rows;
}

std::vector<Submodule> case2_rows(const PersModule& m) {
    const IntMatrix &a = m.edge(1), &c = m.edge(2);
    const std::size_t r1 = m.rank_at(1), r2 = m.rank_at(2), r3 = m.rank_at(3);

    IntMatrix im_a = image_basis(a);
    IntMatrix im_c = image_basis(c);
    IntMatrix w = intersect(im_a, im_c);
    IntMatrix g = complement_within(w, im_a);
    IntMatrix k = complement_within(w, im_c);
    IntMatrix h = hnf_cols(complement(hnf_cols(hconcat(im_a, im_c)), r2));

    std::vector<Submodule> rows;
    auto add = [&](IntMatrix g1, IntMatrix g2, IntMatrix g3) {
        if (g2.cols() == 0) return;
        rows.push_back({{std::move(g1), std::move(g2), std::move(g3)}});
    };
    add(IntMatrix(r1, 0), h, IntMatrix(r3, 0));
    add(preimage(a, g), g, IntMatrix(r3, 0));
    add(preimage(a, w), w, preimage(c, w));
    add(IntMatrix(r1, 0), k, preimage(c, k));
    return rows;
}

std::vector<Submodule> case3_rows(const PersModule& m) {
    const IntMatrix &b1 = m.edge(1), &b3 = m.edge(2);
    const std::size_t r1 = m.rank_at(1), r2 = m.rank_at(2), r3 = m.rank_at(3);

    IntMatrix k1 = kernel_basis(b1);
    IntMatrix k3 = kernel_basis(b3);
    IntMatrix w = intersect(k1, k3);
    IntMatrix g = complement_within(w, k1);
    IntMatrix k = complement_within(w, k3);
    IntMatrix h = hnf_cols(complement(hnf_cols(hconcat(k1, k3)), r2));

    std::vector<Submodule> rows;
    auto add = [&](IntMatrix g1, IntMatrix g2, IntMatrix g3) {
        if (g2.cols() == 0) return;
        rows.push_back({{std::move(g1), std::move(g2), std::move(g3)}});
    };
    add(IntMatrix(r1, 0), g, hnf_cols(b3 * g));
    add(hnf_cols(b1 * h), h, hnf_cols(b3 * h));
    add(hnf_cols(b1 * k), k, IntMatrix(r3, 0));
    add(IntMatrix(r1, 0), w, IntMatrix(r3, 0));
    return rows;
}

std::vector<Submodule> a3_peak_rows(const PersModule& m) {
    const Direction d1 = m.shape.orientation(1), d2 = m.shape.orientation(2);
    if (d1 == Direction::Forward && d2 == Direction::Forward) return case1_rows(m);
    if (d1 == Direction::Backward && d2 == Direction::Backward) {
        auto rows = case1_rows(mirror(m));
        for (auto& s : rows) s = mirror(s);
        return rows;
    }
    if (d1 == Direction::Forward) return case2_rows(m);
    return case3_rows(m);
}

// Module with peaks at 2 and n-1: the interior maps are isomorphisms, so
// the middle run collapses to a single A_3 vertex.  Summands come back
// through the recorded transports.
std::vector<Submodule> a3_reduce_decompose(const PersModule& m) {
    const int n = m.shape.vertex_count();
    if (m.is_zero()) return {};

    std::vector<IntMatrix> t(static_cast<std::size_t>(n) + 1); // t[y]: m_2 -> m_y
    t[2] = IntMatrix::identity(m.rank_at(2));
    for (int y = 2; y < n - 1; ++y) {
        if (m.shape.orientation(y) == Direction::Forward)
            t[static_cast<std::size_t>(y) + 1] = m.edge(y) * t[y];
        else
            t[static_cast<std::size_t>(y) + 1] = inverse_unimodular(m.edge(y)) * t[y];
    }

    const Direction d1 = m.shape.orientation(1), d2 = m.shape.orientation(n - 1);
    PersModule a3;
    a3.shape = ZigzagShape({d1, d2});
    a3.ranks = {m.rank_at(1), m.rank_at(2), m.rank_at(n)};
    a3.edges.push_back(m.edge(1));
    if (d2 == Direction::Forward)
        a3.edges.push_back(m.edge(n - 1) * t[static_cast<std::size_t>(n) - 1]);
    else
        a3.edges.push_back(inverse_unimodular(t[static_cast<std::size_t>(n) - 1]) *
                           m.edge(n - 1));

    std::vector<Submodule> out;
    for (const Submodule& r : a3_peak_rows(a3)) {
        Submodule s = zero_submodule(m);
        s.at(1) = r.at(1);
        for (int y = 2; y <= n - 1; ++y) s.at(y) = hnf_cols(t[y] * r.at(2));
        s.at(n) = r.at(3);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Submodule> decompose_pc_impl(const PersModule& m) {
    const int n = m.shape.vertex_count();
    if (m.is_zero()) return {};
    if (n == 1) return decompose_a1(m);
    if (n == 2) return decompose_a2(m);

    // Split at x = 2, then at x = n-1 on the peak part.  The one-sided
    // recursions return their summands fully decomposed, so the parts that
    // die at the pivot come out finished and are never re-decomposed.
    std::vector<Submodule> out;
    PeakParts first = split_at_peak(m, 2);
    for (auto& s : first.left_done) out.push_back(std::move(s));
    for (auto& s : first.right_done) out.push_back(std::move(s));
    if (first.peak_part.is_zero()) return out;

    PersModule nh = abstract_submodule(m, first.peak_part);
    PeakParts second = split_at_peak(nh, n - 1);
    for (auto& s : second.left_done)
        out.push_back(push_through(first.peak_part, s));
    for (auto& s : second.right_done)
        out.push_back(push_through(first.peak_part, s));
    if (second.peak_part.is_zero()) return out;

    PersModule nht = abstract_submodule(nh, second.peak_part);
    for (const Submodule& s : a3_reduce_decompose(nht))
        out.push_back(push_through(first.peak_part, push_through(second.peak_part, s)));
    return out;
}

void require_a3(const PersModule& m, Direction d1, Direction d2, const char* what) {
    ensure_valid(m);
    if (m.shape.vertex_count() != 3 || m.shape.orientation(1) != d1 ||
        m.shape.orientation(2) != d2)
        throw PreconditionError(std::string(what) + ": wrong A_3 orientation");
}

void require_injective(const IntMatrix& e, const char* what) {
    if (kernel_basis(e).cols() != 0)
        throw PreconditionError(std::string(what) + ": edge map not injective");
}

void require_surjective(const IntMatrix& e, const char* what) {
    if (!cokernel_invariants(e).is_trivial())
        throw PreconditionError(std::string(what) + ": edge map not surjective");
}

void extend_rightward(const PersModule& m, int hi, std::vector<Submodule>& cur) {
    const int n = m.shape.vertex_count();
    const Direction d = m.shape.orientation(hi);
    for (int i = hi + 1; i < n; ++i)
        if (m.shape.orientation(i) != d)
            throw PreconditionError("extend_summand: boundary side is not a monotone run");
    if (d == Direction::Backward) {
        // run maps into the boundary; injective case, extend by preimages
        for (int w = hi + 1; w <= n; ++w)
            require_injective(path_map(m, w, hi), "extend_summand");
        for (Submodule& s : cur)
            for (int w = hi + 1; w <= n; ++w)
                s.at(w) = preimage(path_map(m, w, hi), s.at(hi));
    } else {
        // run maps out of the boundary; surjective case, transport images
        for (int w = hi + 1; w <= n; ++w)
            require_surjective(path_map(m, hi, w), "extend_summand");
        (void)split_surjection(path_map(m, hi, n)); // section exists
        for (Submodule& s : cur)
            for (int w = hi + 1; w <= n; ++w)
                s.at(w) = hnf_cols(path_map(m, hi, w) * s.at(hi));
    }
}

} // namespace

std::vector<Submodule> decompose_projective_constant(const PersModule& m) {
    try {
        return decompose_pc_impl(m);
    } catch (const NotFreeQuotientError& e) {
        throw PccViolationError(std::string("splitting failed: ") + e.what());
    } catch (const NotSurjectiveError& e) {
        throw PccViolationError(std::string("section failed: ") + e.what());
    }
}

void sort_decomposition(Decomposition& d) {
    auto key = [](const Submodule& s) {
        auto sup = support_of(s);
        const int lo = sup ? sup->lo : 0, hi = sup ? sup->hi : 0;
        const std::size_t r = sup ? s.at(sup->lo).cols() : 0;
        return std::tuple<int, int, std::size_t>(lo, hi, r);
    };
    std::stable_sort(d.summands.begin(), d.summands.end(),
                     [&](const Submodule& a, const Submodule& b) {
                         auto ka = key(a), kb = key(b);
                         if (ka != kb) return ka < kb;
                         for (std::size_t i = 0; i < a.gens.size(); ++i) {
                             int c = compare(a.gens[i], b.gens[i]);
                             if (c != 0) return c < 0;
                         }
                         return false;
                     });
}

DecompOutcome decompose(const PersModule& m) {
    ensure_valid(m);
    DecompOutcome out;
    PccReport pcc = check_all(m);
    if (!pcc.overall) {
        out.refusal = *pcc.first_failure();
        return out;
    }

    Decomposition d;
    try {
        d.summands = decompose_projective_constant(m);
    } catch (const PccViolationError& e) {
        throw InternalCheckError(std::string("decomposition failed after the PCC passed: ") +
                                 e.what());
    }
    if (!verify_decomposition(m, d).ok)
        throw InternalCheckError("projective constant decomposition failed verification");

    d = refine_to_rank_one(m, d);
    if (!verify_decomposition(m, d).ok)
        throw InternalCheckError("refined decomposition failed verification");

    sort_decomposition(d);
    out.barcode = barcode_of(d);
    out.decomposition = std::move(d);
    return out;
}

PeakSplitResult peak_split(const PersModule& m, int x) {
    ensure_valid(m);
    const int n = m.shape.vertex_count();
    if (!(1 < x && x < n))
        throw PreconditionError("peak_split: pivot must be interior");

    PeakParts c = [&] {
        try {
            return split_at_peak(m, x);
        } catch (const NotFreeQuotientError& e) {
            throw PccViolationError(std::string("splitting failed: ") + e.what());
        } catch (const NotSurjectiveError& e) {
            throw PccViolationError(std::string("section failed: ") + e.what());
        }
    }();

    PeakSplitResult res;
    res.g.sub = merge_submodules(m, c.left_done);
    res.j.sub = merge_submodules(m, c.right_done);
    res.h.sub = c.peak_part;
    res.g.module = abstract_submodule(m, res.g.sub);
    res.h.module = abstract_submodule(m, res.h.sub);
    res.j.module = abstract_submodule(m, res.j.sub);
    return res;
}

Decomposition decompose_a3_case1(const PersModule& m) {
    ensure_valid(m);
    if (m.shape.vertex_count() != 3)
        throw PreconditionError("decompose_a3_case1: not an A_3 module");
    const Direction d1 = m.shape.orientation(1), d2 = m.shape.orientation(2);
    if (d1 != d2) throw PreconditionError("decompose_a3_case1: shape not monotone");
    const PersModule mm = d1 == Direction::Forward ? m : mirror(m);
    require_injective(mm.edge(1), "decompose_a3_case1");
    require_surjective(mm.edge(2), "decompose_a3_case1");
    auto rows = case1_rows(mm);
    if (d1 == Direction::Backward)
        for (auto& s : rows) s = mirror(s);
    return Decomposition{std::move(rows)};
}

Decomposition decompose_a3_case2(const PersModule& m) {
    require_a3(m, Direction::Forward, Direction::Backward, "decompose_a3_case2");
    require_injective(m.edge(1), "decompose_a3_case2");
    require_injective(m.edge(2), "decompose_a3_case2");
    return Decomposition{case2_rows(m)};
}

Decomposition decompose_a3_case3(const PersModule& m) {
    require_a3(m, Direction::Backward, Direction::Forward, "decompose_a3_case3");
    require_surjective(m.edge(1), "decompose_a3_case3");
    require_surjective(m.edge(2), "decompose_a3_case3");
    return Decomposition{case3_rows(m)};
}

Decomposition refine_to_rank_one(const PersModule& m, const Decomposition& d) {
    Decomposition out;
    for (const Submodule& s : d.summands) {
        auto sup = support_of(s);
        if (!sup) continue;
        const std::size_t r = s.at(sup->lo).cols();
        if (r == 1) {
            out.summands.push_back(s);
            continue;
        }
        PersModule a = abstract_submodule(m, s);
        // one basis choice at the left end, transported across the support
        std::vector<IntMatrix> basis(s.gens.size());
        IntMatrix t = IntMatrix::identity(r);
        basis[static_cast<std::size_t>(sup->lo - 1)] = s.at(sup->lo);
        for (int v = sup->lo; v < sup->hi; ++v) {
            if (m.shape.orientation(v) == Direction::Forward)
                t = a.edge(v) * t;
            else
                t = inverse_unimodular(a.edge(v)) * t;
            basis[static_cast<std::size_t>(v)] = s.at(v + 1) * t;
        }
        for (std::size_t j = 0; j < r; ++j) {
            Submodule piece = zero_submodule(m);
            for (int v = sup->lo; v <= sup->hi; ++v)
                piece.at(v) =
                    hnf_cols(basis[static_cast<std::size_t>(v - 1)].column_at(j));
            out.summands.push_back(std::move(piece));
        }
    }
    return out;
}

Decomposition extend_summand(const PersModule& m, Interval iv,
                             const Decomposition& inner) {
    ensure_valid(m);
    m.shape.require_interval(iv);
    const int n = m.shape.vertex_count();

    std::vector<Submodule> cur;
    for (const Submodule& s : inner.summands) cur.push_back(pad_submodule(m, iv, s));

    if (iv.hi < n) extend_rightward(m, iv.hi, cur);
    if (iv.lo > 1) {
        PersModule mm = mirror(m);
        for (Submodule& s : cur) s = mirror(s);
        extend_rightward(mm, n + 1 - iv.lo, cur);
        for (Submodule& s : cur) s = mirror(s);
    }

    Decomposition out{std::move(cur)};
    if (!verify_decomposition(m, out).ok)
        throw PreconditionError(
            "extend_summand: inner decomposition incompatible with the boundary runs");
    return out;
}

} // namespace zzmod
