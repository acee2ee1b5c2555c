#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "zzmod/cli.hpp"
#include "zzmod/decomposer.hpp"
#include "zzmod/generator.hpp"
#include "zzmod/json_io.hpp"

namespace zzmod::cli {

namespace {

using Dir = Direction;

PersModule a2_module(Dir d, const IntMatrix& e) {
    PersModule m;
    m.shape = ZigzagShape({d});
    m.ranks = {d == Dir::Forward ? e.cols() : e.rows(),
               d == Dir::Forward ? e.rows() : e.cols()};
    m.edges = {e};
    return m;
}

PersModule a3_module(Dir d1, Dir d2, std::vector<std::size_t> ranks, IntMatrix e1,
                     IntMatrix e2) {
    PersModule m;
    m.shape = ZigzagShape({d1, d2});
    m.ranks = std::move(ranks);
    m.edges = {std::move(e1), std::move(e2)};
    return m;
}

Barcode bars(std::vector<Bar> v) {
    Barcode b;
    b.bars = std::move(v);
    return b;
}

} // namespace

int run_selfcheck(std::ostream& out) {
    struct Case {
        std::string name;
        std::function<bool()> check;
    };
    std::vector<Case> cases;
    auto add = [&](std::string name, std::function<bool()> f) {
        cases.push_back({std::move(name), std::move(f)});
    };

    // --- exact integer linear algebra ---
    add("snf zero 1x1", [] {
        SnfResult f = snf(IntMatrix{{0}});
        return f.s == IntMatrix{{0}} && f.u.is_identity() && f.v.is_identity();
    });
    add("snf 1x1", [] { return snf(IntMatrix{{2}}).s == IntMatrix{{2}}; });
    add("snf diag(2,4)", [] {
        IntMatrix a{{2, 4}, {6, 8}};
        SnfResult f = snf(a);
        return f.s.at(0, 0) == 2 && f.s.at(1, 1) == 4 && f.u * a * f.v == f.s &&
               is_unimodular(f.u) && is_unimodular(f.v);
    });
    add("snf transform inverses", [] {
        IntMatrix a{{3, 1, -2}, {0, 5, 4}};
        SnfResult f = snf(a);
        return (f.u * f.u_inv).is_identity() && (f.v * f.v_inv).is_identity();
    });
    add("hnf gcd row", [] { return hnf_cols(IntMatrix{{2, 3}}) == IntMatrix{{1}}; });
    add("hnf drops dependent columns", [] {
        return hnf_cols(IntMatrix{{1, 1}, {0, 0}}) == IntMatrix{{1}, {0}};
    });
    add("kernel of (2 4)", [] {
        return kernel_basis(IntMatrix{{2, 4}}) == IntMatrix{{2}, {-1}};
    });
    add("cokernel of x2", [] {
        CokerInvariants ci = cokernel_invariants(IntMatrix{{2}});
        return ci.free_rank == 0 && ci.torsion_factors == std::vector<Int>{2};
    });
    add("solve upper triangular", [] {
        auto x = solve(IntMatrix{{1, 1}, {0, 2}}, IntMatrix::column({1, 2}));
        return x && *x == IntMatrix::column({0, 1});
    });
    add("solve unsolvable", [] {
        return !solve(IntMatrix{{2}}, IntMatrix::column({3})).has_value();
    });
    add("split surjection (2 1)", [] {
        IntMatrix phi{{2, 1}};
        IntMatrix psi = split_surjection(phi);
        return (phi * psi).is_identity();
    });
    add("complement of (1,1)", [] {
        IntMatrix g{{1}, {1}};
        IntMatrix c = complement(g, 2);
        return is_unimodular(hconcat(g, c));
    });
    add("intersect 2Z with Z", [] {
        IntMatrix a{{2}, {0}};
        IntMatrix b{{1}, {0}};
        return intersect(a, b) == a;
    });
    add("preimage of 4Z under x2", [] {
        return preimage(IntMatrix{{2}}, IntMatrix{{4}}) == IntMatrix{{2}};
    });
    add("unimodular det check", [] {
        return is_unimodular(IntMatrix{{1, 3}, {1, 4}}) && !is_unimodular(IntMatrix{{2}});
    });

    // --- pcc and colimits ---
    add("pcc refusal of x2 on A_2", [] {
        PersModule m = a2_module(Dir::Forward, IntMatrix{{2}});
        PccReport rep = check_all(m);
        const PairReport* f = rep.first_failure();
        return !rep.overall && f && f->x == 1 && f->y == 2 && !f->c2.pass() &&
               f->c2.invariants.torsion_factors == std::vector<Int>{2} && f->c1.pass() &&
               f->c3.pass() && f->c4.pass();
    });
    add("pcc of interval modules", [] {
        ZigzagShape sh({Dir::Forward, Dir::Backward, Dir::Forward});
        for (int lo = 1; lo <= 4; ++lo)
            for (int hi = lo; hi <= 4; ++hi)
                if (!check_all(interval_module(sh, {lo, hi}, 2)).overall) return false;
        return true;
    });
    add("colimit oracle agreement n<=4", [] {
        for (int bits = 0; bits < 8; ++bits) {
            std::vector<Dir> dirs;
            for (int k = 0; k < 3; ++k)
                dirs.push_back(bits & (1 << k) ? Dir::Backward : Dir::Forward);
            ZigzagShape sh(dirs);
            for (int slo = 1; slo <= 4; ++slo)
                for (int shi = slo; shi <= 4; ++shi) {
                    PersModule m = interval_module(sh, {slo, shi}, 1);
                    for (int x = 1; x <= 4; ++x)
                        for (int y = x; y <= 4; ++y) {
                            PairReport pr = check_pair(m, x, y);
                            OracleAnswer oa =
                                interval_colimit_oracle(sh, {slo, shi}, 1, {x, y});
                            if (pr.c1.invariants != oa.colim ||
                                pr.c2.invariants != oa.coker_x ||
                                pr.c3.invariants != oa.coker_y ||
                                pr.c4.invariants != oa.coker_xy)
                                return false;
                        }
                }
        }
        return true;
    });

    // --- decomposition goldens ---
    add("partial identity A_2", [] {
        PersModule m = a2_module(Dir::Forward, IntMatrix{{1, 0}, {0, 0}});
        DecompOutcome res = decompose(m);
        return res.success() &&
               barcodes_equal(*res.barcode,
                              bars({{{1, 1}, 1}, {{1, 2}, 1}, {{2, 2}, 1}}));
    });
    add("A_3 case 1 golden", [] {
        PersModule m = a3_module(Dir::Forward, Dir::Forward, {1, 2, 1},
                                 IntMatrix{{1}, {0}}, IntMatrix{{0, 1}});
        Decomposition d = decompose_a3_case1(m);
        return verify_decomposition(m, d).ok &&
               barcodes_equal(barcode_of(d), bars({{{1, 2}, 1}, {{2, 3}, 1}}));
    });
    add("A_3 case 2 golden", [] {
        PersModule m = a3_module(Dir::Forward, Dir::Backward, {1, 2, 1},
                                 IntMatrix{{1}, {0}}, IntMatrix{{0}, {1}});
        Decomposition d = decompose_a3_case2(m);
        return verify_decomposition(m, d).ok &&
               barcodes_equal(barcode_of(d), bars({{{1, 2}, 1}, {{2, 3}, 1}}));
    });
    add("A_3 case 3 golden", [] {
        PersModule m = a3_module(Dir::Backward, Dir::Forward, {1, 2, 1},
                                 IntMatrix{{1, 0}}, IntMatrix{{0, 1}});
        Decomposition d = decompose_a3_case3(m);
        return verify_decomposition(m, d).ok &&
               barcodes_equal(barcode_of(d), bars({{{1, 2}, 1}, {{2, 3}, 1}}));
    });
    add("interval module refines by rank", [] {
        ZigzagShape sh({Dir::Backward, Dir::Forward});
        DecompOutcome res = decompose(interval_module(sh, {1, 3}, 3));
        return res.success() &&
               barcodes_equal(*res.barcode,
                              bars({{{1, 3}, 1}, {{1, 3}, 1}, {{1, 3}, 1}}));
    });
    add("zero module decomposes empty", [] {
        DecompOutcome res = decompose(zero_module(ZigzagShape({Dir::Forward})));
        return res.success() && res.barcode->bars.empty();
    });
    add("peak split golden", [] {
        ZigzagShape sh({Dir::Forward, Dir::Forward, Dir::Forward});
        PersModule m = direct_sum(interval_module(sh, {1, 2}, 1),
                                  interval_module(sh, {3, 4}, 1));
        PeakSplitResult ps = peak_split(m, 3);
        Decomposition d{{ps.g.sub, ps.h.sub, ps.j.sub}};
        return verify_decomposition(m, d).ok && has_peak(ps.h.module, 3) &&
               ps.g.sub.at(3).cols() == 0 && ps.g.sub.at(4).cols() == 0 &&
               ps.j.sub.at(1).cols() == 0;
    });

    // --- seeded round trips and equivalences ---
    add("round trip seeds 1..8", [] {
        ZigzagShape sh({Dir::Forward, Dir::Backward, Dir::Forward, Dir::Backward});
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            GeneratedInstance inst = gen_decomposable(seed, sh, 5, 2, 3);
            DecompOutcome res = decompose(inst.module);
            if (!res.success() || !barcodes_equal(*res.barcode, inst.truth)) return false;
        }
        return true;
    });
    add("scramble invariance seeds 1..6", [] {
        ZigzagShape sh({Dir::Backward, Dir::Forward, Dir::Forward});
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            GeneratedInstance inst = gen_decomposable(seed, sh, 4, 1, 2);
            SplitMix64 rng(seed ^ 0xabcdef);
            PersModule scrambled = scramble(rng, inst.module, 3);
            DecompOutcome a = decompose(inst.module);
            DecompOutcome b = decompose(scrambled);
            if (!a.success() || !b.success() || !barcodes_equal(*a.barcode, *b.barcode))
                return false;
        }
        return true;
    });
    add("adversarial equivalence seeds 1..20", [] {
        ZigzagShape sh({Dir::Forward, Dir::Backward});
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            PersModule m = gen_adversarial(seed, sh, 2, 2);
            const bool pcc_ok = check_all(m).overall;
            DecompOutcome res = decompose(m);
            if (res.success() != pcc_ok) return false;
            if (!res.success()) {
                PairReport again = check_pair(m, res.refusal->x, res.refusal->y);
                if (again.pass()) return false;
            }
        }
        return true;
    });
    add("generator determinism", [] {
        ZigzagShape sh({Dir::Forward, Dir::Forward});
        GeneratedInstance a = gen_decomposable(42, sh, 4, 2, 4);
        GeneratedInstance b = gen_decomposable(42, sh, 4, 2, 4);
        return a.module == b.module && a.truth.bars == b.truth.bars;
    });
    add("total order sugar", [] {
        Json j = {{"shape", {{"total_order", 3}}},
                  {"ranks", {1, 1, 1}},
                  {"edges", Json::array({to_json(IntMatrix{{1}}), to_json(IntMatrix{{1}})})}};
        PersModule m = module_from_json(j);
        DecompOutcome res = decompose(m);
        return m.shape.is_total_order() && res.success() &&
               barcodes_equal(*res.barcode, bars({{{1, 3}, 1}}));
    });

    int passed = 0, failed = 0;
    for (const Case& c : cases) {
        bool ok = false;
        std::string note;
        try {
            ok = c.check();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        out << (ok ? "ok   " : "FAIL ") << c.name << note << "\n";
        (ok ? passed : failed) += 1;
    }
    out << "selfcheck: " << cases.size() << " cases, " << passed << " passed, " << failed
        << " failed\n";
    return failed;
}

} // namespace zzmod::cli
