// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "zzmod/decomposer.hpp"
#include "zzmod/generator.hpp"
#include "oracles.hpp"

using namespace zzmod;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

ZigzagShape random_shape(SplitMix64& rng, int min_n, int max_n) {
    const int n = static_cast<int>(rng.range(min_n, max_n));
    std::vector<Direction> dirs;
    for (int i = 0; i + 1 < n; ++i)
        dirs.push_back(rng.range(0, 1) ? Direction::Backward : Direction::Forward);
    return ZigzagShape(std::move(dirs));
}

std::vector<ZigzagShape> all_shapes_up_to(int max_n) {
    std::vector<ZigzagShape> shapes;
    for (int n = 1; n <= max_n; ++n)
        for (int bits = 0; bits < (1 << (n - 1)); ++bits) {
            std::vector<Direction> dirs;
            for (int k = 0; k + 1 < n; ++k)
                dirs.push_back(bits & (1 << k) ? Direction::Backward : Direction::Forward);
            shapes.emplace_back(std::move(dirs));
        }
    return shapes;
}

// 1. Round-trip barcode recovery over 500 seeded decomposable instances.
void criterion_round_trip() {
    const auto t0 = std::chrono::steady_clock::now();
    int ok = 0;
    const int total = 500;
#pragma omp parallel for schedule(dynamic) reduction(+ : ok)
    for (int i = 0; i < total; ++i) {
        SplitMix64 meta(1000 + static_cast<std::uint64_t>(i));
        ZigzagShape shape = random_shape(meta, 2, 10);
        const int level = static_cast<int>(meta.range(0, 4));
        GeneratedInstance inst = gen_decomposable(meta.next(), shape, 8, 1, level);
        DecompOutcome res = decompose(inst.module);
        if (res.success() && verify_decomposition(inst.module, *res.decomposition).ok &&
            barcodes_equal(*res.barcode, inst.truth))
            ++ok;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char detail[128];
    std::snprintf(detail, sizeof detail, "%d/%d recovered in %.1fs", ok, total, secs);
    report(1, "round-trip barcode recovery", ok == total && secs < 120.0, detail);
}

// 2. decompose succeeds exactly when the PCC holds; refusals reproduce.
void criterion_equivalence() {
    int ok = 0, succeeded = 0;
    const int total = 300;
#pragma omp parallel for schedule(dynamic) reduction(+ : ok, succeeded)
    for (int i = 0; i < total; ++i) {
        SplitMix64 meta(2000 + static_cast<std::uint64_t>(i));
        ZigzagShape shape = random_shape(meta, 2, 6);
        PersModule m = gen_adversarial(meta.next(), shape, 3, 3);
        const bool pcc = check_all(m).overall;
        DecompOutcome res = decompose(m);
        bool good = res.success() == pcc;
        if (!res.success()) {
            PairReport again = check_pair(m, res.refusal->x, res.refusal->y);
            good = good && !again.pass() && again == *res.refusal;
        } else {
            good = good && verify_decomposition(m, *res.decomposition).ok;
            ++succeeded;
        }
        if (good) ++ok;
    }
    char detail[128];
    std::snprintf(detail, sizeof detail, "%d/%d consistent (%d decomposable)", ok, total,
                  succeeded);
    report(2, "sufficiency <=> necessity equivalence", ok == total, detail);
}

// 3. Smith form contract on 1000 random matrices, exact.
void criterion_snf_contract() {
    int ok = 0;
    const int total = 1000;
#pragma omp parallel for schedule(dynamic) reduction(+ : ok)
    for (int i = 0; i < total; ++i) {
        SplitMix64 rng(3000 + static_cast<std::uint64_t>(i));
        const std::size_t rows = static_cast<std::size_t>(rng.range(0, 6));
        const std::size_t cols = static_cast<std::size_t>(rng.range(0, 6));
        IntMatrix a(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) a.at(r, c) = rng.range(-9, 9);
        SnfResult f = snf(a);
        bool good = f.u * a * f.v == f.s;
        Int du = det(f.u), dv = det(f.v);
        good = good && (du == 1 || du == -1) && (dv == 1 || dv == -1);
        const std::size_t rk = f.rank();
        for (std::size_t k = 0; k + 1 < rk; ++k)
            good = good && f.diag(k + 1) % f.diag(k) == 0;
        for (std::size_t k = rk; k < std::min(rows, cols); ++k)
            good = good && f.diag(k) == 0;
        std::vector<Int> mine;
        for (std::size_t k = 0; k < rk; ++k) mine.push_back(f.diag(k));
        good = good && mine == oracles::naive_invariant_factors(a);
        if (good) ++ok;
    }
    report(3, "snf contract suite", ok == total,
           std::to_string(ok) + "/" + std::to_string(total) + " exact");
}

// 4. check_pair matches the closed-form oracle on all interval modules
// over all shapes with n <= 6.
void criterion_colimit_oracle() {
    long checked = 0, mismatches = 0;
    for (const ZigzagShape& shape : all_shapes_up_to(6)) {
        const int n = shape.vertex_count();
        for (int lo = 1; lo <= n; ++lo)
            for (int hi = lo; hi <= n; ++hi)
                for (std::size_t rank : {std::size_t(1), std::size_t(2)}) {
                    PersModule m = interval_module(shape, {lo, hi}, rank);
                    for (int x = 1; x <= n; ++x)
                        for (int y = x; y <= n; ++y) {
                            PairReport pr = check_pair(m, x, y);
                            OracleAnswer oa =
                                interval_colimit_oracle(shape, {lo, hi}, rank, {x, y});
                            ++checked;
                            if (pr.c1.invariants != oa.colim ||
                                pr.c2.invariants != oa.coker_x ||
                                pr.c3.invariants != oa.coker_y ||
                                pr.c4.invariants != oa.coker_xy)
                                ++mismatches;
                        }
                }
    }
    report(4, "colimit oracle agreement", mismatches == 0,
           std::to_string(checked) + " comparisons, " + std::to_string(mismatches) +
               " mismatches");
}

// 5. The three A_3 case procedures on their worked examples, plus the
// minimal refusal witnesses.
void criterion_a3_goldens() {
    bool good = true;
    auto expect_bars = [&](const PersModule& m, const Decomposition& d,
                           std::vector<Bar> want) {
        Barcode w;
        w.bars = std::move(want);
        good = good && verify_decomposition(m, d).ok && barcodes_equal(barcode_of(d), w);
    };

    {
        PersModule m{ZigzagShape({Direction::Forward, Direction::Forward}),
                     {1, 1, 1},
                     {IntMatrix{{1}}, IntMatrix{{1}}}};
        expect_bars(m, decompose_a3_case1(m), {{{1, 3}, 1}});
    }
    {
        PersModule m{ZigzagShape({Direction::Forward, Direction::Forward}),
                     {1, 2, 1},
                     {IntMatrix{{1}, {0}}, IntMatrix{{0, 1}}}};
        expect_bars(m, decompose_a3_case1(m), {{{1, 2}, 1}, {{2, 3}, 1}});
    }
    {
        PersModule m{ZigzagShape({Direction::Forward, Direction::Forward}),
                     {0, 1, 1},
                     {IntMatrix(1, 0), IntMatrix{{1}}}};
        expect_bars(m, decompose_a3_case1(m), {{{2, 3}, 1}});
    }
    {
        PersModule m{ZigzagShape({Direction::Forward, Direction::Backward}),
                     {1, 1, 1},
                     {IntMatrix{{1}}, IntMatrix{{1}}}};
        expect_bars(m, decompose_a3_case2(m), {{{1, 3}, 1}});
    }
    {
        PersModule m{ZigzagShape({Direction::Forward, Direction::Backward}),
                     {1, 2, 1},
                     {IntMatrix{{1}, {0}}, IntMatrix{{0}, {1}}}};
        expect_bars(m, decompose_a3_case2(m), {{{1, 2}, 1}, {{2, 3}, 1}});
    }
    {
        PersModule m{ZigzagShape({Direction::Forward, Direction::Backward}),
                     {0, 1, 0},
                     {IntMatrix(1, 0), IntMatrix(1, 0)}};
        expect_bars(m, decompose_a3_case2(m), {{{2, 2}, 1}});
    }
    {
        PersModule m{ZigzagShape({Direction::Backward, Direction::Forward}),
                     {1, 1, 1},
                     {IntMatrix{{1}}, IntMatrix{{1}}}};
        expect_bars(m, decompose_a3_case3(m), {{{1, 3}, 1}});
    }
    {
        PersModule m{ZigzagShape({Direction::Backward, Direction::Forward}),
                     {1, 2, 1},
                     {IntMatrix{{1, 0}}, IntMatrix{{0, 1}}}};
        expect_bars(m, decompose_a3_case3(m), {{{1, 2}, 1}, {{2, 3}, 1}});
    }
    {
        PersModule m{ZigzagShape({Direction::Backward, Direction::Forward}),
                     {0, 2, 0},
                     {IntMatrix(0, 2), IntMatrix(0, 2)}};
        expect_bars(m, decompose_a3_case3(m), {{{2, 2}, 1}, {{2, 2}, 1}});
    }

    // minimal refusal witnesses around a doubling edge
    auto expect_refusal = [&](const PersModule& m, int x, int y, int cond) {
        DecompOutcome res = decompose(m);
        good = good && !res.success() && res.refusal->x == x && res.refusal->y == y &&
               res.refusal->first_failing_condition() == cond;
        if (res.refusal) {
            const ConditionResult& c = cond == 2   ? res.refusal->c2
                                       : cond == 3 ? res.refusal->c3
                                                   : res.refusal->c1;
            good = good && c.invariants.torsion_factors == std::vector<Int>{2};
        }
    };
    expect_refusal({ZigzagShape({Direction::Forward}), {1, 1}, {IntMatrix{{2}}}}, 1, 2, 2);
    expect_refusal({ZigzagShape({Direction::Backward}), {1, 1}, {IntMatrix{{2}}}}, 1, 2, 3);
    expect_refusal({ZigzagShape({Direction::Forward, Direction::Forward}),
                    {1, 1, 1},
                    {IntMatrix{{2}}, IntMatrix{{1}}}},
                   1, 2, 2);
    expect_refusal({ZigzagShape({Direction::Forward, Direction::Backward}),
                    {1, 1, 1},
                    {IntMatrix{{1}}, IntMatrix{{2}}}},
                   1, 3, 3);

    report(5, "A_3 golden cases and refusal witnesses", good, "");
}

// 6. Barcode invariance under extra unimodular scrambles.
void criterion_uniqueness() {
    int ok = 0;
    const int total = 100;
#pragma omp parallel for schedule(dynamic) reduction(+ : ok)
    for (int i = 0; i < total; ++i) {
        SplitMix64 meta(6000 + static_cast<std::uint64_t>(i));
        ZigzagShape shape = random_shape(meta, 2, 8);
        GeneratedInstance inst = gen_decomposable(meta.next(), shape, 6, 2, 3);
        SplitMix64 extra(meta.next());
        PersModule scrambled = scramble(extra, inst.module, 4);
        DecompOutcome a = decompose(inst.module);
        DecompOutcome b = decompose(scrambled);
        if (a.success() && b.success() && barcodes_equal(*a.barcode, *b.barcode)) ++ok;
    }
    report(6, "barcode uniqueness under scrambles", ok == total,
           std::to_string(ok) + "/" + std::to_string(total));
}

// 7. Peak splits: verified three-way direct sum with the stated supports
// and a genuine peak.
void criterion_peak_split() {
    int ok = 0;
    const int total = 100;
#pragma omp parallel for schedule(dynamic) reduction(+ : ok)
    for (int i = 0; i < total; ++i) {
        SplitMix64 meta(7000 + static_cast<std::uint64_t>(i));
        ZigzagShape shape = random_shape(meta, 3, 8);
        GeneratedInstance inst = gen_decomposable(meta.next(), shape, 6, 2, 3);
        const int x = static_cast<int>(meta.range(2, shape.vertex_count() - 1));
        PeakSplitResult ps = peak_split(inst.module, x);
        bool good = is_internal_direct_sum(inst.module, {ps.g.sub, ps.h.sub, ps.j.sub});
        for (int v = x; v <= shape.vertex_count(); ++v)
            good = good && ps.g.sub.at(v).cols() == 0;
        for (int v = 1; v <= x; ++v) good = good && ps.j.sub.at(v).cols() == 0;
        good = good && has_peak(ps.h.module, x);
        if (good) ++ok;
    }
    report(7, "peak-split contract", ok == total,
           std::to_string(ok) + "/" + std::to_string(total));
}

// 8. The integer barcode agrees with the rational-coefficient oracle.
void criterion_field_cross_check() {
    int ok = 0;
    const int total = 200;
#pragma omp parallel for schedule(dynamic) reduction(+ : ok)
    for (int i = 0; i < total; ++i) {
        SplitMix64 meta(8000 + static_cast<std::uint64_t>(i));
        ZigzagShape shape = random_shape(meta, 2, 6);
        GeneratedInstance inst = gen_decomposable(meta.next(), shape, 4, 2, 3);
        DecompOutcome res = decompose(inst.module);
        if (!res.success()) continue;
        auto fb = oracles::field_barcode(inst.module);
        if (fb && barcodes_equal(*res.barcode, *fb)) ++ok;
    }
    report(8, "field cross-check", ok == total,
           std::to_string(ok) + "/" + std::to_string(total));
}

} // namespace

int main() {
    criterion_round_trip();
    criterion_equivalence();
    criterion_snf_contract();
    criterion_colimit_oracle();
    criterion_a3_goldens();
    criterion_uniqueness();
    criterion_peak_split();
    criterion_field_cross_check();
    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
